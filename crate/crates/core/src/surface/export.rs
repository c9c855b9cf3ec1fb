//! Deterministic renderings of a check report.

use std::fmt::Write as _;

use serde_json::json;

use super::elaborate::CheckReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
    Text,
}

impl ExportFormat {
    pub fn parse(s: &str) -> Option<ExportFormat> {
        match s {
            "json" => Some(ExportFormat::Json),
            "dot" => Some(ExportFormat::Dot),
            "text" => Some(ExportFormat::Text),
            _ => None,
        }
    }
}

pub fn report_json(r: &CheckReport) -> serde_json::Value {
    let decls: Vec<_> = r
        .declarations
        .iter()
        .map(|d| json!({"name": d.name, "kind": d.kind, "line": d.pos.line, "deps": d.deps}))
        .collect();
    let asserts: Vec<_> = r
        .assertions
        .iter()
        .map(|a| {
            json!({
                "line": a.pos.line,
                "column": a.pos.column,
                "assertion": a.text,
                "passed": a.passed,
                "detail": a.detail,
            })
        })
        .collect();
    json!({
        "file": r.file,
        "n": r.n,
        "verdict": if r.passed() { "pass" } else { "fail" },
        "declarations": decls,
        "assertions": asserts,
        "registry": r.registry.to_json(),
    })
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\\\""))
}

pub fn report_dot(r: &CheckReport) -> String {
    let mut out = String::from("digraph derivation {\n");
    for d in &r.declarations {
        let shape = match d.kind {
            "tree" => "box",
            "coh" => "doubleoctagon",
            _ => "ellipse",
        };
        let _ = writeln!(out, "  {} [shape={shape}];", dot_id(&d.name));
    }
    for d in &r.declarations {
        for dep in &d.deps {
            let _ = writeln!(out, "  {} -> {};", dot_id(dep), dot_id(&d.name));
        }
    }
    out.push_str("}\n");
    out
}

pub fn report_text(r: &CheckReport) -> String {
    let mut out = String::new();
    for a in &r.assertions {
        let tag = if a.passed { "ok  " } else { "FAIL" };
        let _ = writeln!(out, "{tag} {}: {}  [{}]", a.pos, a.text, a.detail);
    }
    for c in r.registry.cells() {
        let _ = writeln!(out, "coh {} : dim {} stage {} over {}", c.name(), c.dim(), c.stage(), c.arity());
    }
    let failed = r.failures().count();
    let _ = writeln!(
        out,
        "{}: {} assertions, {} failed, {} coherence cells",
        r.file,
        r.assertions.len(),
        failed,
        r.registry.len()
    );
    out
}

/// Serializes a report; the same report always gives the same bytes.
pub fn export_derivation(r: &CheckReport, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Json => {
            let mut s = serde_json::to_string_pretty(&report_json(r)).expect("json values serialize");
            s.push('\n');
            s.into_bytes()
        }
        ExportFormat::Dot => report_dot(r).into_bytes(),
        ExportFormat::Text => report_text(r).into_bytes(),
    }
}
