//! Runs the checked-in derivation files and compares them with their
//! expected verdicts and golden registry summaries.
//!
//! Each file starts with a header comment `# expect: pass`, `# expect: fail`
//! or `# expect: error`. The golden summary for `foo.gwt` lives in
//! `golden/foo.json` next to it.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde_json::json;

use crate::coherator::Policy;
use crate::exec::Exec;
use crate::surface::{check_source, CheckReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    Pass,
    Fail,
    Error,
}

impl Expect {
    pub fn keyword(self) -> &'static str {
        match self {
            Expect::Pass => "pass",
            Expect::Fail => "fail",
            Expect::Error => "error",
        }
    }

    fn parse(s: &str) -> Option<Expect> {
        match s {
            "pass" => Some(Expect::Pass),
            "fail" => Some(Expect::Fail),
            "error" => Some(Expect::Error),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorpusFile {
    pub path: PathBuf,
    pub text: String,
    pub expect: Expect,
    pub golden: Option<serde_json::Value>,
}

#[derive(Debug, Clone)]
pub struct FileOutcome {
    pub path: PathBuf,
    pub expected: Expect,
    pub actual: Expect,
    pub summary: serde_json::Value,
    /// `None` when no golden file exists.
    pub golden_match: Option<bool>,
    pub message: String,
}

impl FileOutcome {
    pub fn ok(&self) -> bool {
        self.expected == self.actual && self.golden_match != Some(false)
    }
}

#[derive(Debug, Clone)]
pub struct CorpusSummary {
    pub files: Vec<FileOutcome>,
}

impl CorpusSummary {
    pub fn ok(&self) -> bool {
        !self.files.is_empty() && self.files.iter().all(FileOutcome::ok)
    }
}

/// Verdict plus the registry cells by name, dimension and stage.
pub fn registry_summary(report: &CheckReport) -> serde_json::Value {
    let cells: Vec<_> = report
        .registry
        .cells()
        .iter()
        .map(|c| json!({"name": c.name(), "dim": c.dim(), "stage": c.stage()}))
        .collect();
    json!({
        "verdict": if report.passed() { "pass" } else { "fail" },
        "assertions": report.assertions.len(),
        "cells": cells,
    })
}

pub fn expected_verdict(text: &str) -> Option<Expect> {
    text.lines()
        .filter_map(|l| l.trim().strip_prefix('#'))
        .filter_map(|l| l.trim().strip_prefix("expect:"))
        .find_map(|v| Expect::parse(v.trim()))
}

/// All `.gwt` files under `dir`, sorted by path.
pub fn load_corpus(dir: &Path) -> io::Result<Vec<CorpusFile>> {
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "gwt"))
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for path in paths {
        let text = fs::read_to_string(&path)?;
        let expect = expected_verdict(&text).ok_or_else(|| {
            io::Error::new(io::ErrorKind::InvalidData, format!("{}: no `# expect:` header", path.display()))
        })?;
        let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or_default();
        let golden_path = dir.join("golden").join(format!("{stem}.json"));
        let golden = match fs::read_to_string(&golden_path) {
            Ok(g) => Some(serde_json::from_str(&g).map_err(|e| {
                io::Error::new(io::ErrorKind::InvalidData, format!("{}: {e}", golden_path.display()))
            })?),
            Err(_) => None,
        };
        out.push(CorpusFile { path, text, expect, golden });
    }
    Ok(out)
}

pub fn check_file(file: &CorpusFile) -> FileOutcome {
    let name = file.path.display().to_string();
    let (actual, summary, message) = match check_source(&name, &file.text, Policy::default()) {
        Ok(report) => {
            let summary = registry_summary(&report);
            let failed: Vec<_> = report.failures().map(|a| format!("{}: {}", a.pos, a.text)).collect();
            if failed.is_empty() {
                (Expect::Pass, summary, String::new())
            } else {
                (Expect::Fail, summary, failed.join("; "))
            }
        }
        Err(e) => (Expect::Error, json!({"verdict": "error"}), e.to_string()),
    };
    let golden_match = file.golden.as_ref().map(|g| *g == summary);
    FileOutcome { path: file.path.clone(), expected: file.expect, actual, summary, golden_match, message }
}

pub fn run_corpus(dir: &Path, exec: Exec) -> io::Result<CorpusSummary> {
    let files = load_corpus(dir)?;
    Ok(CorpusSummary { files: exec.map(&files, check_file) })
}
