//! Pretty printing; `parse(print(d))` gives back `d` up to positions.

use std::fmt;

use super::ast::{ARef, ArrowBody, Assertion, Decl, DeclKind, DomSpec, MidSpec, TermExpr};

fn write_named(f: &mut fmt::Formatter<'_>, items: &[(String, TermExpr)]) -> fmt::Result {
    f.write_str("{")?;
    for (i, (name, t)) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{name}: {t}")?;
    }
    f.write_str("}")
}

impl fmt::Display for TermExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TermExpr::Name { name, .. } => f.write_str(name),
            TermExpr::Gen { name, .. } => write!(f, "gen({name})"),
            TermExpr::Comp { m, p, after, before, .. } => {
                write!(f, "comp{{{m},{p}}}({after}, {before})")
            }
            TermExpr::Transport { series, arg, .. } => write!(f, "{series}({arg})"),
            TermExpr::Mid { kind, point, .. } => match kind {
                MidSpec::Xi => write!(f, "xi({point})"),
                MidSpec::Alpha(k) => write!(f, "alpha{{{k}}}({point})"),
                MidSpec::Beta(k) => write!(f, "beta{{{k}}}({point})"),
            },
            TermExpr::Coh { name, args, .. } => {
                write!(f, "coh[{name}]")?;
                write_named(f, args)
            }
        }
    }
}

impl fmt::Display for ARef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ARef::Name { name, .. } => f.write_str(name),
            ARef::Src(a) => write!(f, "src({a})"),
            ARef::Tgt(a) => write!(f, "tgt({a})"),
        }
    }
}

impl fmt::Display for Assertion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Assertion::Parallel(a, b) => write!(f, "parallel({a}, {b})"),
            Assertion::ArityEq(a, b) => write!(f, "arity_eq({a}, {b})"),
            Assertion::Admissible(a, b) => write!(f, "admissible({a}, {b})"),
            Assertion::StrictEq(a, b) => write!(f, "strict_eq({a}, {b})"),
            Assertion::ModelEq { p, left, right } => write!(f, "model_eq{{{p}}}({left}, {right})"),
            Assertion::Stage(a, k) => write!(f, "stage({a}) = {k}"),
            Assertion::Dim(a, k) => write!(f, "dim({a}) = {k}"),
        }
    }
}

impl fmt::Display for Decl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            DeclKind::Context { n } => write!(f, "context n={n}"),
            DeclKind::Tree { name, cells, columns, glues } => {
                write!(f, "tree {name}")?;
                if let Some(groups) = cells {
                    let groups: Vec<_> = groups.iter().map(|g| g.join(", ")).collect();
                    write!(f, "({})", groups.join("; "))?;
                }
                let cols: Vec<_> = columns.iter().map(|o| o.keyword()).collect();
                write!(f, " = [{}", cols.join(", "))?;
                if !glues.is_empty() {
                    let gl: Vec<_> = glues.iter().map(|o| o.keyword()).collect();
                    write!(f, " ; {}", gl.join(", "))?;
                }
                f.write_str("]")
            }
            DeclKind::Arrow { name, dom, cod, body } => {
                let dom = match dom {
                    DomSpec::Disc(o) => o.keyword(),
                    DomSpec::Tree { name, .. } => name.clone(),
                };
                write!(f, "arrow {name} : {dom} -> {cod} = ")?;
                match body {
                    ArrowBody::Top(t) => write!(f, "{t}"),
                    ArrowBody::Assign(items) => write_named(f, items),
                }
            }
            DeclKind::Coh { name, f: a, g: b, over } => {
                write!(f, "coh {name} = ({a}, {b}) over {over}")
            }
            DeclKind::Assert { negated, assertion } => {
                f.write_str("assert ")?;
                if *negated {
                    f.write_str("not ")?;
                }
                write!(f, "{assertion}")
            }
        }
    }
}

/// One declaration per line.
pub fn print_file(decls: &[Decl]) -> String {
    let mut out = String::new();
    for d in decls {
        out.push_str(&d.to_string());
        out.push('\n');
    }
    out
}
