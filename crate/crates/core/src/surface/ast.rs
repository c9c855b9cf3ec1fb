//! Declarations as parsed, before any kernel checks.

use crate::globe::{Family, GlobeContext, GlobeError, GlobeObject};

use super::lexer::SourcePos;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjKind {
    One,
    Two,
    F,
    G,
    Alpha,
    Beta,
    Xi,
}

impl ObjKind {
    pub fn keyword(self) -> &'static str {
        match self {
            ObjKind::One => "one",
            ObjKind::Two => "two",
            ObjKind::F => "f",
            ObjKind::G => "g",
            ObjKind::Alpha => "alpha",
            ObjKind::Beta => "beta",
            ObjKind::Xi => "xi",
        }
    }

    pub fn from_keyword(s: &str) -> Option<ObjKind> {
        Some(match s {
            "one" => ObjKind::One,
            "two" => ObjKind::Two,
            "f" => ObjKind::F,
            "g" => ObjKind::G,
            "alpha" => ObjKind::Alpha,
            "beta" => ObjKind::Beta,
            "xi" => ObjKind::Xi,
            _ => return None,
        })
    }
}

/// An object keyword such as `g1`, `g(1)`, `alpha2` or `xi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObjSpec {
    pub kind: ObjKind,
    /// Dimension for the series, `k` for alpha/beta, absent for `xi`.
    pub index: Option<u32>,
    pub pos: SourcePos,
}

impl ObjSpec {
    /// Splits `g12` into `(G, 12)`; plain `xi` has no index.
    pub fn split_keyword(word: &str) -> Option<(ObjKind, Option<u32>)> {
        let head = word.trim_end_matches(|c: char| c.is_ascii_digit());
        let kind = ObjKind::from_keyword(head)?;
        let digits = &word[head.len()..];
        let index = if digits.is_empty() { None } else { Some(digits.parse().ok()?) };
        match (kind, index) {
            (ObjKind::Xi, None) => Some((kind, None)),
            (ObjKind::Xi, Some(_)) => None,
            (_, idx) => Some((kind, idx)),
        }
    }

    pub fn resolve(&self, ctx: GlobeContext) -> Result<GlobeObject, GlobeError> {
        let i = self.index.unwrap_or(0);
        match self.kind {
            ObjKind::One => ctx.object(Family::Dom, i),
            ObjKind::Two => ctx.object(Family::Cod, i),
            ObjKind::F => ctx.object(Family::FSer, i),
            ObjKind::G => ctx.object(Family::GSer, i),
            ObjKind::Alpha => ctx.object(Family::Alpha(i), i),
            ObjKind::Beta => ctx.object(Family::Beta(i), i),
            ObjKind::Xi => ctx.xi(),
        }
    }

    pub fn keyword(&self) -> String {
        match self.index {
            Some(i) => format!("{}{i}", self.kind.keyword()),
            None => self.kind.keyword().to_string(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MidSpec {
    Xi,
    Alpha(u32),
    Beta(u32),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TermExpr {
    /// A host cell, or an operation inlined by its top.
    Name { name: String, pos: SourcePos },
    Gen { name: String, pos: SourcePos },
    Comp {
        m: u32,
        p: u32,
        after: Box<TermExpr>,
        before: Box<TermExpr>,
        pos: SourcePos,
    },
    Transport { series: char, arg: Box<TermExpr>, pos: SourcePos },
    Mid { kind: MidSpec, point: Box<TermExpr>, pos: SourcePos },
    Coh { name: String, args: Vec<(String, TermExpr)>, pos: SourcePos },
}

impl TermExpr {
    pub fn pos(&self) -> &SourcePos {
        match self {
            TermExpr::Name { pos, .. }
            | TermExpr::Gen { pos, .. }
            | TermExpr::Comp { pos, .. }
            | TermExpr::Transport { pos, .. }
            | TermExpr::Mid { pos, .. }
            | TermExpr::Coh { pos, .. } => pos,
        }
    }

    fn erase(&mut self, blank: &SourcePos) {
        match self {
            TermExpr::Name { pos, .. } | TermExpr::Gen { pos, .. } => *pos = blank.clone(),
            TermExpr::Comp { after, before, pos, .. } => {
                *pos = blank.clone();
                after.erase(blank);
                before.erase(blank);
            }
            TermExpr::Transport { arg: inner, pos, .. } | TermExpr::Mid { point: inner, pos, .. } => {
                *pos = blank.clone();
                inner.erase(blank);
            }
            TermExpr::Coh { args, pos, .. } => {
                *pos = blank.clone();
                for (_, a) in args {
                    a.erase(blank);
                }
            }
        }
    }
}

/// Operand of an assertion: a named arrow or one of its boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ARef {
    Name { name: String, pos: SourcePos },
    Src(Box<ARef>),
    Tgt(Box<ARef>),
}

impl ARef {
    pub fn pos(&self) -> &SourcePos {
        match self {
            ARef::Name { pos, .. } => pos,
            ARef::Src(inner) | ARef::Tgt(inner) => inner.pos(),
        }
    }

    pub fn root(&self) -> &str {
        match self {
            ARef::Name { name, .. } => name,
            ARef::Src(inner) | ARef::Tgt(inner) => inner.root(),
        }
    }

    fn erase(&mut self, blank: &SourcePos) {
        match self {
            ARef::Name { pos, .. } => *pos = blank.clone(),
            ARef::Src(inner) | ARef::Tgt(inner) => inner.erase(blank),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Assertion {
    Parallel(ARef, ARef),
    ArityEq(ARef, ARef),
    Admissible(ARef, ARef),
    ModelEq { p: u32, left: ARef, right: ARef },
    StrictEq(ARef, ARef),
    Stage(ARef, u32),
    Dim(ARef, u32),
}

impl Assertion {
    pub fn operands(&self) -> Vec<&ARef> {
        match self {
            Assertion::Parallel(a, b)
            | Assertion::ArityEq(a, b)
            | Assertion::Admissible(a, b)
            | Assertion::StrictEq(a, b)
            | Assertion::ModelEq { left: a, right: b, .. } => vec![a, b],
            Assertion::Stage(a, _) | Assertion::Dim(a, _) => vec![a],
        }
    }

    fn operands_mut(&mut self) -> Vec<&mut ARef> {
        match self {
            Assertion::Parallel(a, b)
            | Assertion::ArityEq(a, b)
            | Assertion::Admissible(a, b)
            | Assertion::StrictEq(a, b)
            | Assertion::ModelEq { left: a, right: b, .. } => vec![a, b],
            Assertion::Stage(a, _) | Assertion::Dim(a, _) => vec![a],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DomSpec {
    Disc(ObjSpec),
    Tree { name: String, pos: SourcePos },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrowBody {
    /// Shorthand for arrows out of a disc.
    Top(TermExpr),
    Assign(Vec<(String, TermExpr)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeclKind {
    Context { n: u32 },
    Tree {
        name: String,
        /// Cell names grouped by dimension, lowest first.
        cells: Option<Vec<Vec<String>>>,
        columns: Vec<ObjSpec>,
        glues: Vec<ObjSpec>,
    },
    Arrow { name: String, dom: DomSpec, cod: String, body: ArrowBody },
    Coh { name: String, f: TermExpr, g: TermExpr, over: String },
    Assert { negated: bool, assertion: Assertion },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decl {
    pub kind: DeclKind,
    pub pos: SourcePos,
}

impl Decl {
    /// Name bound by the declaration, if any.
    pub fn name(&self) -> Option<&str> {
        match &self.kind {
            DeclKind::Tree { name, .. }
            | DeclKind::Arrow { name, .. }
            | DeclKind::Coh { name, .. } => Some(name),
            DeclKind::Context { .. } | DeclKind::Assert { .. } => None,
        }
    }

    /// Copy with every position replaced by `<none>:0:0`, for comparing parses.
    pub fn without_positions(&self) -> Decl {
        let blank = SourcePos::new("<none>", 0, 0);
        let mut d = self.clone();
        d.pos = blank.clone();
        match &mut d.kind {
            DeclKind::Context { .. } => {}
            DeclKind::Tree { columns, glues, .. } => {
                for o in columns.iter_mut().chain(glues.iter_mut()) {
                    o.pos = blank.clone();
                }
            }
            DeclKind::Arrow { dom, body, .. } => {
                match dom {
                    DomSpec::Disc(o) => o.pos = blank.clone(),
                    DomSpec::Tree { pos, .. } => *pos = blank.clone(),
                }
                match body {
                    ArrowBody::Top(t) => t.erase(&blank),
                    ArrowBody::Assign(items) => items.iter_mut().for_each(|(_, t)| t.erase(&blank)),
                }
            }
            DeclKind::Coh { f, g, .. } => {
                f.erase(&blank);
                g.erase(&blank);
            }
            DeclKind::Assert { assertion, .. } => {
                for a in assertion.operands_mut() {
                    a.erase(&blank);
                }
            }
        }
        d
    }
}
