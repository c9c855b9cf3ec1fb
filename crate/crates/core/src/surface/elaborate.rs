//! Checks declarations in order against the kernel.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::coherator::{lift_arrow, CohCell, CohError, ModelVerdict, Policy, Registry};
use crate::globe::{Component, Family, GlobeContext, Side};
use crate::pasting::{realization_equal, Tree};
use crate::strictify::{strict_normalize, StrictError};
use crate::term::{self, fill_arguments, MidKind, Series, Term, TermBuilder};
use crate::theory::{is_parallel, precompose_boundary, Arrow};

use super::ast::{ARef, ArrowBody, Assertion, Decl, DeclKind, DomSpec, MidSpec, ObjSpec, TermExpr};
use super::lexer::SourcePos;
use super::parser::parse;
use super::SurfaceError;

/// Kernel operations the elaborator may invoke; every call is logged by name.
pub const DOCUMENTED_OPERATIONS: &[&str] = &[
    "arrow.from_top",
    "arrow.new",
    "coh.lift_arrow",
    "coh.request_lift",
    "model.equal_in_dim",
    "strict.normalize",
    "term.coh",
    "term.comp",
    "term.mid",
    "term.transport",
    "theory.is_admissible",
    "theory.is_parallel",
    "theory.precompose_boundary",
    "tree.new",
    "tree.realization_equal",
];

#[derive(Debug, Clone)]
pub struct DagNode {
    pub name: String,
    pub kind: &'static str,
    pub pos: SourcePos,
    pub deps: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct AssertionResult {
    pub pos: SourcePos,
    pub text: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct TreeEntry {
    pub tree: Tree,
    /// Cell names in flat cell order.
    pub names: Vec<String>,
}

/// Outcome of checking one file.
#[derive(Debug)]
pub struct CheckReport {
    pub file: String,
    pub n: Option<u32>,
    pub declarations: Vec<DagNode>,
    pub assertions: Vec<AssertionResult>,
    pub trees: BTreeMap<String, TreeEntry>,
    pub arrows: BTreeMap<String, Arrow>,
    pub cohs: BTreeMap<String, Arc<CohCell>>,
    pub registry: Registry,
    pub capabilities: BTreeSet<&'static str>,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.assertions.iter().all(|a| a.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AssertionResult> {
        self.assertions.iter().filter(|a| !a.passed)
    }

    /// Names of arrows (coherence lifts included) in declaration order.
    pub fn arrow_order(&self) -> Vec<&str> {
        self.declarations
            .iter()
            .filter(|d| d.kind != "tree")
            .map(|d| d.name.as_str())
            .collect()
    }
}

/// Resolution of names inside one term.
pub(crate) struct Scope<'a> {
    builder: TermBuilder<'a>,
    names: &'a [String],
    inline: &'a dyn Fn(&str) -> Option<Result<Term, String>>,
    coh: &'a dyn Fn(&str) -> Option<Arc<CohCell>>,
    used: RefCell<BTreeSet<String>>,
    caps: RefCell<BTreeSet<&'static str>>,
}

impl<'a> Scope<'a> {
    pub(crate) fn new(
        tree: &'a Tree,
        names: &'a [String],
        inline: &'a dyn Fn(&str) -> Option<Result<Term, String>>,
        coh: &'a dyn Fn(&str) -> Option<Arc<CohCell>>,
    ) -> Self {
        Scope {
            builder: TermBuilder::new(tree.realization()),
            names,
            inline,
            coh,
            used: RefCell::new(BTreeSet::new()),
            caps: RefCell::new(BTreeSet::new()),
        }
    }

    fn host_cell(&self, name: &str) -> Option<Term> {
        let i = self.names.iter().position(|n| n == name)?;
        Some(self.builder.generators()[i].clone())
    }

    fn log(&self, op: &'static str) {
        self.caps.borrow_mut().insert(op);
    }

    pub(crate) fn build(&self, e: &TermExpr) -> Result<Term, SurfaceError> {
        let pos = e.pos().clone();
        let kernel = |err: term::TermError| SurfaceError::semantic(pos.clone(), err.to_string());
        match e {
            TermExpr::Name { name, .. } => {
                if let Some(t) = self.host_cell(name) {
                    return Ok(t);
                }
                match (self.inline)(name) {
                    Some(Ok(t)) => {
                        self.used.borrow_mut().insert(name.clone());
                        Ok(t)
                    }
                    Some(Err(msg)) => Err(SurfaceError::semantic(pos, msg)),
                    None => Err(SurfaceError::semantic(pos, format!("unknown name `{name}`"))),
                }
            }
            TermExpr::Gen { name, .. } => self.host_cell(name).ok_or_else(|| {
                SurfaceError::semantic(pos.clone(), format!("`{name}` is not a cell of the host"))
            }),
            TermExpr::Comp { m, p, after, before, .. } => {
                let (a, b) = (self.build(after)?, self.build(before)?);
                self.log("term.comp");
                let t = term::comp(*p, a, b).map_err(kernel)?;
                if t.dim() != *m {
                    return Err(SurfaceError::semantic(
                        pos,
                        format!("comp{{{m},{p}}} applied to terms of dimension {}", t.dim()),
                    ));
                }
                Ok(t)
            }
            TermExpr::Transport { series, arg, .. } => {
                let s = if *series == 'F' { Series::F } else { Series::G };
                let a = self.build(arg)?;
                self.log("term.transport");
                self.builder.transport(s, a).map_err(kernel)
            }
            TermExpr::Mid { kind, point, .. } => {
                let k = match kind {
                    MidSpec::Xi => MidKind::Xi,
                    MidSpec::Alpha(k) => MidKind::Alpha(*k),
                    MidSpec::Beta(k) => MidKind::Beta(*k),
                };
                let x = self.build(point)?;
                self.log("term.mid");
                self.builder.mid(k, x).map_err(kernel)
            }
            TermExpr::Coh { name, args, .. } => {
                let cell = (self.coh)(name).ok_or_else(|| {
                    SurfaceError::semantic(pos.clone(), format!("unknown coherence cell `{name}`"))
                })?;
                self.used.borrow_mut().insert(name.clone());
                let mut given = Vec::with_capacity(args.len());
                for (arg_name, a) in args {
                    let c = cell.cell_by_name(arg_name).ok_or_else(|| {
                        SurfaceError::semantic(
                            a.pos().clone(),
                            format!("`{name}` has no arity cell `{arg_name}`"),
                        )
                    })?;
                    given.push((c, self.build(a)?));
                }
                self.log("term.coh");
                self.builder.coh_partial(&cell, given).map_err(kernel)
            }
        }
    }
}

/// Cell names for `tree`, grouped by dimension, or the defaults.
fn tree_cell_names(
    tree: &Tree,
    groups: Option<&Vec<Vec<String>>>,
    pos: &SourcePos,
) -> Result<Vec<String>, SurfaceError> {
    let r = tree.realization();
    let Some(groups) = groups else {
        return Ok(r.cells().map(|c| c.to_string()).collect());
    };
    let top = r.cells().map(|c| c.dim).max().unwrap_or(0);
    if groups.len() != top as usize + 1 {
        return Err(SurfaceError::semantic(
            pos.clone(),
            format!("expected {} groups of cell names, found {}", top + 1, groups.len()),
        ));
    }
    let mut names = vec![String::new(); r.len()];
    for (d, group) in groups.iter().enumerate() {
        let cells: Vec<_> = r.cells().filter(|c| c.dim == d as u32).collect();
        if cells.len() != group.len() {
            return Err(SurfaceError::semantic(
                pos.clone(),
                format!("{} cells of dimension {d}, {} names", cells.len(), group.len()),
            ));
        }
        for (c, n) in cells.into_iter().zip(group) {
            names[r.flat_index(c).expect("cell")] = n.clone();
        }
    }
    let distinct: BTreeSet<_> = names.iter().collect();
    if distinct.len() != names.len() {
        return Err(SurfaceError::semantic(pos.clone(), "repeated cell name".to_string()));
    }
    Ok(names)
}

fn disc_for(ctx: GlobeContext, top: &Term, pos: &SourcePos) -> Result<Tree, SurfaceError> {
    let family = match top.component() {
        Component::One => Family::Dom,
        Component::Two => Family::Cod,
    };
    let obj = ctx
        .object(family, top.dim())
        .map_err(|e| SurfaceError::semantic(pos.clone(), e.to_string()))?;
    Tree::disc(ctx, obj).map_err(|e| SurfaceError::semantic(pos.clone(), e.to_string()))
}

struct Elaborator {
    file: String,
    ctx: Option<GlobeContext>,
    declared: BTreeSet<String>,
    trees: BTreeMap<String, TreeEntry>,
    arrows: BTreeMap<String, Arrow>,
    cohs: BTreeMap<String, Arc<CohCell>>,
    registry: Registry,
    nodes: Vec<DagNode>,
    assertions: Vec<AssertionResult>,
    caps: BTreeSet<&'static str>,
}

impl Elaborator {
    fn ctx(&self, pos: &SourcePos) -> Result<GlobeContext, SurfaceError> {
        self.ctx
            .ok_or_else(|| SurfaceError::semantic(pos.clone(), "no `context` declared yet".into()))
    }

    fn tree(&self, name: &str, pos: &SourcePos) -> Result<&TreeEntry, SurfaceError> {
        self.trees
            .get(name)
            .ok_or_else(|| SurfaceError::semantic(pos.clone(), format!("unknown tree `{name}`")))
    }

    fn build_over(
        &mut self,
        host: &TreeEntry,
        exprs: &[&TermExpr],
    ) -> Result<(Vec<Term>, BTreeSet<String>), SurfaceError> {
        let arrows = &self.arrows;
        let inline = |name: &str| -> Option<Result<Term, String>> {
            let a = arrows.get(name)?;
            let Some(top) = a.top() else {
                return Some(Err(format!("`{name}` is not an operation out of a disc")));
            };
            if !realization_equal(a.cod(), &host.tree) {
                return Some(Err(format!(
                    "`{name}` lands in {}, which is not shaped like {}",
                    a.cod(),
                    host.tree
                )));
            }
            Some(Ok(top.clone()))
        };
        let cohs = &self.cohs;
        let coh = |name: &str| cohs.get(name).cloned();
        let scope = Scope::new(&host.tree, &host.names, &inline, &coh);
        let mut out = Vec::new();
        for e in exprs {
            out.push(scope.build(e)?);
        }
        self.caps.extend(scope.caps.into_inner());
        Ok((out, scope.used.into_inner()))
    }

    fn bind(&mut self, name: &str, pos: &SourcePos) -> Result<(), SurfaceError> {
        if !self.declared.insert(name.to_string()) {
            return Err(SurfaceError::semantic(pos.clone(), format!("`{name}` is already declared")));
        }
        Ok(())
    }

    fn decl(&mut self, d: &Decl) -> Result<(), SurfaceError> {
        let pos = &d.pos;
        let kernel = |e: &dyn std::fmt::Display| SurfaceError::semantic(pos.clone(), e.to_string());
        match &d.kind {
            DeclKind::Context { n } => {
                if self.ctx.is_some() {
                    return Err(SurfaceError::semantic(pos.clone(), "context declared twice".into()));
                }
                self.ctx = Some(GlobeContext::new(*n));
            }
            DeclKind::Tree { name, cells, columns, glues } => {
                let ctx = self.ctx(pos)?;
                self.bind(name, pos)?;
                let tree = build_tree(ctx, columns, glues)?;
                self.caps.insert("tree.new");
                let names = tree_cell_names(&tree, cells.as_ref(), pos)?;
                self.trees.insert(name.clone(), TreeEntry { tree, names });
                self.nodes.push(DagNode { name: name.clone(), kind: "tree", pos: pos.clone(), deps: vec![] });
            }
            DeclKind::Arrow { name, dom, cod, body } => {
                let ctx = self.ctx(pos)?;
                let host = self.tree(cod, pos)?.clone();
                let mut deps = BTreeSet::from([cod.clone()]);
                let arrow = match (dom, body) {
                    (DomSpec::Disc(o), ArrowBody::Top(t)) => {
                        let obj = o.resolve(ctx).map_err(|e| kernel(&e))?;
                        let disc = Tree::disc(ctx, obj).map_err(|e| kernel(&e))?;
                        let (tops, used) = self.build_over(&host, &[t])?;
                        deps.extend(used);
                        self.caps.insert("arrow.from_top");
                        Arrow::from_top(disc, host.tree.clone(), tops[0].clone()).map_err(|e| kernel(&e))?
                    }
                    (DomSpec::Tree { name: dn, pos: dpos }, ArrowBody::Assign(items)) => {
                        let dom_entry = self.tree(dn, dpos)?.clone();
                        deps.insert(dn.clone());
                        let exprs: Vec<&TermExpr> = items.iter().map(|(_, e)| e).collect();
                        let (terms, used) = self.build_over(&host, &exprs)?;
                        deps.extend(used);
                        let r = dom_entry.tree.realization();
                        let mut given = Vec::new();
                        for ((cell_name, e), t) in items.iter().zip(terms) {
                            let i = dom_entry.names.iter().position(|n| n == cell_name).ok_or_else(|| {
                                SurfaceError::semantic(
                                    e.pos().clone(),
                                    format!("`{dn}` has no cell `{cell_name}`"),
                                )
                            })?;
                            given.push((r.cell_at(i).expect("cell"), t));
                        }
                        let assign = fill_arguments(r, given).map_err(|e| kernel(&e))?;
                        self.caps.insert("arrow.new");
                        Arrow::new(dom_entry.tree.clone(), host.tree.clone(), assign)
                            .map_err(|e| kernel(&e))?
                    }
                    (DomSpec::Disc(_), ArrowBody::Assign(_)) => {
                        return Err(SurfaceError::semantic(
                            pos.clone(),
                            "arrows out of a disc are given by their top term".into(),
                        ))
                    }
                    (DomSpec::Tree { .. }, ArrowBody::Top(_)) => {
                        return Err(SurfaceError::semantic(
                            pos.clone(),
                            "arrows out of a tree need one term per named cell".into(),
                        ))
                    }
                };
                self.bind(name, pos)?;
                self.arrows.insert(name.clone(), arrow);
                self.nodes.push(DagNode {
                    name: name.clone(),
                    kind: "arrow",
                    pos: pos.clone(),
                    deps: deps.into_iter().collect(),
                });
            }
            DeclKind::Coh { name, f, g, over } => {
                let ctx = self.ctx(pos)?;
                let host = self.tree(over, pos)?.clone();
                let (tops, used) = self.build_over(&host, &[f, g])?;
                let disc = disc_for(ctx, &tops[0], f.pos())?;
                self.caps.insert("arrow.from_top");
                let fa = Arrow::from_top(disc.clone(), host.tree.clone(), tops[0].clone())
                    .map_err(|e| SurfaceError::semantic(f.pos().clone(), e.to_string()))?;
                let ga = Arrow::from_top(disc, host.tree.clone(), tops[1].clone())
                    .map_err(|e| SurfaceError::semantic(g.pos().clone(), e.to_string()))?;
                self.bind(name, pos)?;
                self.caps.insert("coh.request_lift");
                let cell = self
                    .registry
                    .request_named_lift(Some(name), &fa, &ga, Some(host.names.clone()))
                    .map_err(|e: CohError| kernel(&e))?;
                self.caps.insert("coh.lift_arrow");
                self.arrows.insert(name.clone(), lift_arrow(&cell));
                self.cohs.insert(name.clone(), cell);
                let mut deps = used;
                deps.insert(over.clone());
                self.nodes.push(DagNode {
                    name: name.clone(),
                    kind: "coh",
                    pos: pos.clone(),
                    deps: deps.into_iter().collect(),
                });
            }
            DeclKind::Assert { negated, assertion } => {
                let outcome = self.assertion(assertion)?;
                let passed = match outcome.verdict {
                    Verdict::Holds(b) => b != *negated,
                    Verdict::Outside => false,
                };
                self.assertions.push(AssertionResult {
                    pos: pos.clone(),
                    text: d.to_string(),
                    passed,
                    detail: outcome.detail,
                });
            }
        }
        Ok(())
    }

    fn arrow_ref(&mut self, a: &ARef) -> Result<Arrow, SurfaceError> {
        match a {
            ARef::Name { name, pos } => self.arrows.get(name).cloned().ok_or_else(|| {
                SurfaceError::semantic(pos.clone(), format!("unknown arrow `{name}`"))
            }),
            ARef::Src(inner) | ARef::Tgt(inner) => {
                let side = if matches!(a, ARef::Src(_)) { Side::S } else { Side::T };
                let base = self.arrow_ref(inner)?;
                self.caps.insert("theory.precompose_boundary");
                precompose_boundary(&base, side)
                    .map_err(|e| SurfaceError::semantic(a.pos().clone(), format!("{a}: {e}")))
            }
        }
    }

    fn tree_ref(&mut self, a: &ARef) -> Result<Tree, SurfaceError> {
        if let ARef::Name { name, .. } = a {
            if let Some(t) = self.trees.get(name) {
                return Ok(t.tree.clone());
            }
        }
        Ok(self.arrow_ref(a)?.cod().clone())
    }

    fn assertion(&mut self, a: &Assertion) -> Result<Outcome, SurfaceError> {
        let holds = |b: bool, detail: String| Outcome { verdict: Verdict::Holds(b), detail };
        Ok(match a {
            Assertion::Parallel(x, y) => {
                let (f, g) = (self.arrow_ref(x)?, self.arrow_ref(y)?);
                self.caps.insert("theory.is_parallel");
                let b = is_parallel(&f, &g);
                holds(b, if b { "parallel".into() } else { "boundaries differ".into() })
            }
            Assertion::ArityEq(x, y) => {
                let (s, t) = (self.tree_ref(x)?, self.tree_ref(y)?);
                self.caps.insert("tree.realization_equal");
                holds(realization_equal(&s, &t), format!("{s} vs {t}"))
            }
            Assertion::Admissible(x, y) => {
                let (f, g) = (self.arrow_ref(x)?, self.arrow_ref(y)?);
                self.caps.insert("theory.is_admissible");
                let b = self.registry.is_admissible(&f, &g);
                holds(b, format!("policy {}", self.registry.policy()))
            }
            Assertion::ModelEq { p, left, right } => {
                let (f, g) = (self.arrow_ref(left)?, self.arrow_ref(right)?);
                self.caps.insert("model.equal_in_dim");
                let v = self.registry.equal_in_dim_models(*p, &f, &g);
                holds(v != ModelVerdict::Unknown, format!("{v:?}"))
            }
            Assertion::StrictEq(x, y) => {
                let (f, g) = (self.arrow_ref(x)?, self.arrow_ref(y)?);
                let (Some(ft), Some(gt)) = (f.top(), g.top()) else {
                    return Err(SurfaceError::semantic(
                        x.pos().clone(),
                        "strict_eq compares operations out of discs".into(),
                    ));
                };
                self.caps.insert("tree.realization_equal");
                if !realization_equal(f.cod(), g.cod()) {
                    return Ok(holds(false, "codomains differ".into()));
                }
                self.caps.insert("strict.normalize");
                match (strict_normalize(ft, f.cod()), strict_normalize(gt, f.cod())) {
                    (Ok(p), Ok(q)) => holds(p == q, format!("{p} vs {q}")),
                    (Err(StrictError::OutsideFragment(r)), _) | (_, Err(StrictError::OutsideFragment(r))) => {
                        Outcome { verdict: Verdict::Outside, detail: format!("outside the strict fragment: {r}") }
                    }
                }
            }
            Assertion::Stage(x, k) => {
                let f = self.arrow_ref(x)?;
                holds(f.stage() == *k, format!("stage {}", f.stage()))
            }
            Assertion::Dim(x, k) => {
                let f = self.arrow_ref(x)?;
                let d = f.op_dim();
                holds(d == Some(*k), format!("dimension {d:?}"))
            }
        })
    }
}

enum Verdict {
    Holds(bool),
    /// The strict oracle gave no verdict; this never counts as a pass.
    Outside,
}

struct Outcome {
    verdict: Verdict,
    detail: String,
}

fn build_tree(ctx: GlobeContext, columns: &[ObjSpec], glues: &[ObjSpec]) -> Result<Tree, SurfaceError> {
    let resolve = |o: &ObjSpec| o.resolve(ctx).map_err(|e| SurfaceError::semantic(o.pos.clone(), e.to_string()));
    let cols = columns.iter().map(resolve).collect::<Result<Vec<_>, _>>()?;
    let gl = glues.iter().map(resolve).collect::<Result<Vec<_>, _>>()?;
    let pos = columns.first().map(|o| o.pos.clone()).unwrap_or_else(|| SourcePos::new("<table>", 0, 0));
    Tree::new(ctx, cols, gl).map_err(|e| SurfaceError::semantic(pos, e.to_string()))
}

/// Elaborates parsed declarations with a fresh registry.
pub fn elaborate(file: &str, decls: &[Decl], policy: Policy) -> Result<CheckReport, SurfaceError> {
    let mut el = Elaborator {
        file: file.to_string(),
        ctx: None,
        declared: BTreeSet::new(),
        trees: BTreeMap::new(),
        arrows: BTreeMap::new(),
        cohs: BTreeMap::new(),
        registry: Registry::new(policy),
        nodes: Vec::new(),
        assertions: Vec::new(),
        caps: BTreeSet::new(),
    };
    for d in decls {
        el.decl(d)?;
    }
    Ok(CheckReport {
        file: el.file,
        n: el.ctx.map(|c| c.n),
        declarations: el.nodes,
        assertions: el.assertions,
        trees: el.trees,
        arrows: el.arrows,
        cohs: el.cohs,
        registry: el.registry,
        capabilities: el.caps,
    })
}

/// Parses and elaborates in one go.
pub fn check_source(file: &str, text: &str, policy: Policy) -> Result<CheckReport, SurfaceError> {
    elaborate(file, &parse(file, text)?, policy)
}

/// A table such as `[xi, f1 ; f0]` as a tree.
pub fn parse_tree_table(ctx: GlobeContext, text: &str) -> Result<Tree, SurfaceError> {
    let (columns, glues) = super::parser::parse_table("<table>", text)?;
    build_tree(ctx, &columns, &glues)
}

/// A term over `tree`, naming its cells by `cell_names` (flat order) and
/// coherence cells through `lookup`.
pub fn parse_term_over(
    text: &str,
    tree: &Tree,
    cell_names: &[String],
    lookup: &dyn Fn(&str) -> Option<Arc<CohCell>>,
) -> Result<Term, SurfaceError> {
    let expr = super::parser::parse_term("<term>", text)?;
    let no_inline = |_: &str| None;
    Scope::new(tree, cell_names, &no_inline, lookup).build(&expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    const OMEGA: &str = "context n=2\n\
        tree T1(x, y; a) = [g1, xi ; g0]\n\
        coh omega = (comp{1,0}(G(a), xi(x)), comp{1,0}(xi(y), F(a))) over T1\n\
        assert stage(omega) = 1\n\
        assert dim(omega) = 2\n\
        assert strict_eq(src(omega), tgt(omega))\n\
        assert not parallel(src(omega), omega)\n";

    #[test]
    fn omega_file_checks() {
        let r = check_source("omega.gwt", OMEGA, Policy::PairNotBare).unwrap();
        for a in &r.assertions {
            assert!(a.passed, "{}: {}", a.text, a.detail);
        }
        assert_eq!(r.registry.len(), 1);
        assert_eq!(r.declarations.len(), 2);
        assert_eq!(r.declarations[1].deps, vec!["T1".to_string()]);
        assert!(r.capabilities.iter().all(|c| DOCUMENTED_OPERATIONS.contains(c)));
    }

    #[test]
    fn unknown_and_duplicate_names() {
        let e = check_source("x", "context n=2\ntree T(x) = [xi]\narrow P : two1 -> T = xi(q)", Policy::PairNotBare)
            .unwrap_err();
        assert!(matches!(e, SurfaceError::Semantic { .. }));
        assert_eq!(e.pos().line, 3);
        let e = check_source("x", "context n=2\ntree T = [xi]\ntree T = [xi]", Policy::PairNotBare).unwrap_err();
        assert!(e.to_string().contains("already declared"));
        let e = check_source("x", "tree T = [xi]", Policy::PairNotBare).unwrap_err();
        assert!(e.to_string().contains("context"));
    }

    #[test]
    fn forward_reference_rejected() {
        let src = "context n=2\ntree T(x) = [xi]\narrow P : two1 -> T = Q\narrow Q : two1 -> T = xi(x)";
        let e = check_source("x", src, Policy::PairNotBare).unwrap_err();
        assert!(e.to_string().contains("unknown name `Q`"));
    }

    #[test]
    fn bare_lift_rejected() {
        let src = "context n=2\ntree D(x, y; a) = [f1]\ncoh bad = (a, a) over D";
        let e = check_source("x", src, Policy::PairNotBare).unwrap_err();
        assert!(e.to_string().contains("admissib"), "{e}");
    }

    #[test]
    fn table_and_term_helpers() {
        let ctx = GlobeContext::new(2);
        let t = parse_tree_table(ctx, "[g1, xi ; g0]").unwrap();
        assert_eq!(t.to_string(), "[g1, xi ; g0]");
        let names = vec!["x".to_string(), "y".into(), "a".into()];
        let u = parse_term_over("comp{1,0}(G(a), xi(x))", &t, &names, &|_| None).unwrap();
        assert_eq!(u.dim(), 1);
        assert!(parse_tree_table(ctx, "[g0, g0 ; g0]").is_err());
    }
}
