//! Free magma terms over the cells of a realization, extended by
//! applications of registered coherence cells.
//!
//! Terms are immutable and shared. Each node caches its dimension,
//! component, stage, size and a structural hash; boundaries are computed on
//! demand and memoized. Construction goes through [`TermBuilder`], which
//! type-checks every node, so an ill-typed composite never exists.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::coherator::CohCell;
use crate::globe::{Component, Family, GlobeContext, GlobeError, Side};
use crate::pasting::{CellRef, Realization};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    F,
    G,
}

impl Series {
    pub fn family(self) -> Family {
        match self {
            Series::F => Family::FSer,
            Series::G => Family::GSer,
        }
    }

    fn keyword(self) -> &'static str {
        match self {
            Series::F => "F",
            Series::G => "G",
        }
    }
}

/// The middle cells between `F(x)` and `G(x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MidKind {
    Alpha(u32),
    Beta(u32),
    Xi,
}

impl MidKind {
    pub fn family(self) -> Family {
        match self {
            MidKind::Alpha(k) => Family::Alpha(k),
            MidKind::Beta(k) => Family::Beta(k),
            MidKind::Xi => Family::Xi,
        }
    }

    pub fn dim(self, ctx: GlobeContext) -> Option<u32> {
        match self {
            MidKind::Alpha(k) | MidKind::Beta(k) => Some(k),
            MidKind::Xi => ctx.xi_dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("a 0-dimensional term has no boundary")]
    ZeroDim,
    #[error("cell {0} is not part of the host realization")]
    UnknownCell(CellRef),
    #[error("expected a term of dimension {expected}, found {found}")]
    DimMismatch { expected: u32, found: u32 },
    #[error("expected a term in component {expected}, found {found}")]
    ComponentMismatch { expected: Component, found: Component },
    #[error("composition level {p} is not below dimension {m}")]
    BadLevel { m: u32, p: u32 },
    #[error("boundaries do not match at level {level}: {left} vs {right}")]
    BoundaryMismatch { level: u32, left: String, right: String },
    #[error("coherence cell {coh} expects {expected} arguments, got {found}")]
    ArgCount { coh: String, expected: usize, found: usize },
    #[error("coherence cell {coh} lives at level {found}, host is at level {expected}")]
    ContextMismatch { coh: String, expected: u32, found: u32 },
    #[error("argument cell {0} of the coherence cell is not determined by the given arguments")]
    Undetermined(CellRef),
    #[error(transparent)]
    Globe(#[from] GlobeError),
}

#[derive(Debug)]
pub enum Node {
    Gen(CellRef),
    Comp {
        p: u32,
        after: Term,
        before: Term,
    },
    Transport {
        series: Series,
        arg: Term,
    },
    Mid {
        kind: MidKind,
        point: Term,
    },
    /// `args` are indexed by the flat cell order of the arity realization.
    Coh {
        cell: Arc<CohCell>,
        args: Arc<[Term]>,
    },
}

struct TermData {
    node: Node,
    dim: u32,
    component: Component,
    stage: u32,
    size: usize,
    hash: u64,
    bounds: OnceLock<(Term, Term)>,
}

/// A shared, immutable, well-typed term.
#[derive(Clone)]
pub struct Term(Arc<TermData>);

impl Term {
    fn mk(node: Node, dim: u32, component: Component) -> Term {
        let mut h = DefaultHasher::new();
        let (stage, size) = match &node {
            Node::Gen(c) => {
                0u8.hash(&mut h);
                c.hash(&mut h);
                (0, 1)
            }
            Node::Comp { p, after, before } => {
                1u8.hash(&mut h);
                p.hash(&mut h);
                after.0.hash.hash(&mut h);
                before.0.hash.hash(&mut h);
                (
                    after.stage().max(before.stage()),
                    1 + after.size() + before.size(),
                )
            }
            Node::Transport { series, arg } => {
                2u8.hash(&mut h);
                series.hash(&mut h);
                arg.0.hash.hash(&mut h);
                (arg.stage(), 1 + arg.size())
            }
            Node::Mid { kind, point } => {
                3u8.hash(&mut h);
                kind.hash(&mut h);
                point.0.hash.hash(&mut h);
                (0, 1 + point.size())
            }
            Node::Coh { cell, args } => {
                4u8.hash(&mut h);
                cell.id().hash(&mut h);
                for a in args.iter() {
                    a.0.hash.hash(&mut h);
                }
                let arity = cell.arity().realization();
                let size = 1 + arity
                    .locally_maximal()
                    .into_iter()
                    .map(|c| args[arity.flat_index(c).expect("arity cell")].size())
                    .sum::<usize>();
                let stage = args.iter().map(Term::stage).fold(cell.stage(), u32::max);
                (stage, size)
            }
        };
        dim.hash(&mut h);
        Term(Arc::new(TermData {
            node,
            dim,
            component,
            stage,
            size,
            hash: h.finish(),
            bounds: OnceLock::new(),
        }))
    }

    pub fn node(&self) -> &Node {
        &self.0.node
    }

    pub fn dim(&self) -> u32 {
        self.0.dim
    }

    pub fn component(&self) -> Component {
        self.0.component
    }

    /// Largest stage of a coherence cell occurring in the term; 0 if none.
    pub fn stage(&self) -> u32 {
        self.0.stage
    }

    /// Node count; a middle cell counts 2 and a coherence application counts
    /// 1 plus the sizes of its arguments on locally maximal arity cells.
    pub fn size(&self) -> usize {
        self.0.size
    }

    pub fn structural_hash(&self) -> u64 {
        self.0.hash
    }

    pub fn ptr_eq(&self, other: &Term) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn as_gen(&self) -> Option<CellRef> {
        match self.node() {
            Node::Gen(c) => Some(*c),
            _ => None,
        }
    }

    pub fn is_gen(&self) -> bool {
        self.as_gen().is_some()
    }

    pub fn has_coh(&self) -> bool {
        self.stage() > 0
    }

    fn bounds(&self) -> Result<&(Term, Term), TermError> {
        if self.dim() == 0 {
            return Err(TermError::ZeroDim);
        }
        if let Some(b) = self.0.bounds.get() {
            return Ok(b);
        }
        let b = self.compute_bounds();
        Ok(self.0.bounds.get_or_init(|| b))
    }

    fn compute_bounds(&self) -> (Term, Term) {
        let m = self.dim();
        match self.node() {
            Node::Gen(_) => unreachable!("generator boundaries are set by the builder"),
            Node::Comp { p, after, before } => {
                if *p + 1 == m {
                    (before.source_unchecked(), after.target_unchecked())
                } else {
                    let s = Term::mk(
                        Node::Comp {
                            p: *p,
                            after: after.source_unchecked(),
                            before: before.source_unchecked(),
                        },
                        m - 1,
                        self.component(),
                    );
                    let t = Term::mk(
                        Node::Comp {
                            p: *p,
                            after: after.target_unchecked(),
                            before: before.target_unchecked(),
                        },
                        m - 1,
                        self.component(),
                    );
                    (s, t)
                }
            }
            Node::Transport { series, arg } => {
                let wrap = |u: Term| {
                    Term::mk(
                        Node::Transport { series: *series, arg: u },
                        m - 1,
                        Component::Two,
                    )
                };
                (wrap(arg.source_unchecked()), wrap(arg.target_unchecked()))
            }
            Node::Mid { point, .. } => {
                // every middle cell of dimension m runs from the alpha chain to the beta chain
                if m == 1 {
                    let wrap = |series| {
                        Term::mk(Node::Transport { series, arg: point.clone() }, 0, Component::Two)
                    };
                    (wrap(Series::F), wrap(Series::G))
                } else {
                    let wrap = |kind| {
                        Term::mk(Node::Mid { kind, point: point.clone() }, m - 1, Component::Two)
                    };
                    (wrap(MidKind::Alpha(m - 1)), wrap(MidKind::Beta(m - 1)))
                }
            }
            Node::Coh { cell, args } => {
                let arity = cell.arity().realization();
                let map = |c: CellRef| args[arity.flat_index(c).expect("arity cell")].clone();
                (cell.f().substitute(&map), cell.g().substitute(&map))
            }
        }
    }

    fn source_unchecked(&self) -> Term {
        self.bounds().expect("positive dimension").0.clone()
    }

    fn target_unchecked(&self) -> Term {
        self.bounds().expect("positive dimension").1.clone()
    }

    pub fn source(&self) -> Result<Term, TermError> {
        Ok(self.bounds()?.0.clone())
    }

    pub fn target(&self) -> Result<Term, TermError> {
        Ok(self.bounds()?.1.clone())
    }

    pub fn boundary(&self, side: Side) -> Result<Term, TermError> {
        match side {
            Side::S => self.source(),
            Side::T => self.target(),
        }
    }

    /// Iterated source and target down to dimension `q`.
    pub fn boundary_iter(&self, q: u32) -> Result<(Term, Term), TermError> {
        if q >= self.dim() {
            return Err(TermError::ZeroDim);
        }
        let (mut s, mut t) = self.bounds()?.clone();
        for _ in q + 1..self.dim() {
            s = s.source()?;
            t = t.target()?;
        }
        Ok((s, t))
    }

    /// Replaces every generator through `map`. Coherence arguments are substituted elementwise.
    pub fn substitute(&self, map: &dyn Fn(CellRef) -> Term) -> Term {
        match self.node() {
            Node::Gen(c) => map(*c),
            Node::Comp { p, after, before } => Term::mk(
                Node::Comp {
                    p: *p,
                    after: after.substitute(map),
                    before: before.substitute(map),
                },
                self.dim(),
                self.component(),
            ),
            Node::Transport { series, arg } => Term::mk(
                Node::Transport { series: *series, arg: arg.substitute(map) },
                self.dim(),
                self.component(),
            ),
            Node::Mid { kind, point } => Term::mk(
                Node::Mid { kind: *kind, point: point.substitute(map) },
                self.dim(),
                self.component(),
            ),
            Node::Coh { cell, args } => Term::mk(
                Node::Coh {
                    cell: cell.clone(),
                    args: args.iter().map(|a| a.substitute(map)).collect(),
                },
                self.dim(),
                self.component(),
            ),
        }
    }

    /// Generators occurring in the term, including inside coherence arguments.
    pub fn generators(&self) -> BTreeSet<CellRef> {
        let mut out = BTreeSet::new();
        self.collect_gens(&mut out);
        out
    }

    fn collect_gens(&self, out: &mut BTreeSet<CellRef>) {
        match self.node() {
            Node::Gen(c) => {
                out.insert(*c);
            }
            Node::Comp { after, before, .. } => {
                after.collect_gens(out);
                before.collect_gens(out);
            }
            Node::Transport { arg, .. } => arg.collect_gens(out),
            Node::Mid { point, .. } => point.collect_gens(out),
            Node::Coh { args, .. } => args.iter().for_each(|a| a.collect_gens(out)),
        }
    }

    /// Coherence cells occurring in the term, outermost first, without duplicates.
    pub fn coh_cells(&self) -> Vec<Arc<CohCell>> {
        let mut out: Vec<Arc<CohCell>> = Vec::new();
        self.collect_cohs(&mut out);
        out
    }

    fn collect_cohs(&self, out: &mut Vec<Arc<CohCell>>) {
        match self.node() {
            Node::Gen(_) => {}
            Node::Comp { after, before, .. } => {
                after.collect_cohs(out);
                before.collect_cohs(out);
            }
            Node::Transport { arg, .. } => arg.collect_cohs(out),
            Node::Mid { point, .. } => point.collect_cohs(out),
            Node::Coh { cell, args } => {
                if !out.iter().any(|c| c.id() == cell.id()) {
                    out.push(cell.clone());
                }
                args.iter().for_each(|a| a.collect_cohs(out));
            }
        }
    }

    /// Checks that every generator is a cell of `host` with the same boundary cells.
    pub fn check_host(&self, host: &Realization) -> Result<(), TermError> {
        match self.node() {
            Node::Gen(c) => {
                if !host.contains(*c) {
                    return Err(TermError::UnknownCell(*c));
                }
                if c.dim > 0 {
                    let (s, t) = self.bounds()?;
                    if s.as_gen() != host.source(*c) || t.as_gen() != host.target(*c) {
                        return Err(TermError::UnknownCell(*c));
                    }
                }
                Ok(())
            }
            Node::Comp { after, before, .. } => {
                after.check_host(host)?;
                before.check_host(host)
            }
            Node::Transport { arg, .. } => arg.check_host(host),
            Node::Mid { point, .. } => point.check_host(host),
            Node::Coh { args, .. } => args.iter().try_for_each(|a| a.check_host(host)),
        }
    }

    /// Concrete syntax, naming host cells through `names`.
    pub fn to_syntax(&self, names: &dyn Fn(CellRef) -> String) -> String {
        let mut out = String::new();
        self.write_syntax(&mut out, names);
        out
    }

    fn write_syntax(&self, out: &mut String, names: &dyn Fn(CellRef) -> String) {
        match self.node() {
            Node::Gen(c) => out.push_str(&names(*c)),
            Node::Comp { p, after, before } => {
                let _ = write!(out, "comp{{{},{}}}(", self.dim(), p);
                after.write_syntax(out, names);
                out.push_str(", ");
                before.write_syntax(out, names);
                out.push(')');
            }
            Node::Transport { series, arg } => {
                out.push_str(series.keyword());
                out.push('(');
                arg.write_syntax(out, names);
                out.push(')');
            }
            Node::Mid { kind, point } => {
                match kind {
                    MidKind::Xi => out.push_str("xi("),
                    MidKind::Alpha(k) => {
                        let _ = write!(out, "alpha{{{k}}}(");
                    }
                    MidKind::Beta(k) => {
                        let _ = write!(out, "beta{{{k}}}(");
                    }
                }
                point.write_syntax(out, names);
                out.push(')');
            }
            Node::Coh { cell, args } => {
                let _ = write!(out, "coh[{}]{{", cell.name());
                let arity = cell.arity().realization();
                let mut first = true;
                for c in arity.locally_maximal() {
                    if !first {
                        out.push_str(", ");
                    }
                    first = false;
                    let _ = write!(out, "{}: ", cell.cell_name(c));
                    args[arity.flat_index(c).expect("arity cell")].write_syntax(out, names);
                }
                out.push('}');
            }
        }
    }

    /// Unambiguous serialization used for content keys: cells by canonical
    /// reference, coherence cells by id, all arguments spelled out.
    pub fn canonical(&self) -> String {
        let mut out = String::new();
        self.write_canonical(&mut out);
        out
    }

    fn write_canonical(&self, out: &mut String) {
        match self.node() {
            Node::Gen(c) => {
                let _ = write!(out, "#{}.{}.{}", c.component.number(), c.dim, c.id);
            }
            Node::Comp { p, after, before } => {
                let _ = write!(out, "C{},{}(", self.dim(), p);
                after.write_canonical(out);
                out.push(',');
                before.write_canonical(out);
                out.push(')');
            }
            Node::Transport { series, arg } => {
                out.push_str(series.keyword());
                out.push('(');
                arg.write_canonical(out);
                out.push(')');
            }
            Node::Mid { kind, point } => {
                let _ = write!(out, "{kind:?}(");
                point.write_canonical(out);
                out.push(')');
            }
            Node::Coh { cell, args } => {
                let _ = write!(out, "K{}[", cell.id());
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    a.write_canonical(out);
                }
                out.push(']');
            }
        }
    }

    /// Mathematical notation with `∘^m_p`, e.g. `G(a) ∘^1_0 τ(x)` at level 2.
    pub fn pretty(&self, ctx: GlobeContext, names: &dyn Fn(CellRef) -> String) -> String {
        let mut out = String::new();
        self.write_pretty(&mut out, ctx, names, false);
        out
    }

    fn write_pretty(
        &self,
        out: &mut String,
        ctx: GlobeContext,
        names: &dyn Fn(CellRef) -> String,
        nested: bool,
    ) {
        match self.node() {
            Node::Gen(c) => out.push_str(&names(*c)),
            Node::Comp { p, after, before } => {
                if nested {
                    out.push('(');
                }
                after.write_pretty(out, ctx, names, true);
                let _ = write!(out, " ∘^{}_{} ", self.dim(), p);
                before.write_pretty(out, ctx, names, true);
                if nested {
                    out.push(')');
                }
            }
            Node::Transport { series, arg } => {
                out.push_str(series.keyword());
                out.push('(');
                arg.write_pretty(out, ctx, names, false);
                out.push(')');
            }
            Node::Mid { kind, point } => {
                match kind {
                    MidKind::Xi if ctx.n == 2 => out.push_str("τ("),
                    MidKind::Xi => out.push_str("ξ("),
                    MidKind::Alpha(k) => {
                        let _ = write!(out, "α_{k}(");
                    }
                    MidKind::Beta(k) => {
                        let _ = write!(out, "β_{k}(");
                    }
                }
                point.write_pretty(out, ctx, names, false);
                out.push(')');
            }
            Node::Coh { cell, args } => {
                out.push_str(cell.name());
                out.push('(');
                let arity = cell.arity().realization();
                for (i, c) in arity.locally_maximal().into_iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    args[arity.flat_index(c).expect("arity cell")]
                        .write_pretty(out, ctx, names, false);
                }
                out.push(')');
            }
        }
    }
}

impl PartialEq for Node {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Node::Gen(a), Node::Gen(b)) => a == b,
            (
                Node::Comp { p, after, before },
                Node::Comp { p: q, after: a2, before: b2 },
            ) => p == q && after == a2 && before == b2,
            (
                Node::Transport { series, arg },
                Node::Transport { series: s2, arg: a2 },
            ) => series == s2 && arg == a2,
            (Node::Mid { kind, point }, Node::Mid { kind: k2, point: p2 }) => {
                kind == k2 && point == p2
            }
            (Node::Coh { cell, args }, Node::Coh { cell: c2, args: a2 }) => {
                cell.id() == c2.id() && args == a2
            }
            _ => false,
        }
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other)
            || (self.0.hash == other.0.hash
                && self.0.dim == other.0.dim
                && self.0.node == other.0.node)
    }
}

impl Eq for Term {}

impl Hash for Term {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.0.hash);
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_syntax(&|c| c.to_string()))
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_syntax(&|c| c.to_string()))
    }
}

/// Type-checking constructors for terms over one host realization.
pub struct TermBuilder<'a> {
    host: &'a Realization,
    gens: Vec<Term>,
}

impl<'a> TermBuilder<'a> {
    pub fn new(host: &'a Realization) -> Self {
        let mut gens: Vec<Term> = Vec::with_capacity(host.len());
        // cells are listed by dimension within a component, so boundaries come first
        for cell in host.cells() {
            let t = Term::mk(Node::Gen(cell), cell.dim, cell.component);
            if let (Some(s), Some(tg)) = (host.source(cell), host.target(cell)) {
                let s = gens[host.flat_index(s).expect("boundary")].clone();
                let tg = gens[host.flat_index(tg).expect("boundary")].clone();
                let _ = t.0.bounds.set((s, tg));
            }
            gens.push(t);
        }
        TermBuilder { host, gens }
    }

    pub fn host(&self) -> &'a Realization {
        self.host
    }

    pub fn ctx(&self) -> GlobeContext {
        self.host.ctx()
    }

    pub fn gen(&self, cell: CellRef) -> Result<Term, TermError> {
        let i = self.host.flat_index(cell).ok_or(TermError::UnknownCell(cell))?;
        Ok(self.gens[i].clone())
    }

    /// Every generator, in flat cell order.
    pub fn generators(&self) -> &[Term] {
        &self.gens
    }

    /// `after ∘_p before`; the p-source of `after` must be the p-target of `before`.
    pub fn comp(&self, p: u32, after: Term, before: Term) -> Result<Term, TermError> {
        comp(p, after, before)
    }

    pub fn transport(&self, series: Series, arg: Term) -> Result<Term, TermError> {
        transport(self.ctx(), series, arg)
    }

    pub fn mid(&self, kind: MidKind, point: Term) -> Result<Term, TermError> {
        mid(self.ctx(), kind, point)
    }

    /// Applies a coherence cell to a full argument list (one term per arity cell).
    pub fn coh(&self, cell: &Arc<CohCell>, args: Vec<Term>) -> Result<Term, TermError> {
        coh(self.ctx(), cell, args)
    }

    /// Applies a coherence cell given terms for some arity cells; the
    /// remaining cells are filled in from boundaries and checked.
    pub fn coh_partial(
        &self,
        cell: &Arc<CohCell>,
        given: Vec<(CellRef, Term)>,
    ) -> Result<Term, TermError> {
        let args = fill_arguments(cell.arity().realization(), given)?;
        self.coh(cell, args)
    }
}

/// Extends a partial assignment of arity cells downwards along boundaries.
pub fn fill_arguments(
    arity: &Realization,
    given: Vec<(CellRef, Term)>,
) -> Result<Vec<Term>, TermError> {
    let mut slots: Vec<Option<Term>> = vec![None; arity.len()];
    let mut stack = given;
    while let Some((c, u)) = stack.pop() {
        let i = arity.flat_index(c).ok_or(TermError::UnknownCell(c))?;
        check_shape(c, &u)?;
        match &slots[i] {
            Some(existing) if *existing != u => {
                return Err(TermError::BoundaryMismatch {
                    level: c.dim,
                    left: existing.to_string(),
                    right: u.to_string(),
                })
            }
            Some(_) => continue,
            None => {}
        }
        if let (Some(s), Some(t)) = (arity.source(c), arity.target(c)) {
            stack.push((s, u.source()?));
            stack.push((t, u.target()?));
        }
        slots[i] = Some(u);
    }
    slots
        .into_iter()
        .enumerate()
        .map(|(i, s)| s.ok_or_else(|| TermError::Undetermined(arity.cell_at(i).expect("cell"))))
        .collect()
}

fn check_shape(cell: CellRef, u: &Term) -> Result<(), TermError> {
    if u.dim() != cell.dim {
        return Err(TermError::DimMismatch { expected: cell.dim, found: u.dim() });
    }
    if u.component() != cell.component {
        return Err(TermError::ComponentMismatch {
            expected: cell.component,
            found: u.component(),
        });
    }
    Ok(())
}

pub fn comp(p: u32, after: Term, before: Term) -> Result<Term, TermError> {
    let m = after.dim();
    if before.dim() != m {
        return Err(TermError::DimMismatch { expected: m, found: before.dim() });
    }
    if after.component() != before.component() {
        return Err(TermError::ComponentMismatch {
            expected: after.component(),
            found: before.component(),
        });
    }
    if p >= m {
        return Err(TermError::BadLevel { m, p });
    }
    let (s, _) = after.boundary_iter(p)?;
    let (_, t) = before.boundary_iter(p)?;
    if s != t {
        return Err(TermError::BoundaryMismatch {
            level: p,
            left: s.to_string(),
            right: t.to_string(),
        });
    }
    let component = after.component();
    Ok(Term::mk(Node::Comp { p, after, before }, m, component))
}

pub fn transport(ctx: GlobeContext, series: Series, arg: Term) -> Result<Term, TermError> {
    ctx.object(series.family(), 0)?;
    if arg.component() != Component::One {
        return Err(TermError::ComponentMismatch {
            expected: Component::One,
            found: arg.component(),
        });
    }
    let dim = arg.dim();
    Ok(Term::mk(Node::Transport { series, arg }, dim, Component::Two))
}

pub fn mid(ctx: GlobeContext, kind: MidKind, point: Term) -> Result<Term, TermError> {
    let dim = kind.dim(ctx).ok_or(GlobeError::IllegalFamily { family: Family::Xi, n: ctx.n })?;
    ctx.object(kind.family(), dim)?;
    if point.dim() != 0 {
        return Err(TermError::DimMismatch { expected: 0, found: point.dim() });
    }
    if point.component() != Component::One {
        return Err(TermError::ComponentMismatch {
            expected: Component::One,
            found: point.component(),
        });
    }
    Ok(Term::mk(Node::Mid { kind, point }, dim, Component::Two))
}

pub fn coh(ctx: GlobeContext, cell: &Arc<CohCell>, args: Vec<Term>) -> Result<Term, TermError> {
    let arity = cell.arity().realization();
    if arity.ctx() != ctx {
        return Err(TermError::ContextMismatch {
            coh: cell.name().to_string(),
            expected: ctx.n,
            found: arity.ctx().n,
        });
    }
    if args.len() != arity.len() {
        return Err(TermError::ArgCount {
            coh: cell.name().to_string(),
            expected: arity.len(),
            found: args.len(),
        });
    }
    for (c, u) in arity.cells().zip(&args) {
        check_shape(c, u)?;
    }
    for (c, u) in arity.cells().zip(&args) {
        if let (Some(s), Some(t)) = (arity.source(c), arity.target(c)) {
            for (b, side) in [(s, Side::S), (t, Side::T)] {
                let expected = &args[arity.flat_index(b).expect("boundary")];
                let found = u.boundary(side)?;
                if *expected != found {
                    return Err(TermError::BoundaryMismatch {
                        level: b.dim,
                        left: expected.to_string(),
                        right: found.to_string(),
                    });
                }
            }
        }
    }
    let family = cell.family();
    let component = if family == Family::Cod { Component::Two } else { Component::One };
    Ok(Term::mk(
        Node::Coh { cell: cell.clone(), args: args.into() },
        cell.dim(),
        component,
    ))
}
