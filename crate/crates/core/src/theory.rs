//! Arrows between trees: every cell of the domain realization is sent to a
//! term over the codomain, compatibly with boundaries. Operations are arrows
//! out of single discs `1(m)` or `2(m)`.

use std::fmt;
use std::sync::Arc;

use serde_json::json;
use thiserror::Error;

use crate::globe::{Component, Family, GlobeContext, GlobeError, GlobeObject, Side};
use crate::pasting::{realization_equal, CellRef, PastingError, Tree};
use crate::term::{MidKind, Series, Term, TermBuilder, TermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoryError {
    #[error("assignment covers {found} cells, the domain has {expected}")]
    AssignCount { expected: usize, found: usize },
    #[error("cell {cell} has dimension {expected}, its image has dimension {found}")]
    DimMismatch { cell: CellRef, expected: u32, found: u32 },
    #[error("cell {cell} lives in component {expected}, its image in component {found}")]
    ComponentMismatch {
        cell: CellRef,
        expected: Component,
        found: Component,
    },
    #[error("image of cell {cell} has the wrong {side:?}-boundary")]
    BoundaryMismatch { cell: CellRef, side: Side },
    #[error("codomain {found} is not the tree {expected}")]
    TreeMismatch { expected: String, found: String },
    #[error("{0} is not a realization of the same shape")]
    NotRealizationEqual(String),
    #[error("expected an arrow out of a single disc, domain is {0}")]
    NotAnOperation(String),
    #[error("no glue of dimension {p} fits between {left} and {right}")]
    GlueNotBelow { p: u32, left: String, right: String },
    #[error("the two blocks disagree on their shared boundary")]
    BoundaryDisagreement,
    #[error("composition level {p} is not below dimension {m}")]
    BadLevel { m: u32, p: u32 },
    #[error("a 0-dimensional operation has no boundary")]
    ZeroDim,
    #[error(transparent)]
    Term(#[from] TermError),
    #[error(transparent)]
    Pasting(#[from] PastingError),
    #[error(transparent)]
    Globe(#[from] GlobeError),
}

/// A morphism of the theory: domain cells to codomain terms.
#[derive(Clone)]
pub struct Arrow {
    dom: Tree,
    cod: Tree,
    assign: Arc<[Term]>,
}

impl Arrow {
    /// Validates dimensions, components and boundary compatibility.
    pub fn new(dom: Tree, cod: Tree, assign: Vec<Term>) -> Result<Arrow, TheoryError> {
        let dr = dom.realization();
        let cr = cod.realization();
        if assign.len() != dr.len() {
            return Err(TheoryError::AssignCount { expected: dr.len(), found: assign.len() });
        }
        for (cell, u) in dr.cells().zip(&assign) {
            if u.dim() != cell.dim {
                return Err(TheoryError::DimMismatch { cell, expected: cell.dim, found: u.dim() });
            }
            if u.component() != cell.component {
                return Err(TheoryError::ComponentMismatch {
                    cell,
                    expected: cell.component,
                    found: u.component(),
                });
            }
            u.check_host(cr)?;
        }
        for (cell, u) in dr.cells().zip(&assign) {
            for side in [Side::S, Side::T] {
                if let Some(b) = dr.set().boundary_of(cell, side) {
                    if assign[dr.flat_index(b).expect("boundary")] != u.boundary(side)? {
                        return Err(TheoryError::BoundaryMismatch { cell, side });
                    }
                }
            }
        }
        Ok(Arrow { dom, cod, assign: assign.into() })
    }

    fn raw(dom: Tree, cod: Tree, assign: Vec<Term>) -> Arrow {
        Arrow { dom, cod, assign: assign.into() }
    }

    /// An operation out of the disc `dom`, determined by the image of its top cell.
    pub fn from_top(dom: Tree, cod: Tree, top: Term) -> Result<Arrow, TheoryError> {
        if !dom.is_disc() || !matches!(dom.columns()[0].family, Family::Dom | Family::Cod) {
            return Err(TheoryError::NotAnOperation(dom.to_string()));
        }
        let m = dom.columns()[0].dim;
        let dr = dom.realization();
        let component = dom.component();
        let mut slots: Vec<Option<Term>> = vec![None; dr.len()];
        let at = |d: u32, id: u32| dr.flat_index(CellRef::new(component, d, id)).expect("disc cell");
        if top.dim() != m {
            return Err(TheoryError::DimMismatch {
                cell: CellRef::new(component, m, 0),
                expected: m,
                found: top.dim(),
            });
        }
        let (mut s, mut t) = (top.clone(), top.clone());
        slots[at(m, 0)] = Some(top);
        for d in (0..m).rev() {
            s = s.source()?;
            t = t.target()?;
            slots[at(d, 0)] = Some(s.clone());
            slots[at(d, 1)] = Some(t.clone());
        }
        let assign = slots.into_iter().map(|x| x.expect("disc cells are filled")).collect();
        Arrow::new(dom, cod, assign)
    }

    pub fn identity(t: &Tree) -> Arrow {
        let b = TermBuilder::new(t.realization());
        Arrow::raw(t.clone(), t.clone(), b.generators().to_vec())
    }

    pub fn dom(&self) -> &Tree {
        &self.dom
    }

    pub fn cod(&self) -> &Tree {
        &self.cod
    }

    pub fn assignments(&self) -> &[Term] {
        &self.assign
    }

    pub fn image(&self, cell: CellRef) -> Option<&Term> {
        self.assign.get(self.dom.realization().flat_index(cell)?)
    }

    pub fn is_operation(&self) -> bool {
        self.dom.is_disc() && matches!(self.dom.columns()[0].family, Family::Dom | Family::Cod)
    }

    /// The disc object of an operation.
    pub fn disc(&self) -> Option<GlobeObject> {
        self.is_operation().then(|| self.dom.columns()[0])
    }

    /// Image of the top cell, for operations.
    pub fn top(&self) -> Option<&Term> {
        let d = self.disc()?;
        self.image(CellRef::new(d.component(), d.dim, 0))
    }

    pub fn op_dim(&self) -> Option<u32> {
        self.disc().map(|d| d.dim)
    }

    /// Every cell goes to a bare generator.
    pub fn is_bare(&self) -> bool {
        self.assign.iter().all(Term::is_gen)
    }

    pub fn stage(&self) -> u32 {
        self.assign.iter().map(Term::stage).max().unwrap_or(0)
    }

    /// Sends a term over the domain to a term over the codomain.
    pub fn apply(&self, u: &Term) -> Term {
        let dr = self.dom.realization();
        u.substitute(&|c| self.assign[dr.flat_index(c).expect("domain cell")].clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        let assign: Vec<_> = self
            .dom
            .realization()
            .cells()
            .zip(self.assign.iter())
            .map(|(c, u)| json!({ "cell": c.to_string(), "term": u.to_string() }))
            .collect();
        json!({
            "dom": self.dom.to_string(),
            "cod": self.cod.to_string(),
            "assign": assign,
        })
    }
}

impl PartialEq for Arrow {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom && self.cod == other.cod && self.assign == other.assign
    }
}

impl Eq for Arrow {}

impl fmt::Debug for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.top() {
            Some(top) => write!(f, "{} -> {} : {}", self.dom.columns()[0].ascii(), self.cod, top),
            None => write!(f, "{} -> {}", self.dom, self.cod),
        }
    }
}

/// `sigma ∘ f`, defined when the codomain of `f` is the domain table of `sigma`.
pub fn compose(sigma: &Arrow, f: &Arrow) -> Result<Arrow, TheoryError> {
    if f.cod != sigma.dom {
        return Err(TheoryError::TreeMismatch {
            expected: sigma.dom.to_string(),
            found: f.cod.to_string(),
        });
    }
    let assign = f.assign.iter().map(|u| sigma.apply(u)).collect();
    Ok(Arrow::raw(f.dom.clone(), sigma.cod.clone(), assign))
}

/// Swaps the codomain table for a realization-equal one.
pub fn coerce(arrow: &Arrow, tree: &Tree) -> Result<Arrow, TheoryError> {
    if !realization_equal(&arrow.cod, tree) || arrow.cod.ctx() != tree.ctx() {
        return Err(TheoryError::NotRealizationEqual(tree.to_string()));
    }
    Ok(Arrow::raw(arrow.dom.clone(), tree.clone(), arrow.assign.to_vec()))
}

fn disc_family(component: Component) -> Family {
    match component {
        Component::One => Family::Dom,
        Component::Two => Family::Cod,
    }
}

/// The binary composition operation `X(m) -> [X(m), X(m) ; X(p)]`.
///
/// The left column is the source side, so its top is the `before` factor.
pub fn comp_op(
    ctx: GlobeContext,
    component: Component,
    m: u32,
    p: u32,
) -> Result<Arrow, TheoryError> {
    if p >= m {
        return Err(TheoryError::BadLevel { m, p });
    }
    let family = disc_family(component);
    let disc = ctx.object(family, m)?;
    let glue = ctx.object(family, p)?;
    let dom = Tree::disc(ctx, disc)?;
    let cod = Tree::new(ctx, vec![disc, disc], vec![glue])?;
    let r = cod.realization();
    let b = TermBuilder::new(r);
    let top_local = 2 * m as usize;
    let left = b.gen(r.column_cell(0, top_local).expect("left top"))?;
    let right = b.gen(r.column_cell(1, top_local).expect("right top"))?;
    let top = b.comp(p, right, left)?;
    Arrow::from_top(dom, cod, top)
}

/// `2(m) -> [f^m]` (or `[g^m]`), top sent to the transported generator.
pub fn transport_op(ctx: GlobeContext, series: Series, m: u32) -> Result<Arrow, TheoryError> {
    let target = ctx.object(series.family(), m)?;
    let dom = Tree::disc(ctx, ctx.cod(m)?)?;
    let cod = Tree::disc(ctx, target)?;
    let b = TermBuilder::new(cod.realization());
    let top = b.transport(series, b.gen(CellRef::new(Component::One, m, 0))?)?;
    Arrow::from_top(dom, cod, top)
}

/// `2(d) -> [kind]` for a middle cell of dimension `d`.
pub fn mid_op(ctx: GlobeContext, kind: MidKind) -> Result<Arrow, TheoryError> {
    let d = kind
        .dim(ctx)
        .ok_or(GlobeError::IllegalFamily { family: kind.family(), n: ctx.n })?;
    let target = ctx.object(kind.family(), d)?;
    let dom = Tree::disc(ctx, ctx.cod(d)?)?;
    let cod = Tree::disc(ctx, target)?;
    let b = TermBuilder::new(cod.realization());
    let top = b.mid(kind, b.gen(CellRef::new(Component::One, 0, 0))?)?;
    Arrow::from_top(dom, cod, top)
}

/// `2(n-1) -> [xi]`.
pub fn xi_op(ctx: GlobeContext) -> Result<Arrow, TheoryError> {
    mid_op(ctx, MidKind::Xi)
}

fn glue_candidates(ctx: GlobeContext, p: u32, left: GlobeObject, right: GlobeObject) -> Vec<GlobeObject> {
    ctx.objects_up_to(p)
        .into_iter()
        .filter(|g| g.dim == p)
        .filter(|&g| {
            Tree::new(ctx, vec![left, right], vec![g]).is_ok()
        })
        .collect()
}

fn glue_domains(f: &Tree, p: u32, g: &Tree) -> Result<Tree, TheoryError> {
    let ctx = f.ctx();
    let left = *f.columns().last().expect("nonempty");
    let right = g.columns()[0];
    let glue = glue_candidates(ctx, p, left, right)
        .into_iter()
        .next()
        .ok_or_else(|| TheoryError::GlueNotBelow {
            p,
            left: left.ascii(),
            right: right.ascii(),
        })?;
    Ok(Tree::glue(f, glue, g)?)
}

// Images of all glued-domain cells, one block per side; None on disagreement.
fn glued_assignment(
    dom: &Tree,
    left_cols: usize,
    image: &dyn Fn(bool, usize, usize) -> Term,
) -> Option<Vec<Term>> {
    let dr = dom.realization();
    let mut slots: Vec<Option<Term>> = vec![None; dr.len()];
    for col in 0..dr.column_count() {
        let is_left = col < left_cols;
        let local_col = if is_left { col } else { col - left_cols };
        for (local, cell) in dr.column_cells(col).iter().enumerate() {
            let u = image(is_left, local_col, local);
            let slot = &mut slots[dr.flat_index(*cell).expect("cell")];
            match slot {
                Some(existing) if *existing != u => return None,
                Some(_) => {}
                None => *slot = Some(u),
            }
        }
    }
    Some(slots.into_iter().map(|s| s.expect("every cell lies in a column")).collect())
}

/// The pasting `f ⋆_p g`: glued domain to glued codomain, `f` on the left block and `g` on the right.
pub fn star(f: &Arrow, p: u32, g: &Arrow) -> Result<Arrow, TheoryError> {
    let dom = glue_domains(&f.dom, p, &g.dom)?;
    let ctx = f.cod.ctx();
    let left = *f.cod.columns().last().expect("nonempty");
    let right = g.cod.columns()[0];
    let candidates = glue_candidates(ctx, p, left, right);
    if candidates.is_empty() {
        return Err(TheoryError::GlueNotBelow { p, left: left.ascii(), right: right.ascii() });
    }
    let f_cols = f.cod.columns().len();
    for glue in candidates {
        let cod = Tree::glue(&f.cod, glue, &g.cod)?;
        let cr = cod.realization();
        let b = TermBuilder::new(cr);
        let rename = |arrow: &Arrow, offset: usize, u: &Term| {
            let src = arrow.cod.realization();
            u.substitute(&|c| {
                let (col, local) = src.origin(c).expect("cell origin");
                b.gen(cr.column_cell(col + offset, local).expect("glued cell"))
                    .expect("glued cell")
            })
        };
        let image = |is_left: bool, col: usize, local: usize| {
            let (arrow, offset) = if is_left { (f, 0) } else { (g, f_cols) };
            let cell = arrow.dom.realization().column_cell(col, local).expect("domain cell");
            rename(arrow, offset, arrow.image(cell).expect("assigned"))
        };
        if let Some(assign) = glued_assignment(&dom, f.dom.columns().len(), &image) {
            return Arrow::new(dom, cod, assign);
        }
    }
    Err(TheoryError::BoundaryDisagreement)
}

/// The copairing `[f, g]` out of the glued domain, for arrows with the same codomain.
pub fn copair(f: &Arrow, p: u32, g: &Arrow) -> Result<Arrow, TheoryError> {
    if f.cod != g.cod {
        return Err(TheoryError::TreeMismatch {
            expected: f.cod.to_string(),
            found: g.cod.to_string(),
        });
    }
    let dom = glue_domains(&f.dom, p, &g.dom)?;
    let image = |is_left: bool, col: usize, local: usize| {
        let arrow = if is_left { f } else { g };
        let cell = arrow.dom.realization().column_cell(col, local).expect("domain cell");
        arrow.image(cell).expect("assigned").clone()
    };
    let assign = glued_assignment(&dom, f.dom.columns().len(), &image)
        .ok_or(TheoryError::BoundaryDisagreement)?;
    Arrow::new(dom, f.cod.clone(), assign)
}

/// Two operations out of the same disc of positive dimension, into
/// realization-equal trees, whose tops share source and target.
pub fn is_parallel(f: &Arrow, g: &Arrow) -> bool {
    let (Some(df), Some(dg)) = (f.disc(), g.disc()) else {
        return false;
    };
    if df != dg || df.dim == 0 || f.cod.ctx() != g.cod.ctx() || !realization_equal(&f.cod, &g.cod) {
        return false;
    }
    let (tf, tg) = (f.top().expect("operation"), g.top().expect("operation"));
    tf.source().ok() == tg.source().ok() && tf.target().ok() == tg.target().ok()
}

/// The operation one dimension down whose top is the source (or target) of `k`'s top.
pub fn precompose_boundary(k: &Arrow, side: Side) -> Result<Arrow, TheoryError> {
    let disc = k.disc().ok_or_else(|| TheoryError::NotAnOperation(k.dom.to_string()))?;
    if disc.dim == 0 {
        return Err(TheoryError::ZeroDim);
    }
    let ctx = k.dom.ctx();
    let dom = Tree::disc(ctx, ctx.object(disc.family, disc.dim - 1)?)?;
    let top = k.top().expect("operation").boundary(side)?;
    Arrow::from_top(dom, k.cod.clone(), top)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c2() -> GlobeContext {
        GlobeContext::new(2)
    }

    #[test]
    fn xi_op_shapes() {
        let tau = xi_op(c2()).unwrap();
        assert_eq!(tau.cod().to_string(), "[xi]");
        assert_eq!(tau.dom().to_string(), "[two1]");
        assert_eq!(xi_op(GlobeContext::new(3)).unwrap().cod().to_string(), "[xi]");
        assert_eq!(xi_op(GlobeContext::new(3)).unwrap().op_dim(), Some(2));
        assert!(matches!(xi_op(GlobeContext::new(1)), Err(TheoryError::Globe(_))));
        assert!(!tau.is_bare());
    }

    #[test]
    fn transport_ops() {
        let f1 = transport_op(c2(), Series::F, 1).unwrap();
        assert_eq!(f1.top().unwrap().to_string(), "F(c1_0)");
        let f0 = transport_op(c2(), Series::F, 0).unwrap();
        assert_eq!(f0.cod().to_string(), "[f0]");
        assert!(transport_op(GlobeContext::new(1), Series::G, 1).is_err());
    }

    #[test]
    fn comp_ops() {
        let nu = comp_op(c2(), Component::Two, 1, 0).unwrap();
        assert_eq!(nu.cod().to_string(), "[two1, two1 ; two0]");
        assert_eq!(nu.top().unwrap().to_string(), "comp{1,0}(c1_1, c1_0)");
        let v = comp_op(c2(), Component::Two, 2, 1).unwrap();
        assert_eq!(v.cod().to_string(), "[two2, two2 ; two1]");
        let h = comp_op(c2(), Component::Two, 2, 0).unwrap();
        assert_eq!(h.cod().to_string(), "[two2, two2 ; two0]");
        assert!(matches!(
            comp_op(c2(), Component::Two, 1, 1),
            Err(TheoryError::BadLevel { .. })
        ));
        // source of the composite is the source of the left factor
        let s = precompose_boundary(&nu, Side::S).unwrap();
        assert_eq!(s.top().unwrap().as_gen(), nu.cod().realization().column_cell(0, 0));
    }

    #[test]
    fn star_and_compose() {
        let h1 = transport_op(c2(), Series::G, 1).unwrap();
        let tau = xi_op(c2()).unwrap();
        let ht = star(&tau, 0, &h1).unwrap();
        assert_eq!(ht.dom().to_string(), "[two1, two1 ; two0]");
        assert_eq!(ht.cod().to_string(), "[xi, g1 ; g0]");
        let nu = comp_op(c2(), Component::Two, 1, 0).unwrap();
        let op = compose(&ht, &nu).unwrap();
        assert_eq!(op.top().unwrap().to_string(), "comp{1,0}(G(c1_0), xi(c0_0))");
        assert!(compose(&nu, &ht).is_err());
        let id = Arrow::identity(op.cod());
        assert_eq!(compose(&id, &op).unwrap(), op);
        assert!(id.is_bare());
    }

    #[test]
    fn star_identities() {
        let c = c2();
        let t = Tree::disc(c, c.cod(1).unwrap()).unwrap();
        let id = Arrow::identity(&t);
        let glued = star(&id, 0, &id).unwrap();
        let expected = Tree::new(c, vec![c.cod(1).unwrap(); 2], vec![c.cod(0).unwrap()]).unwrap();
        assert_eq!(glued, Arrow::identity(&expected));
    }

    #[test]
    fn parallel_examples() {
        let h1 = transport_op(c2(), Series::G, 1).unwrap();
        assert!(is_parallel(&h1, &h1));
        let f1 = transport_op(c2(), Series::F, 1).unwrap();
        let f1c = coerce(&f1, h1.cod()).unwrap();
        assert!(!is_parallel(&f1c, &h1));
        let tau = xi_op(c2()).unwrap();
        let nu = comp_op(c2(), Component::Two, 1, 0).unwrap();
        let left = compose(&star(&tau, 0, &h1).unwrap(), &nu).unwrap();
        let right = compose(&star(&f1, 0, &tau).unwrap(), &nu).unwrap();
        let right = coerce(&right, left.cod()).unwrap();
        assert!(is_parallel(&left, &right));
        let f0 = transport_op(c2(), Series::F, 0).unwrap();
        assert!(!is_parallel(&f0, &f0));
    }

    #[test]
    fn boundary_of_tau() {
        let tau = xi_op(c2()).unwrap();
        let s = precompose_boundary(&tau, Side::S).unwrap();
        assert_eq!(s.dom().to_string(), "[two0]");
        assert_eq!(s.top().unwrap().to_string(), "F(c0_0)");
        let s0 = precompose_boundary(&s, Side::S);
        assert_eq!(s0.unwrap_err(), TheoryError::ZeroDim);
    }

    #[test]
    fn make_arrow_errors() {
        let c = c2();
        let dom = Tree::disc(c, c.cod(1).unwrap()).unwrap();
        let cod = Tree::disc(c, c.xi().unwrap()).unwrap();
        let b = TermBuilder::new(cod.realization());
        let fx = b.transport(Series::F, b.gen(CellRef::new(Component::One, 0, 0)).unwrap()).unwrap();
        let err = Arrow::new(dom.clone(), cod.clone(), vec![fx.clone(), fx.clone(), fx]).unwrap_err();
        assert!(matches!(err, TheoryError::DimMismatch { .. }));
    }

    #[test]
    fn copair_on_shared_codomain() {
        let nu = comp_op(c2(), Component::Two, 1, 0).unwrap();
        let s = precompose_boundary(&nu, Side::S).unwrap();
        let cod = nu.cod().clone();
        let r = cod.realization();
        let b = TermBuilder::new(r);
        let left = Arrow::from_top(
            Tree::disc(c2(), c2().cod(1).unwrap()).unwrap(),
            cod.clone(),
            b.gen(r.column_cell(0, 2).unwrap()).unwrap(),
        )
        .unwrap();
        let right = Arrow::from_top(
            Tree::disc(c2(), c2().cod(1).unwrap()).unwrap(),
            cod.clone(),
            b.gen(r.column_cell(1, 2).unwrap()).unwrap(),
        )
        .unwrap();
        let both = copair(&left, 0, &right).unwrap();
        assert_eq!(both, Arrow::identity(&cod));
        assert!(copair(&right, 0, &left).is_err());
        assert_eq!(s.op_dim(), Some(0));
    }
}
