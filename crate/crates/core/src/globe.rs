//! The n-globe categories `G_n`: atomic arities, their order, and the
//! object-level filtration maps `G_{n-1} -> G_n`.
//!
//! Objects come in seven families. The disc-like families (`1(m)`, `2(m)`,
//! `f^m`, `g^m`) exist in every dimension; the transformation points
//! (`alpha_k`, `beta_k`, `xi`) sit between the images of `f^0` and `g^0`.
//! Arrows are generated by cosources and cotargets, and by the globular
//! equations every composite `a -> b` collapses to the class of its first
//! generating step, so a hom-set is a subset of `{S, T}` (or `{Id}`).

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// The transformation level `n` of `G_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlobeContext {
    pub n: u32,
}

impl GlobeContext {
    pub const fn new(n: u32) -> Self {
        GlobeContext { n }
    }

    /// Dimension of the `xi` object, `n - 1`.
    pub fn xi_dim(self) -> Option<u32> {
        (self.n >= 2).then(|| self.n - 1)
    }

    pub fn object(self, family: Family, dim: u32) -> Result<GlobeObject, GlobeError> {
        GlobeObject::new(self, family, dim)
    }

    pub fn dom(self, m: u32) -> GlobeObject {
        GlobeObject::new(self, Family::Dom, m).expect("Dom is legal at every level")
    }

    pub fn cod(self, m: u32) -> Result<GlobeObject, GlobeError> {
        GlobeObject::new(self, Family::Cod, m)
    }

    pub fn fser(self, m: u32) -> Result<GlobeObject, GlobeError> {
        GlobeObject::new(self, Family::FSer, m)
    }

    pub fn gser(self, m: u32) -> Result<GlobeObject, GlobeError> {
        GlobeObject::new(self, Family::GSer, m)
    }

    pub fn xi(self) -> Result<GlobeObject, GlobeError> {
        let dim = self.xi_dim().ok_or(GlobeError::IllegalFamily { family: Family::Xi, n: self.n })?;
        GlobeObject::new(self, Family::Xi, dim)
    }

    pub fn alpha(self, k: u32) -> Result<GlobeObject, GlobeError> {
        GlobeObject::new(self, Family::Alpha(k), k)
    }

    pub fn beta(self, k: u32) -> Result<GlobeObject, GlobeError> {
        GlobeObject::new(self, Family::Beta(k), k)
    }

    /// Every legal object of dimension at most `max_dim`, in canonical order.
    pub fn objects_up_to(self, max_dim: u32) -> Vec<GlobeObject> {
        let mut out = Vec::new();
        for family in [Family::Dom, Family::Cod, Family::FSer, Family::GSer] {
            for d in 0..=max_dim {
                if let Ok(o) = GlobeObject::new(self, family, d) {
                    out.push(o);
                }
            }
        }
        if self.n >= 3 {
            for k in 1..=self.n - 2 {
                for family in [Family::Alpha(k), Family::Beta(k)] {
                    if k <= max_dim {
                        out.push(GlobeObject { family, dim: k });
                    }
                }
            }
        }
        if let Some(d) = self.xi_dim() {
            if d <= max_dim {
                out.push(GlobeObject { family: Family::Xi, dim: d });
            }
        }
        out.sort();
        out
    }
}

/// Which component of a pair of globular sets a cell lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Component {
    One,
    Two,
}

impl Component {
    pub fn index(self) -> usize {
        match self {
            Component::One => 0,
            Component::Two => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `1(m)`
    Dom,
    /// `2(m)`
    Cod,
    /// `f^m(1(m))`
    FSer,
    /// `g^m(1(m))`
    GSer,
    Alpha(u32),
    Beta(u32),
    Xi,
}

impl Family {
    /// The globe-like families, which carry one object per dimension.
    pub fn is_series(self) -> bool {
        matches!(self, Family::Dom | Family::Cod | Family::FSer | Family::GSer)
    }

    pub fn is_point(self) -> bool {
        !self.is_series()
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Dom => write!(f, "one"),
            Family::Cod => write!(f, "two"),
            Family::FSer => write!(f, "f"),
            Family::GSer => write!(f, "g"),
            Family::Alpha(k) => write!(f, "alpha{k}"),
            Family::Beta(k) => write!(f, "beta{k}"),
            Family::Xi => write!(f, "xi"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GlobeError {
    #[error("family {family} is not available in G_{n}")]
    IllegalFamily { family: Family, n: u32 },
    #[error("illegal dimension {dim} for family {family} in G_{n}")]
    IllegalDim { family: Family, dim: u32, n: u32 },
}

/// An object of `G_n`, interned by `(family, dim)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GlobeObject {
    pub family: Family,
    pub dim: u32,
}

impl GlobeObject {
    pub fn new(ctx: GlobeContext, family: Family, dim: u32) -> Result<Self, GlobeError> {
        let n = ctx.n;
        let illegal = GlobeError::IllegalFamily { family, n };
        match family {
            Family::Dom => {}
            Family::Cod | Family::FSer if n >= 1 => {}
            Family::GSer if n >= 2 => {}
            Family::Xi if n >= 2 => {
                if dim != n - 1 {
                    return Err(GlobeError::IllegalDim { family, dim, n });
                }
            }
            Family::Alpha(k) | Family::Beta(k) if n >= 3 => {
                if k < 1 || k > n - 2 || dim != k {
                    return Err(GlobeError::IllegalDim { family, dim, n });
                }
            }
            _ => return Err(illegal),
        }
        Ok(GlobeObject { family, dim })
    }

    pub fn is_legal(self, ctx: GlobeContext) -> bool {
        GlobeObject::new(ctx, self.family, self.dim).is_ok()
    }

    /// Component of the underlying disc: only `2(m)` lives in the second one.
    pub fn component(self) -> Component {
        match self.family {
            Family::Cod => Component::Two,
            _ => Component::One,
        }
    }

    /// Dimension of the underlying disc; transformation points have a
    /// single 0-cell as arity.
    pub fn disc_dim(self) -> u32 {
        if self.family.is_series() {
            self.dim
        } else {
            0
        }
    }

    /// Short surface spelling: `one2`, `two1`, `f0`, `g1`, `alpha1`, `beta1`, `xi`.
    pub fn keyword(self) -> String {
        match self.family {
            Family::Dom => format!("one{}", self.dim),
            Family::Cod => format!("two{}", self.dim),
            Family::FSer => format!("f{}", self.dim),
            Family::GSer => format!("g{}", self.dim),
            Family::Alpha(k) => format!("alpha{k}"),
            Family::Beta(k) => format!("beta{k}"),
            Family::Xi => "xi".to_string(),
        }
    }

    /// ASCII rendering: `1(m)`, `2(m)`, `f^m`, `g^m`, `alpha_k`, `beta_k`, `xi`.
    pub fn ascii(self) -> String {
        match self.family {
            Family::Dom => format!("1({})", self.dim),
            Family::Cod => format!("2({})", self.dim),
            Family::FSer => format!("f^{}", self.dim),
            Family::GSer => format!("g^{}", self.dim),
            Family::Alpha(k) => format!("alpha_{k}"),
            Family::Beta(k) => format!("beta_{k}"),
            Family::Xi => "xi".to_string(),
        }
    }

    /// The notation used when spelling arities of 2-transformations:
    /// `2(1)`, `f_1(1(1))`, `g_1(1(1))`, and `τ(1(0))` for `xi` at level 2.
    pub fn arity_notation(self, ctx: GlobeContext) -> String {
        match self.family {
            Family::Dom => format!("1({})", self.dim),
            Family::Cod => format!("2({})", self.dim),
            Family::FSer => format!("f_{}(1({}))", self.dim, self.dim),
            Family::GSer => format!("g_{}(1({}))", self.dim, self.dim),
            Family::Alpha(k) => format!("α_{k}(1(0))"),
            Family::Beta(k) => format!("β_{k}(1(0))"),
            Family::Xi if ctx.n == 2 => "τ(1(0))".to_string(),
            Family::Xi => format!("ξ_{}(1(0))", self.dim),
        }
    }
}

impl fmt::Display for GlobeObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Dom => write!(f, "1({})", self.dim),
            Family::Cod => write!(f, "2({})", self.dim),
            Family::FSer => write!(f, "f^{}(1({}))", self.dim, self.dim),
            Family::GSer => write!(f, "g^{}(1({}))", self.dim, self.dim),
            Family::Alpha(k) => write!(f, "α_{k}(1(0))"),
            Family::Beta(k) => write!(f, "β_{k}(1(0))"),
            Family::Xi => write!(f, "ξ_{}(1(0))", self.dim),
        }
    }
}

/// Classes of arrows `a -> b` in `G_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum HomClass {
    Id,
    S,
    T,
}

/// Which boundary of a globe: the source (cosource) or target (cotarget) side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    S,
    T,
}

impl From<Side> for HomClass {
    fn from(side: Side) -> Self {
        match side {
            Side::S => HomClass::S,
            Side::T => HomClass::T,
        }
    }
}

/// Generating arrows `a -> b` of `G_n` with `dim(b) = dim(a) + 1`.
///
/// The transformation points follow the globe between `F(x)` and `G(x)`:
/// `alpha_0 = f^0`, `beta_0 = g^0`, each of `alpha_k`, `beta_k`, `xi` has the
/// alpha-chain as source and the beta-chain as target.
pub fn generating_arrows(ctx: GlobeContext, a: GlobeObject) -> Vec<(Side, GlobeObject)> {
    let mut out = Vec::new();
    if a.family.is_series() {
        let next = GlobeObject { family: a.family, dim: a.dim + 1 };
        if next.is_legal(ctx) {
            out.push((Side::S, next));
            out.push((Side::T, next));
        }
    }
    let n = ctx.n;
    if n < 2 {
        return out;
    }
    // position on the alpha/beta ladder: level 0 is f^0 / g^0
    let rung = match a.family {
        Family::FSer if a.dim == 0 => Some((0, Side::S)),
        Family::GSer if a.dim == 0 => Some((0, Side::T)),
        Family::Alpha(k) => Some((k, Side::S)),
        Family::Beta(k) => Some((k, Side::T)),
        _ => None,
    };
    if let Some((level, side)) = rung {
        if level + 1 <= n - 2 {
            out.push((side, GlobeObject { family: Family::Alpha(level + 1), dim: level + 1 }));
            out.push((side, GlobeObject { family: Family::Beta(level + 1), dim: level + 1 }));
        }
        if level == n - 2 {
            out.push((side, GlobeObject { family: Family::Xi, dim: n - 1 }));
        }
    }
    out
}

/// `a <= b`: equal, or `b` reachable from `a` along generating arrows.
pub fn leq(ctx: GlobeContext, a: GlobeObject, b: GlobeObject) -> bool {
    if a == b {
        return true;
    }
    if !a.is_legal(ctx) || !b.is_legal(ctx) {
        return false;
    }
    first_step(a, b).is_some()
}

// The side of the first generating step of any path a -> b (a != b), if one exists.
fn first_step(a: GlobeObject, b: GlobeObject) -> Option<Vec<Side>> {
    if a.family == b.family && a.family.is_series() {
        return (a.dim < b.dim).then(|| vec![Side::S, Side::T]);
    }
    let ladder_target = matches!(b.family, Family::Alpha(_) | Family::Beta(_) | Family::Xi);
    if !ladder_target {
        return None;
    }
    let (level, side) = match a.family {
        Family::FSer if a.dim == 0 => (0, Side::S),
        Family::GSer if a.dim == 0 => (0, Side::T),
        Family::Alpha(k) => (k, Side::S),
        Family::Beta(k) => (k, Side::T),
        _ => return None,
    };
    (level < b.dim).then(|| vec![side])
}

/// Hom-set classes of `G_n(a, b)`.
pub fn hom_classes(ctx: GlobeContext, a: GlobeObject, b: GlobeObject) -> BTreeSet<HomClass> {
    if a == b {
        return BTreeSet::from([HomClass::Id]);
    }
    if !leq(ctx, a, b) {
        return BTreeSet::new();
    }
    first_step(a, b)
        .unwrap_or_default()
        .into_iter()
        .map(HomClass::from)
        .collect()
}

/// Object part of the cosource `s^n_{n-1}: G_{n-1} -> G_n`; `ctx` is the target level `n`.
pub fn filt_map_s(ctx: GlobeContext, a: GlobeObject) -> Result<GlobeObject, GlobeError> {
    filt_map(ctx, a, Side::S)
}

/// Object part of the cotarget `t^n_{n-1}: G_{n-1} -> G_n`; `ctx` is the target level `n`.
pub fn filt_map_t(ctx: GlobeContext, a: GlobeObject) -> Result<GlobeObject, GlobeError> {
    filt_map(ctx, a, Side::T)
}

fn filt_map(ctx: GlobeContext, a: GlobeObject, side: Side) -> Result<GlobeObject, GlobeError> {
    let n = ctx.n;
    if n == 0 {
        return Err(GlobeError::IllegalFamily { family: a.family, n });
    }
    let lower = GlobeContext::new(n - 1);
    GlobeObject::new(lower, a.family, a.dim)?;
    let family = match (n, a.family, side) {
        (1, Family::Dom, Side::T) => Family::Cod,
        (2, Family::FSer, Side::T) => Family::GSer,
        (_, Family::Xi, Side::S) => Family::Alpha(n - 2),
        (_, Family::Xi, Side::T) => Family::Beta(n - 2),
        (_, family, _) => family,
    };
    GlobeObject::new(ctx, family, a.dim)
}
