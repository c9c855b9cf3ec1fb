//! Coherence cells: liftings of admissible parallel pairs, registered on
//! demand and stratified by stage.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use serde_json::json;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::exec::Exec;
use crate::globe::{Component, Family, GlobeContext, Side};
use crate::pasting::{enumerate_trees, CellRef, Tree};
use crate::term::{self, fill_arguments, MidKind, Series, Term, TermBuilder, TermError};
use crate::theory::{coerce, is_parallel, precompose_boundary, Arrow, TheoryError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohError {
    #[error("the pair is not parallel")]
    NotParallel,
    #[error("the pair is not admissible under the {0} policy")]
    NotAdmissible(Policy),
    #[error("registry entry {id}: {reason}")]
    Load { id: String, reason: String },
    #[error(transparent)]
    Theory(#[from] TheoryError),
    #[error(transparent)]
    Term(#[from] TermError),
}

/// Which parallel pairs may be lifted.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub enum Policy {
    /// Not both members bare.
    #[default]
    PairNotBare,
    /// Neither member bare.
    BothNotBare,
    AllParallel,
}

impl Policy {
    pub fn parse(s: &str) -> Option<Policy> {
        match s {
            "pair" => Some(Policy::PairNotBare),
            "both" => Some(Policy::BothNotBare),
            "all" => Some(Policy::AllParallel),
            _ => None,
        }
    }

    pub fn keyword(self) -> &'static str {
        match self {
            Policy::PairNotBare => "pair",
            Policy::BothNotBare => "both",
            Policy::AllParallel => "all",
        }
    }

    fn accepts(self, f_bare: bool, g_bare: bool) -> bool {
        match self {
            Policy::PairNotBare => !(f_bare && g_bare),
            Policy::BothNotBare => !f_bare && !g_bare,
            Policy::AllParallel => true,
        }
    }
}

impl fmt::Display for Policy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A registered lifting of a parallel pair `(f, g)` of m-operations.
pub struct CohCell {
    id: String,
    name: String,
    family: Family,
    dim: u32,
    arity: Tree,
    cell_names: Vec<String>,
    f: Term,
    g: Term,
    stage: u32,
}

impl CohCell {
    /// Content key of the pair: family, dimension, arity shape and both tops.
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// `Dom` or `Cod`: the disc family of the lifted operations.
    pub fn family(&self) -> Family {
        self.family
    }

    /// Dimension of the lift, one above the pair.
    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn arity(&self) -> &Tree {
        &self.arity
    }

    /// Source top, a term over the arity.
    pub fn f(&self) -> &Term {
        &self.f
    }

    /// Target top, a term over the arity.
    pub fn g(&self) -> &Term {
        &self.g
    }

    pub fn stage(&self) -> u32 {
        self.stage
    }

    pub fn cell_name(&self, c: CellRef) -> &str {
        let i = self.arity.realization().flat_index(c).expect("arity cell");
        &self.cell_names[i]
    }

    pub fn cell_names(&self) -> &[String] {
        &self.cell_names
    }

    pub fn cell_by_name(&self, name: &str) -> Option<CellRef> {
        let i = self.cell_names.iter().position(|n| n == name)?;
        self.arity.realization().cell_at(i)
    }

    fn pair_disc(&self) -> Tree {
        let ctx = self.arity.ctx();
        let obj = ctx.object(self.family, self.dim - 1).expect("registered family");
        Tree::disc(ctx, obj).expect("legal disc")
    }

    /// The defining pair as operations into the arity.
    pub fn pair(&self) -> (Arrow, Arrow) {
        let d = self.pair_disc();
        let f = Arrow::from_top(d.clone(), self.arity.clone(), self.f.clone()).expect("registered pair");
        let g = Arrow::from_top(d, self.arity.clone(), self.g.clone()).expect("registered pair");
        (f, g)
    }
}

impl fmt::Debug for CohCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CohCell({} dim={} stage={} over {})",
            self.name, self.dim, self.stage, self.arity
        )
    }
}

/// Default cell name `c{dim}_{id}`.
pub fn default_cell_names(arity: &Tree) -> Vec<String> {
    arity.realization().cells().map(|c| c.to_string()).collect()
}

fn content_key(family: Family, dim: u32, arity: &Tree, f: &Term, g: &Term) -> String {
    let mut text = format!("{family:?}|{dim}|n{}|", arity.ctx().n);
    let r = arity.realization();
    for c in r.cells() {
        let b = r.source(c).zip(r.target(c)).map(|(s, t)| (s.id, t.id));
        text.push_str(&format!("{}.{}.{}:{b:?};", c.component.number(), c.dim, c.id));
    }
    text.push('|');
    text.push_str(&f.canonical());
    text.push('|');
    text.push_str(&g.canonical());
    let digest = Sha256::digest(text.as_bytes());
    digest[..16].iter().map(|b| format!("{b:02x}")).collect()
}

/// The lift `X(m+1) -> arity` whose top applies the cell to the identity.
pub fn lift_arrow(cell: &Arc<CohCell>) -> Arrow {
    let arity = cell.arity();
    let b = TermBuilder::new(arity.realization());
    let top = b.coh(cell, b.generators().to_vec()).expect("identity arguments");
    let ctx = arity.ctx();
    let dom = Tree::disc(ctx, ctx.object(cell.family, cell.dim).expect("legal")).expect("legal");
    Arrow::from_top(dom, arity.clone(), top).expect("lift is well typed")
}

/// The lifting law: boundaries of the lift reproduce the defining pair.
pub fn check_lifting_law(cell: &Arc<CohCell>) -> bool {
    let lift = lift_arrow(cell);
    let (f, g) = cell.pair();
    precompose_boundary(&lift, Side::S).ok() == Some(f)
        && precompose_boundary(&lift, Side::T).ok() == Some(g)
}

/// Verdict on whether every model of a given dimension identifies two operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelVerdict {
    Equal,
    ForcedByLift,
    Unknown,
}

/// Store of coherence cells, keyed by content. Reads are concurrent; lifting is serialized.
#[derive(Default)]
pub struct Registry {
    policy: Policy,
    cells: RwLock<BTreeMap<String, Arc<CohCell>>>,
}

impl Registry {
    pub fn new(policy: Policy) -> Self {
        Registry { policy, cells: RwLock::new(BTreeMap::new()) }
    }

    pub fn policy(&self) -> Policy {
        self.policy
    }

    pub fn len(&self) -> usize {
        self.cells.read().expect("registry lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, id: &str) -> Option<Arc<CohCell>> {
        self.cells.read().expect("registry lock").get(id).cloned()
    }

    pub fn by_name(&self, name: &str) -> Option<Arc<CohCell>> {
        self.cells
            .read()
            .expect("registry lock")
            .values()
            .find(|c| c.name == name)
            .cloned()
    }

    /// All cells ordered by stage, then name, then id.
    pub fn cells(&self) -> Vec<Arc<CohCell>> {
        let mut all: Vec<_> = self.cells.read().expect("registry lock").values().cloned().collect();
        all.sort_by(|a, b| (a.stage, &a.name, &a.id).cmp(&(b.stage, &b.name, &b.id)));
        all
    }

    pub fn is_admissible(&self, f: &Arrow, g: &Arrow) -> bool {
        is_parallel(f, g) && self.policy.accepts(f.is_bare(), g.is_bare())
    }

    /// Lifts `(f, g)` under a generated name and default arity cell names.
    pub fn request_lift(&self, f: &Arrow, g: &Arrow) -> Result<Arc<CohCell>, CohError> {
        self.request_named_lift(None, f, g, None)
    }

    /// Returns the cell for the pair, creating it on first request. Later
    /// requests for the same content return the first cell unchanged.
    pub fn request_named_lift(
        &self,
        name: Option<&str>,
        f: &Arrow,
        g: &Arrow,
        cell_names: Option<Vec<String>>,
    ) -> Result<Arc<CohCell>, CohError> {
        if !is_parallel(f, g) {
            return Err(CohError::NotParallel);
        }
        if !self.policy.accepts(f.is_bare(), g.is_bare()) {
            return Err(CohError::NotAdmissible(self.policy));
        }
        let arity = f.cod().clone();
        let g = coerce(g, &arity)?;
        let disc = f.disc().expect("parallel pairs are operations");
        let (ft, gt) = (f.top().expect("op").clone(), g.top().expect("op").clone());
        let dim = disc.dim + 1;
        let id = content_key(disc.family, dim, &arity, &ft, &gt);
        let mut cells = self.cells.write().expect("registry lock");
        if let Some(existing) = cells.get(&id) {
            return Ok(existing.clone());
        }
        let cell_names = cell_names.unwrap_or_else(|| default_cell_names(&arity));
        assert_eq!(cell_names.len(), arity.realization().len(), "one name per arity cell");
        let cell = Arc::new(CohCell {
            name: name.map_or_else(|| format!("coh_{}", &id[..8]), str::to_string),
            id: id.clone(),
            family: disc.family,
            dim,
            stage: ft.stage().max(gt.stage()) + 1,
            arity,
            cell_names,
            f: ft,
            g: gt,
        });
        cells.insert(id, cell.clone());
        Ok(cell)
    }

    /// Conservative equality of two operations in every model of dimension `p`.
    pub fn equal_in_dim_models(&self, p: u32, f: &Arrow, g: &Arrow) -> ModelVerdict {
        let same = f.dom() == g.dom()
            && crate::pasting::realization_equal(f.cod(), g.cod())
            && f.assignments() == g.assignments();
        if same {
            return ModelVerdict::Equal;
        }
        match f.op_dim() {
            Some(m) if m >= p && self.is_admissible(f, g) => ModelVerdict::ForcedByLift,
            _ => ModelVerdict::Unknown,
        }
    }

    /// `[{id, name, dim, stage, family, n, arity, cells, pair:{f,g}}]`, lowest stage first.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .cells()
            .iter()
            .map(|c| {
                let names = |x: CellRef| c.cell_name(x).to_string();
                json!({
                    "id": c.id,
                    "name": c.name,
                    "dim": c.dim,
                    "stage": c.stage,
                    "family": if c.family == Family::Cod { "cod" } else { "dom" },
                    "n": c.arity.ctx().n,
                    "arity": c.arity.to_string(),
                    "cells": c.cell_names,
                    "pair": { "f": c.f.to_syntax(&names), "g": c.g.to_syntax(&names) },
                })
            })
            .collect();
        serde_json::Value::Array(entries)
    }

    /// Rebuilds a registry from [`to_json`](Self::to_json) output, re-checking every key.
    pub fn from_json(value: &serde_json::Value, policy: Policy) -> Result<Registry, CohError> {
        let reg = Registry::new(policy);
        let entries = value.as_array().ok_or_else(|| CohError::Load {
            id: String::new(),
            reason: "expected an array".into(),
        })?;
        for e in entries {
            let id = e["id"].as_str().unwrap_or_default().to_string();
            let fail = |reason: String| CohError::Load { id: id.clone(), reason };
            let field = |k: &str| {
                e[k].as_str()
                    .map(str::to_string)
                    .ok_or_else(|| fail(format!("missing field {k}")))
            };
            let name = field("name")?;
            let n = e["n"].as_u64().ok_or_else(|| fail("missing field n".into()))? as u32;
            let ctx = GlobeContext::new(n);
            let arity = crate::surface::parse_tree_table(ctx, &field("arity")?)
                .map_err(|err| fail(err.to_string()))?;
            let cell_names: Vec<String> = e["cells"]
                .as_array()
                .ok_or_else(|| fail("missing field cells".into()))?
                .iter()
                .map(|v| v.as_str().unwrap_or_default().to_string())
                .collect();
            let lookup = |coh: &str| reg.by_name(coh);
            let parse = |k: &str| {
                let text = e["pair"][k].as_str().ok_or_else(|| fail(format!("missing pair.{k}")))?;
                crate::surface::parse_term_over(text, &arity, &cell_names, &lookup)
                    .map_err(|err| fail(err.to_string()))
            };
            let (ft, gt) = (parse("f")?, parse("g")?);
            let family = match e["family"].as_str() {
                Some("cod") => Family::Cod,
                _ => Family::Dom,
            };
            let disc = Tree::disc(ctx, ctx.object(family, ft.dim()).map_err(|x| fail(x.to_string()))?)
                .map_err(|x| fail(x.to_string()))?;
            let f = Arrow::from_top(disc.clone(), arity.clone(), ft)?;
            let g = Arrow::from_top(disc, arity.clone(), gt)?;
            let cell = reg.request_named_lift(Some(&name), &f, &g, Some(cell_names))?;
            if cell.id != id {
                return Err(fail(format!("recomputed key {}", cell.id)));
            }
        }
        Ok(reg)
    }
}

impl fmt::Debug for Registry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Registry")
            .field("policy", &self.policy)
            .field("cells", &self.cells())
            .finish()
    }
}

/// Finite search window for admissible pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    pub max_tree_cols: usize,
    pub max_dim: u32,
    pub max_term_size: usize,
    pub stage: u32,
}

/// An admissible pair of operations into the same tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissiblePair {
    pub f: Arrow,
    pub g: Arrow,
}

impl AdmissiblePair {
    pub fn stage(&self) -> u32 {
        self.f.stage().max(self.g.stage())
    }
}

/// All terms over `tree` of size at most `max_size` and dimension at most
/// `max_dim`, smallest first; `cohs` may be applied.
pub fn enumerate_terms(
    tree: &Tree,
    max_size: usize,
    max_dim: u32,
    cohs: &[Arc<CohCell>],
) -> Vec<Term> {
    let ctx = tree.ctx();
    let b = TermBuilder::new(tree.realization());
    let mut levels: Vec<Vec<Term>> = vec![Vec::new(); max_size + 1];
    if max_size == 0 {
        return Vec::new();
    }
    levels[1] = b.generators().iter().filter(|g| g.dim() <= max_dim).cloned().collect();
    let mut kinds = Vec::new();
    if ctx.n >= 2 {
        kinds.push(MidKind::Xi);
    }
    for k in 1..ctx.n.saturating_sub(1) {
        kinds.push(MidKind::Alpha(k));
        kinds.push(MidKind::Beta(k));
    }
    let mut series = Vec::new();
    if ctx.n >= 1 {
        series.push(Series::F);
    }
    if ctx.n >= 2 {
        series.push(Series::G);
    }
    let cohs: Vec<_> = cohs
        .iter()
        .filter(|c| c.dim() <= max_dim && c.arity().ctx() == ctx)
        .cloned()
        .collect();
    for s in 2..=max_size {
        let mut out = Vec::new();
        for u in levels[s - 1].iter().filter(|u| u.component() == Component::One) {
            for &sr in &series {
                out.push(b.transport(sr, u.clone()).expect("component one"));
            }
        }
        if s == 2 {
            for x in levels[1].iter().filter(|x| x.dim() == 0 && x.component() == Component::One) {
                for &k in &kinds {
                    if k.dim(ctx).is_some_and(|d| d <= max_dim) {
                        out.push(b.mid(k, x.clone()).expect("legal middle cell"));
                    }
                }
            }
        }
        for i in 1..s - 1 {
            let j = s - 1 - i;
            for after in &levels[i] {
                for before in &levels[j] {
                    if after.dim() == 0
                        || after.dim() != before.dim()
                        || after.component() != before.component()
                    {
                        continue;
                    }
                    for p in 0..after.dim() {
                        if let Ok(t) = term::comp(p, after.clone(), before.clone()) {
                            out.push(t);
                        }
                    }
                }
            }
        }
        for cell in &cohs {
            let arity = cell.arity().realization();
            let maximal = arity.locally_maximal();
            for_each_split(s - 1, maximal.len(), &mut |sizes| {
                let mut choice: Vec<usize> = vec![0; sizes.len()];
                let pools: Vec<Vec<&Term>> = maximal
                    .iter()
                    .zip(sizes)
                    .map(|(c, &sz)| {
                        levels[sz]
                            .iter()
                            .filter(|u| u.dim() == c.dim && u.component() == c.component)
                            .collect()
                    })
                    .collect();
                if pools.iter().any(Vec::is_empty) {
                    return;
                }
                loop {
                    let given: Vec<(CellRef, Term)> = maximal
                        .iter()
                        .zip(&choice)
                        .zip(&pools)
                        .map(|((c, &k), pool)| (*c, pool[k].clone()))
                        .collect();
                    if let Ok(args) = fill_arguments(arity, given) {
                        if let Ok(t) = b.coh(cell, args) {
                            out.push(t);
                        }
                    }
                    // odometer over the pools
                    let mut i = 0;
                    loop {
                        if i == choice.len() {
                            return;
                        }
                        choice[i] += 1;
                        if choice[i] < pools[i].len() {
                            break;
                        }
                        choice[i] = 0;
                        i += 1;
                    }
                }
            });
        }
        out.retain(|t| t.dim() <= max_dim);
        levels[s] = out;
    }
    levels.into_iter().flatten().collect()
}

// Calls `f` with every way to write `total` as `parts` positive summands.
fn for_each_split(total: usize, parts: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(total: usize, parts: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if parts == 0 {
            if total == 0 {
                f(acc);
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts - 1) {
            acc.push(first);
            go(total - first, parts - 1, acc, f);
            acc.pop();
        }
    }
    if parts == 0 {
        return;
    }
    go(total, parts, &mut Vec::with_capacity(parts), f);
}

fn pairs_over(tree: &Tree, terms: &[Term], stage: u32, policy: Policy) -> Vec<AdmissiblePair> {
    let ctx = tree.ctx();
    let mut groups: HashMap<(Component, u32, Term, Term), Vec<usize>> = HashMap::new();
    let mut order = Vec::new();
    for (i, t) in terms.iter().enumerate() {
        if t.dim() == 0 || t.stage() > stage {
            continue;
        }
        let key = (t.component(), t.dim(), t.source().expect("dim"), t.target().expect("dim"));
        let entry = groups.entry(key.clone()).or_default();
        if entry.is_empty() {
            order.push(key);
        }
        entry.push(i);
    }
    let mut found = Vec::new();
    for key in order {
        let members = &groups[&key];
        for &i in members {
            for &j in members {
                let (u, v) = (&terms[i], &terms[j]);
                if u.stage().max(v.stage()) != stage || !policy.accepts(u.is_gen(), v.is_gen()) {
                    continue;
                }
                found.push((i, j));
            }
        }
    }
    found.sort_unstable();
    found
        .into_iter()
        .map(|(i, j)| {
            let (u, v) = (&terms[i], &terms[j]);
            let family = if u.component() == Component::Two { Family::Cod } else { Family::Dom };
            let disc = Tree::disc(ctx, ctx.object(family, u.dim()).expect("legal")).expect("legal");
            AdmissiblePair {
                f: Arrow::from_top(disc.clone(), tree.clone(), u.clone()).expect("typed"),
                g: Arrow::from_top(disc, tree.clone(), v.clone()).expect("typed"),
            }
        })
        .collect()
}

/// Admissible pairs of exactly the requested stage within `bounds`.
///
/// For a positive stage, every pair of each lower stage found within the
/// same bounds is lifted into `reg` first, and those cells are the ones
/// that may be applied. Output order is deterministic: trees in enumeration
/// order, then pairs by position in the term enumeration.
pub fn enumerate_admissible(
    ctx: GlobeContext,
    reg: &Registry,
    bounds: Bounds,
    exec: Exec,
) -> Vec<AdmissiblePair> {
    let mut cohs: Vec<Arc<CohCell>> = Vec::new();
    for lower in 0..bounds.stage {
        let pairs = enumerate_admissible(ctx, reg, Bounds { stage: lower, ..bounds }, exec);
        for pair in pairs {
            let cell = reg.request_lift(&pair.f, &pair.g).expect("enumerated pairs are admissible");
            if !cohs.iter().any(|c| c.id() == cell.id()) {
                cohs.push(cell);
            }
        }
    }
    let trees = enumerate_trees(ctx, bounds.max_tree_cols, bounds.max_dim);
    let policy = reg.policy();
    exec.map(&trees, |tree| {
        let terms = enumerate_terms(tree, bounds.max_term_size, bounds.max_dim, &cohs);
        pairs_over(tree, &terms, bounds.stage, policy)
    })
    .into_iter()
    .flatten()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::theory::{compose, star, transport_op, xi_op, comp_op};

    fn c2() -> GlobeContext {
        GlobeContext::new(2)
    }

    fn omega_pair() -> (Arrow, Arrow) {
        let h1 = transport_op(c2(), Series::G, 1).unwrap();
        let f1 = transport_op(c2(), Series::F, 1).unwrap();
        let tau = xi_op(c2()).unwrap();
        let nu = comp_op(c2(), Component::Two, 1, 0).unwrap();
        let left = compose(&star(&tau, 0, &h1).unwrap(), &nu).unwrap();
        let right = compose(&star(&f1, 0, &tau).unwrap(), &nu).unwrap();
        (left, right)
    }

    #[test]
    fn omega_lift_is_idempotent() {
        let reg = Registry::default();
        let (f, g) = omega_pair();
        assert!(reg.is_admissible(&f, &g));
        let a = reg.request_lift(&f, &g).unwrap();
        let b = reg.request_lift(&f, &g).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(reg.len(), 1);
        assert_eq!(a.stage(), 1);
        assert_eq!(a.dim(), 2);
        assert!(check_lifting_law(&a));
        let lift = lift_arrow(&a);
        let s = precompose_boundary(&lift, Side::S).unwrap();
        assert_eq!(s.top().unwrap().to_string(), "comp{1,0}(G(c1_0), xi(c0_0))");
        assert_eq!(lift.top().unwrap().stage(), 1);
    }

    #[test]
    fn bare_identities_are_not_admissible() {
        let reg = Registry::default();
        let c = c2();
        let t = Tree::disc(c, c.cod(1).unwrap()).unwrap();
        let id = Arrow::identity(&t);
        assert!(!reg.is_admissible(&id, &id));
        assert_eq!(reg.request_lift(&id, &id).unwrap_err(), CohError::NotAdmissible(Policy::PairNotBare));
        let all = Registry::new(Policy::AllParallel);
        assert!(all.is_admissible(&id, &id));
    }

    #[test]
    fn non_parallel_rejected() {
        let reg = Registry::default();
        let (f, _) = omega_pair();
        let h1 = transport_op(c2(), Series::G, 1).unwrap();
        assert_eq!(reg.request_lift(&f, &h1).unwrap_err(), CohError::NotParallel);
    }

    #[test]
    fn h1_self_pair() {
        let reg = Registry::new(Policy::BothNotBare);
        let h1 = transport_op(c2(), Series::G, 1).unwrap();
        assert!(reg.is_admissible(&h1, &h1));
        assert_eq!(reg.equal_in_dim_models(1, &h1, &h1), ModelVerdict::Equal);
    }

    #[test]
    fn model_verdicts() {
        let reg = Registry::default();
        let (f, g) = omega_pair();
        let g = coerce(&g, f.cod()).unwrap();
        assert_eq!(reg.equal_in_dim_models(1, &f, &g), ModelVerdict::ForcedByLift);
        assert_eq!(reg.equal_in_dim_models(0, &f, &g), ModelVerdict::ForcedByLift);
        assert_eq!(reg.equal_in_dim_models(2, &f, &g), ModelVerdict::Unknown);
    }

    #[test]
    fn splits() {
        let mut seen = Vec::new();
        for_each_split(4, 2, &mut |s| seen.push(s.to_vec()));
        assert_eq!(seen, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
    }

    #[test]
    fn stage_zero_contains_omega_pair() {
        let reg = Registry::default();
        let bounds = Bounds { max_tree_cols: 2, max_dim: 1, max_term_size: 5, stage: 0 };
        let pairs = enumerate_admissible(c2(), &reg, bounds, Exec::Sequential);
        let (f, g) = omega_pair();
        let found = pairs.iter().any(|p| {
            realization_eq_pair(p, &f, &g)
        });
        assert!(found);
        assert!(pairs.iter().all(|p| p.stage() == 0));
    }

    fn realization_eq_pair(p: &AdmissiblePair, f: &Arrow, g: &Arrow) -> bool {
        crate::pasting::realization_equal(p.f.cod(), f.cod())
            && p.f.top() == f.top()
            && p.g.top() == g.top()
    }
}
