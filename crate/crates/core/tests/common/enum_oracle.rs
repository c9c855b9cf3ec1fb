//! Generate and filter: close the generators under every former up to the
//! size bound by fixpoint iteration, then test every ordered pair.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use gwt_core::coherator::{Bounds, CohCell, Policy, Registry};
use gwt_core::globe::{Component, Family, GlobeContext};
use gwt_core::pasting::{enumerate_trees, Tree};
use gwt_core::term::{self, fill_arguments, MidKind, Series, Term, TermBuilder};
use gwt_core::theory::{is_parallel, Arrow};

fn closure(tree: &Tree, max_size: usize, max_dim: u32, cohs: &[Arc<CohCell>]) -> Vec<Term> {
    let ctx = tree.ctx();
    let b = TermBuilder::new(tree.realization());
    let mut seen: HashSet<Term> = HashSet::new();
    let mut pool: Vec<Term> = Vec::new();
    let keep = |t: Term, seen: &mut HashSet<Term>, pool: &mut Vec<Term>| {
        if t.size() <= max_size && t.dim() <= max_dim && seen.insert(t.clone()) {
            pool.push(t);
        }
    };
    for g in b.generators() {
        keep(g.clone(), &mut seen, &mut pool);
    }
    let series: Vec<Series> = match ctx.n {
        0 => vec![],
        1 => vec![Series::F],
        _ => vec![Series::F, Series::G],
    };
    let mut kinds = Vec::new();
    if ctx.n >= 2 {
        kinds.push(MidKind::Xi);
    }
    for k in 1..ctx.n.saturating_sub(1) {
        kinds.push(MidKind::Alpha(k));
        kinds.push(MidKind::Beta(k));
    }
    loop {
        let before_len = pool.len();
        let snapshot = pool.clone();
        for u in &snapshot {
            for &s in &series {
                if let Ok(t) = b.transport(s, u.clone()) {
                    keep(t, &mut seen, &mut pool);
                }
            }
            for &k in &kinds {
                if let Ok(t) = b.mid(k, u.clone()) {
                    keep(t, &mut seen, &mut pool);
                }
            }
            for v in &snapshot {
                for p in 0..u.dim() {
                    if let Ok(t) = term::comp(p, u.clone(), v.clone()) {
                        keep(t, &mut seen, &mut pool);
                    }
                }
            }
        }
        for cell in cohs {
            if cell.arity().ctx() != ctx {
                continue;
            }
            let arity = cell.arity().realization();
            let maximal = arity.locally_maximal();
            let mut choice = vec![0usize; maximal.len()];
            'odometer: loop {
                let given = maximal.iter().zip(&choice).map(|(c, &i)| (*c, snapshot[i].clone())).collect();
                if let Ok(args) = fill_arguments(arity, given) {
                    if let Ok(t) = b.coh(cell, args) {
                        keep(t, &mut seen, &mut pool);
                    }
                }
                for slot in choice.iter_mut() {
                    *slot += 1;
                    if *slot < snapshot.len() {
                        continue 'odometer;
                    }
                    *slot = 0;
                }
                break;
            }
        }
        if pool.len() == before_len {
            return pool;
        }
    }
}

/// `(tree table, f, g)` in canonical spelling.
pub type PairKey = (String, String, String);

fn stage_of(u: &Term) -> u32 {
    u.coh_cells().iter().map(|c| c.stage()).max().unwrap_or(0)
}

pub fn oracle_pairs(ctx: GlobeContext, reg: &Registry, bounds: Bounds) -> BTreeSet<PairKey> {
    let mut cohs: Vec<Arc<CohCell>> = Vec::new();
    for lower in 0..bounds.stage {
        let found = oracle_arrow_pairs(ctx, reg.policy(), Bounds { stage: lower, ..bounds }, &cohs);
        for (f, g) in found {
            let cell = reg.request_lift(&f, &g).expect("admissible");
            if !cohs.iter().any(|c| c.id() == cell.id()) {
                cohs.push(cell);
            }
        }
    }
    oracle_arrow_pairs(ctx, reg.policy(), bounds, &cohs)
        .into_iter()
        .map(|(f, g)| (f.cod().to_string(), f.top().unwrap().canonical(), g.top().unwrap().canonical()))
        .collect()
}

fn oracle_arrow_pairs(ctx: GlobeContext, policy: Policy, bounds: Bounds, cohs: &[Arc<CohCell>]) -> Vec<(Arrow, Arrow)> {
    let reg = Registry::new(policy);
    let mut out = Vec::new();
    for tree in enumerate_trees(ctx, bounds.max_tree_cols, bounds.max_dim) {
        let terms = closure(&tree, bounds.max_term_size, bounds.max_dim, cohs);
        let mut ops = Vec::new();
        for u in terms.iter().filter(|u| u.dim() > 0) {
            let family = if u.component() == Component::Two { Family::Cod } else { Family::Dom };
            let disc = Tree::disc(ctx, ctx.object(family, u.dim()).unwrap()).unwrap();
            ops.push(Arrow::from_top(disc, tree.clone(), u.clone()).unwrap());
        }
        for f in &ops {
            for g in &ops {
                let stage = stage_of(f.top().unwrap()).max(stage_of(g.top().unwrap()));
                if stage == bounds.stage && is_parallel(f, g) && reg.is_admissible(f, g) {
                    out.push((f.clone(), g.clone()));
                }
            }
        }
    }
    out
}
