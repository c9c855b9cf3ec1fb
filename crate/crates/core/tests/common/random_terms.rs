//! Random well-typed terms: grow a pool from the generators of a random
//! tree by applying random formers, keeping what typechecks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use gwt_core::coherator::{CohCell, Registry};
use gwt_core::globe::{Component, Family, GlobeContext};
use gwt_core::pasting::{enumerate_trees, Tree};
use gwt_core::term::{self, MidKind, Series, Term, TermBuilder};
use gwt_core::theory::Arrow;

pub struct Sample {
    pub tree: Tree,
    pub term: Term,
    pub depth: u32,
}

pub const MAX_DEPTH: u32 = 5;
pub const MAX_DIM: u32 = 4;

fn lift(reg: &Registry, tree: &Tree, u: &Term, v: &Term) -> Option<Arc<CohCell>> {
    let ctx = tree.ctx();
    let family = if u.component() == Component::Two { Family::Cod } else { Family::Dom };
    let disc = Tree::disc(ctx, ctx.object(family, u.dim()).ok()?).ok()?;
    let f = Arrow::from_top(disc.clone(), tree.clone(), u.clone()).ok()?;
    let g = Arrow::from_top(disc, tree.clone(), v.clone()).ok()?;
    reg.request_lift(&f, &g).ok()
}

/// Terms over one random tree of level `n`, up to `want` of them.
pub fn grow<R: Rng>(rng: &mut R, n: u32, want: usize, reg: &Registry) -> Vec<Sample> {
    let ctx = GlobeContext::new(n);
    let trees = enumerate_trees(ctx, 3, 3);
    let tree = trees.choose(rng).expect("trees exist").clone();
    let b = TermBuilder::new(tree.realization());
    let mut pool: Vec<(Term, u32)> = b.generators().iter().map(|g| (g.clone(), 0)).collect();
    let mut kinds = Vec::new();
    if n >= 2 {
        kinds.push(MidKind::Xi);
    }
    for k in 1..n.saturating_sub(1) {
        kinds.push(MidKind::Alpha(k));
        kinds.push(MidKind::Beta(k));
    }
    let mut attempts = 0;
    while pool.len() < want && attempts < want * 40 {
        attempts += 1;
        let (u, du) = pool.choose(rng).expect("nonempty").clone();
        let made: Option<Term> = match rng.gen_range(0..5) {
            0 if n >= 1 => {
                let s = if n >= 2 && rng.gen_bool(0.5) { Series::G } else { Series::F };
                b.transport(s, u).ok()
            }
            1 if !kinds.is_empty() => b.mid(*kinds.choose(rng).expect("kinds"), u).ok(),
            2 | 3 if u.dim() > 0 => {
                // look for a composable partner
                let p = rng.gen_range(0..u.dim());
                let partners: Vec<_> = pool
                    .iter()
                    .filter(|(v, _)| v.dim() == u.dim() && v.component() == u.component())
                    .collect();
                let (v, _) = partners.choose(rng).expect("u itself");
                let (after, before) = if rng.gen_bool(0.5) { (u, v.clone()) } else { (v.clone(), u) };
                term::comp(p, after, before).ok()
            }
            4 if u.dim() + 1 <= MAX_DIM && u.dim() > 0 => {
                let same: Vec<_> = pool
                    .iter()
                    .filter(|(v, _)| {
                        v.dim() == u.dim()
                            && v.component() == u.component()
                            && v.source().ok() == u.source().ok()
                            && v.target().ok() == u.target().ok()
                    })
                    .collect();
                let (v, _) = same.choose(rng).expect("u itself");
                lift(reg, &tree, &u, v).and_then(|cell| b.coh(&cell, b.generators().to_vec()).ok())
            }
            _ => None,
        };
        if let Some(t) = made {
            let depth = term_depth(&t);
            if t.dim() <= MAX_DIM && depth <= MAX_DEPTH && depth > du {
                pool.push((t, depth));
            }
        }
    }
    pool.into_iter().map(|(term, depth)| Sample { tree: tree.clone(), term, depth }).collect()
}

pub fn term_depth(u: &Term) -> u32 {
    use gwt_core::term::Node;
    match u.node() {
        Node::Gen(_) => 0,
        Node::Comp { after, before, .. } => 1 + term_depth(after).max(term_depth(before)),
        Node::Transport { arg, .. } => 1 + term_depth(arg),
        Node::Mid { point, .. } => 1 + term_depth(point),
        Node::Coh { args, .. } => 1 + args.iter().map(term_depth).max().unwrap_or(0),
    }
}

/// Checks `s s = s t` and `t t = t s` at every level of `u`.
pub fn globular(u: &Term) -> bool {
    if u.dim() < 2 {
        return true;
    }
    let (s, t) = (u.source().expect("dim"), u.target().expect("dim"));
    s.source() == t.source() && s.target() == t.target() && globular(&s) && globular(&t)
}
