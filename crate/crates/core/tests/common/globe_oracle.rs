//! Reachability in G_n by breadth-first search over generating arrows.

use std::collections::{BTreeSet, VecDeque};

use gwt_core::globe::{generating_arrows, GlobeContext, GlobeObject, HomClass, Side};

// Generating arrows raise dimension by one, so the search stops at `max_dim`.
fn reachable_from(ctx: GlobeContext, start: GlobeObject, max_dim: u32) -> BTreeSet<GlobeObject> {
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(a) = queue.pop_front() {
        for (_, b) in generating_arrows(ctx, a) {
            if b.dim <= max_dim && seen.insert(b) {
                queue.push_back(b);
            }
        }
    }
    seen
}

pub fn bfs_leq(ctx: GlobeContext, a: GlobeObject, b: GlobeObject) -> bool {
    reachable_from(ctx, a, b.dim).contains(&b)
}

/// Classes of composite arrows, told apart by their first generating step.
pub fn bfs_hom(ctx: GlobeContext, a: GlobeObject, b: GlobeObject) -> BTreeSet<HomClass> {
    if a == b {
        return BTreeSet::from([HomClass::Id]);
    }
    let mut out = BTreeSet::new();
    for (side, c) in generating_arrows(ctx, a) {
        if reachable_from(ctx, c, b.dim).contains(&b) {
            out.insert(match side {
                Side::S => HomClass::S,
                Side::T => HomClass::T,
            });
        }
    }
    out
}
