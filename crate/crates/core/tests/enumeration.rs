mod common;

use std::collections::BTreeSet;

use common::enum_oracle::{oracle_pairs, PairKey};
use gwt_core::coherator::{enumerate_admissible, AdmissiblePair, Bounds, Policy, Registry};
use gwt_core::exec::Exec;
use gwt_core::globe::GlobeContext;

pub const STAGE0: Bounds = Bounds { max_tree_cols: 2, max_dim: 2, max_term_size: 4, stage: 0 };
pub const STAGE1: Bounds = Bounds { max_tree_cols: 1, max_dim: 2, max_term_size: 5, stage: 1 };

pub fn keys(pairs: &[AdmissiblePair]) -> BTreeSet<PairKey> {
    pairs
        .iter()
        .map(|p| (p.f.cod().to_string(), p.f.top().unwrap().canonical(), p.g.top().unwrap().canonical()))
        .collect()
}

/// Frozen from the generate-and-filter oracle.
pub const GOLDEN_STAGE0: usize = 640;
pub const GOLDEN_STAGE1: usize = 14620;

fn run(bounds: Bounds, exec: Exec) -> (Registry, Vec<AdmissiblePair>) {
    let reg = Registry::new(Policy::default());
    let pairs = enumerate_admissible(GlobeContext::new(2), &reg, bounds, exec);
    (reg, pairs)
}

#[test]
fn stage0_matches_oracle_and_golden() {
    let (_, pairs) = run(STAGE0, Exec::default());
    let oracle = oracle_pairs(GlobeContext::new(2), &Registry::new(Policy::default()), STAGE0);
    assert_eq!(pairs.len(), GOLDEN_STAGE0);
    assert_eq!(oracle.len(), GOLDEN_STAGE0);
    assert_eq!(keys(&pairs), oracle);
}

#[test]
fn stage1_matches_oracle_and_golden() {
    let (reg, pairs) = run(STAGE1, Exec::default());
    let oracle = oracle_pairs(GlobeContext::new(2), &Registry::new(Policy::default()), STAGE1);
    assert_eq!(pairs.len(), GOLDEN_STAGE1);
    assert_eq!(keys(&pairs), oracle);
    for p in &pairs {
        assert_eq!(p.stage(), 1);
        let cohs: Vec<_> = p.f.top().unwrap().coh_cells().into_iter().chain(p.g.top().unwrap().coh_cells()).collect();
        assert!(cohs.iter().any(|c| c.stage() == 1), "{} / {}", p.f, p.g);
    }
    for cell in reg.cells() {
        assert!(gwt_core::coherator::check_lifting_law(&cell));
        assert_eq!(cell.stage(), 1);
    }
}

#[test]
fn deterministic_across_modes() {
    let (_, a) = run(STAGE0, Exec::Sequential);
    let (_, b) = run(STAGE0, Exec::Parallel);
    let (_, c) = run(STAGE0, Exec::Parallel);
    assert_eq!(a, b);
    assert_eq!(b, c);
}

#[test]
fn stages_are_disjoint() {
    let (_, zero) = run(Bounds { stage: 0, ..STAGE1 }, Exec::default());
    let (_, one) = run(STAGE1, Exec::default());
    assert!(zero.iter().all(|p| p.stage() == 0));
    assert!(keys(&zero).is_disjoint(&keys(&one)));
}
