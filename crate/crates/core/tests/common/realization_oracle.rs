//! Brute-force colimit of a tree: lay every disc out cell by cell, identify
//! along the glues by repeated relabelling, then number the classes.

use std::collections::BTreeMap;

use gwt_core::globe::{Component, Family, GlobeObject};
use gwt_core::pasting::{CellRef, Tree};

pub struct RawCell {
    pub component: Component,
    pub dim: u32,
    /// raw indices of source and target
    pub bounds: Option<(usize, usize)>,
}

fn shape(o: GlobeObject) -> (u32, Component) {
    let m = match o.family {
        Family::Dom | Family::Cod | Family::FSer | Family::GSer => o.dim,
        _ => 0,
    };
    let c = if o.family == Family::Cod { Component::Two } else { Component::One };
    (m, c)
}

/// Cells `s_0, t_0, s_1, t_1, ..., top` of one disc starting at `offset`.
fn lay_out(o: GlobeObject, offset: usize, out: &mut Vec<RawCell>) {
    let (m, component) = shape(o);
    for local in 0..=(2 * m as usize) {
        let dim = (local / 2) as u32;
        let bounds = (dim > 0).then(|| (offset + 2 * (dim as usize - 1), offset + 2 * (dim as usize - 1) + 1));
        out.push(RawCell { component, dim, bounds });
    }
}

pub struct Colimit {
    pub raw: Vec<RawCell>,
    pub label: Vec<usize>,
}

pub fn colimit(tree: &Tree) -> Colimit {
    let mut raw = Vec::new();
    let mut offsets = Vec::new();
    for &c in tree.columns() {
        offsets.push(raw.len());
        lay_out(c, raw.len(), &mut raw);
    }
    let mut pairs = Vec::new();
    for (l, &g) in tree.glues().iter().enumerate() {
        let (e, _) = shape(g);
        let (ml, _) = shape(tree.columns()[l]);
        let (mr, _) = shape(tree.columns()[l + 1]);
        let (ol, or) = (offsets[l], offsets[l + 1]);
        for i in 0..2 * e as usize {
            pairs.push((ol + i, or + i));
        }
        let left_top = if e == ml { 2 * ml as usize } else { 2 * e as usize + 1 };
        let right_top = if e == mr { 2 * mr as usize } else { 2 * e as usize };
        pairs.push((ol + left_top, or + right_top));
    }
    let mut label: Vec<usize> = (0..raw.len()).collect();
    loop {
        let mut changed = false;
        for &(a, b) in &pairs {
            let (x, y) = (label[a], label[b]);
            if x != y {
                let (lo, hi) = (x.min(y), x.max(y));
                for l in label.iter_mut() {
                    if *l == hi {
                        *l = lo;
                    }
                }
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Colimit { raw, label }
}

impl Colimit {
    pub fn class_count(&self) -> usize {
        let mut reps: Vec<_> = self.label.clone();
        reps.sort_unstable();
        reps.dedup();
        reps.len()
    }

    /// Canonical cells: per component and dimension, classes ordered by
    /// their smallest raw index. Panics if the boundary maps clash.
    pub fn cells(&self) -> BTreeMap<CellRef, Option<(CellRef, CellRef)>> {
        let mut reps: Vec<usize> = self.label.clone();
        reps.sort_unstable();
        reps.dedup();
        let mut ids: BTreeMap<usize, CellRef> = BTreeMap::new();
        let mut next: BTreeMap<(Component, u32), u32> = BTreeMap::new();
        for &r in &reps {
            let c = &self.raw[r];
            let k = next.entry((c.component, c.dim)).or_insert(0);
            ids.insert(r, CellRef::new(c.component, c.dim, *k));
            *k += 1;
        }
        let mut out = BTreeMap::new();
        for (i, c) in self.raw.iter().enumerate() {
            let me = ids[&self.label[i]];
            let b = c.bounds.map(|(s, t)| (ids[&self.label[s]], ids[&self.label[t]]));
            if let Some(prev) = out.insert(me, b) {
                assert_eq!(prev, b, "boundary clash at {me}");
            }
        }
        out
    }
}

pub fn formula_count(tree: &Tree) -> isize {
    let size = |o: &GlobeObject| 2 * shape(*o).0 as isize + 1;
    tree.columns().iter().map(size).sum::<isize>() - tree.glues().iter().map(size).sum::<isize>()
}

pub fn matches_oracle(t: &Tree) -> Result<(), String> {
    let oracle = colimit(t);
    let r = t.realization();
    if oracle.class_count() as isize != formula_count(t) {
        return Err(format!("{t}: {} classes, formula {}", oracle.class_count(), formula_count(t)));
    }
    if r.len() != oracle.class_count() {
        return Err(format!("{t}: realization has {} cells, oracle {}", r.len(), oracle.class_count()));
    }
    for (cell, bounds) in oracle.cells() {
        if !r.contains(cell) {
            return Err(format!("{t}: missing {cell}"));
        }
        let mine = r.source(cell).zip(r.target(cell));
        if mine != bounds {
            return Err(format!("{t}: {cell} has boundary {mine:?}, oracle {bounds:?}"));
        }
    }
    if !r.set().is_globular() {
        return Err(format!("{t}: not globular"));
    }
    Ok(())
}
