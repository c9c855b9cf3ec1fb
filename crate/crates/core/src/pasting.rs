//! Trees over `G_n` and their realizations as globular sums.
//!
//! A tree is a table of column objects separated by glue objects. Its
//! realization is the disjoint union of the column discs, with the target
//! side of each glue disc in column `l` identified with the source side of
//! the same disc in column `l + 1`.

use std::fmt;
use std::fmt::Write as _;
use std::sync::Arc;

use serde::Serialize;
use serde_json::json;
use thiserror::Error;

use crate::globe::{leq, Component, GlobeContext, GlobeError, GlobeObject, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PastingError {
    #[error("a tree with {columns} columns needs {} glues, got {glues}", columns.saturating_sub(1))]
    ArityMismatch { columns: usize, glues: usize },
    #[error("glue {glue} at position {index} does not sit below {left} and {right}")]
    GlueNotBelow {
        index: usize,
        glue: String,
        left: String,
        right: String,
    },
    #[error(transparent)]
    Globe(#[from] GlobeError),
}

/// Validation switches. Equal-dimension glues are rejected unless enabled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct TreeOptions {
    pub allow_degenerate_glues: bool,
}

/// A cell of a realization, numbered canonically within its component and dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellRef {
    pub component: Component,
    pub dim: u32,
    pub id: u32,
}

impl CellRef {
    pub const fn new(component: Component, dim: u32, id: u32) -> Self {
        CellRef { component, dim, id }
    }
}

impl fmt::Display for CellRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c{}_{}", self.dim, self.id)
    }
}

/// Source and target ids (one dimension down) of a positive-dimensional cell.
pub type Boundary = Option<(u32, u32)>;

/// A finite pair of globular sets, stored as `parts[component][dim][id]`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct BiGlobularSet {
    parts: [Vec<Vec<Boundary>>; 2],
}

impl BiGlobularSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Appends a cell and returns it. Boundaries must already exist.
    pub fn push(&mut self, component: Component, dim: u32, boundary: Boundary) -> CellRef {
        let part = &mut self.parts[component.index()];
        while part.len() <= dim as usize {
            part.push(Vec::new());
        }
        let layer = &mut part[dim as usize];
        layer.push(boundary);
        CellRef::new(component, dim, layer.len() as u32 - 1)
    }

    pub fn count(&self, component: Component, dim: u32) -> usize {
        self.parts[component.index()]
            .get(dim as usize)
            .map_or(0, Vec::len)
    }

    pub fn len(&self) -> usize {
        self.parts.iter().flatten().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn max_dim(&self, component: Component) -> Option<u32> {
        let part = &self.parts[component.index()];
        part.iter().rposition(|l| !l.is_empty()).map(|d| d as u32)
    }

    pub fn components(&self) -> Vec<Component> {
        [Component::One, Component::Two]
            .into_iter()
            .filter(|c| self.max_dim(*c).is_some())
            .collect()
    }

    pub fn contains(&self, cell: CellRef) -> bool {
        (cell.id as usize) < self.count(cell.component, cell.dim)
    }

    fn boundary(&self, cell: CellRef) -> Boundary {
        self.parts[cell.component.index()]
            .get(cell.dim as usize)?
            .get(cell.id as usize)
            .copied()
            .flatten()
    }

    pub fn source(&self, cell: CellRef) -> Option<CellRef> {
        let (s, _) = self.boundary(cell)?;
        Some(CellRef::new(cell.component, cell.dim - 1, s))
    }

    pub fn target(&self, cell: CellRef) -> Option<CellRef> {
        let (_, t) = self.boundary(cell)?;
        Some(CellRef::new(cell.component, cell.dim - 1, t))
    }

    pub fn boundary_of(&self, cell: CellRef, side: Side) -> Option<CellRef> {
        match side {
            Side::S => self.source(cell),
            Side::T => self.target(cell),
        }
    }

    /// All cells, component-major, then by dimension and id.
    pub fn cells(&self) -> impl Iterator<Item = CellRef> + '_ {
        [Component::One, Component::Two].into_iter().flat_map(move |c| {
            self.parts[c.index()]
                .iter()
                .enumerate()
                .flat_map(move |(d, layer)| {
                    (0..layer.len() as u32).map(move |id| CellRef::new(c, d as u32, id))
                })
        })
    }

    /// Position of a cell in the [`cells`](Self::cells) order.
    pub fn flat_index(&self, cell: CellRef) -> Option<usize> {
        if !self.contains(cell) {
            return None;
        }
        let mut offset = 0;
        if cell.component == Component::Two {
            offset += self.parts[0].iter().map(Vec::len).sum::<usize>();
        }
        let part = &self.parts[cell.component.index()];
        offset += part[..cell.dim as usize].iter().map(Vec::len).sum::<usize>();
        Some(offset + cell.id as usize)
    }

    pub fn cell_at(&self, mut index: usize) -> Option<CellRef> {
        for c in [Component::One, Component::Two] {
            for (d, layer) in self.parts[c.index()].iter().enumerate() {
                if index < layer.len() {
                    return Some(CellRef::new(c, d as u32, index as u32));
                }
                index -= layer.len();
            }
        }
        None
    }

    /// Cells that are not a boundary of any other cell.
    pub fn locally_maximal(&self) -> Vec<CellRef> {
        let mut covered = vec![false; self.len()];
        for cell in self.cells() {
            for side in [Side::S, Side::T] {
                if let Some(b) = self.boundary_of(cell, side) {
                    covered[self.flat_index(b).expect("boundary exists")] = true;
                }
            }
        }
        self.cells()
            .filter(|c| !covered[self.flat_index(*c).expect("own cell")])
            .collect()
    }

    /// `ss = st` and `tt = ts` on every cell of dimension at least 2.
    pub fn is_globular(&self) -> bool {
        self.cells().filter(|c| c.dim >= 2).all(|c| {
            let (s, t) = (self.source(c), self.target(c));
            match (s, t) {
                (Some(s), Some(t)) => {
                    self.source(s) == self.source(t) && self.target(t) == self.target(s)
                }
                _ => false,
            }
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let components: Vec<_> = self
            .components()
            .into_iter()
            .map(|c| {
                let counts: Vec<usize> = self.parts[c.index()].iter().map(Vec::len).collect();
                json!({ "component": c.number(), "counts": counts })
            })
            .collect();
        let cells: Vec<_> = self
            .cells()
            .map(|c| {
                json!({
                    "component": c.component.number(),
                    "dim": c.dim,
                    "id": c.id,
                    "src": self.source(c).map(|s| s.id),
                    "tgt": self.target(c).map(|t| t.id),
                })
            })
            .collect();
        json!({ "components": components, "cells": cells })
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        for c in self.components() {
            let _ = writeln!(out, "  subgraph cluster_{} {{", c.number());
            let _ = writeln!(out, "    label=\"component {}\";", c.number());
            for cell in self.cells().filter(|x| x.component == c) {
                let _ = writeln!(out, "    \"{}:{cell}\";", c.number());
            }
            let _ = writeln!(out, "  }}");
        }
        for cell in self.cells() {
            let k = cell.component.number();
            if let (Some(s), Some(t)) = (self.source(cell), self.target(cell)) {
                let _ = writeln!(out, "  \"{k}:{cell}\" -> \"{k}:{s}\" [label=s];");
                let _ = writeln!(out, "  \"{k}:{cell}\" -> \"{k}:{t}\" [label=t];");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Number of cells in the disc underlying an object.
pub fn disc_size(a: GlobeObject) -> usize {
    2 * a.disc_dim() as usize + 1
}

/// Local layout of an m-disc: `s_d = 2d`, `t_d = 2d + 1`, top `= 2m`.
pub(crate) fn disc_local_dim(m: u32, local: usize) -> u32 {
    if local == 2 * m as usize {
        m
    } else {
        local as u32 / 2
    }
}

pub(crate) fn disc_local_boundary(m: u32, local: usize) -> Option<(usize, usize)> {
    let d = disc_local_dim(m, local);
    (d > 0).then(|| (2 * (d as usize - 1), 2 * (d as usize - 1) + 1))
}

/// Image of local cell `local` of a k-disc under the source- or target-side inclusion into an m-disc.
pub(crate) fn disc_inclusion(k: u32, m: u32, side: Side, local: usize) -> usize {
    if k == m || local < 2 * k as usize {
        return local;
    }
    match side {
        Side::S => 2 * k as usize,
        Side::T => 2 * k as usize + 1,
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    // the smaller index stays the root, so roots are class minima
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}

/// The realization of a tree together with provenance back to its columns.
#[derive(Debug, Clone)]
pub struct Realization {
    ctx: GlobeContext,
    set: BiGlobularSet,
    columns: Vec<Vec<CellRef>>,
    origins: Vec<(usize, usize)>,
}

impl Realization {
    fn build(ctx: GlobeContext, columns: &[GlobeObject], glues: &[GlobeObject]) -> Self {
        let component = columns[0].component();
        let dims: Vec<u32> = columns.iter().map(|c| c.disc_dim()).collect();
        let mut offsets = Vec::with_capacity(columns.len());
        let mut total = 0;
        for &m in &dims {
            offsets.push(total);
            total += 2 * m as usize + 1;
        }
        let mut uf = UnionFind::new(total);
        for (l, g) in glues.iter().enumerate() {
            let k = g.disc_dim();
            for local in 0..=2 * k as usize {
                let a = offsets[l] + disc_inclusion(k, dims[l], Side::T, local);
                let b = offsets[l + 1] + disc_inclusion(k, dims[l + 1], Side::S, local);
                uf.union(a, b);
            }
        }
        // raw index -> (column, local, dim)
        let mut raw = Vec::with_capacity(total);
        for (col, &m) in dims.iter().enumerate() {
            for local in 0..=2 * m as usize {
                raw.push((col, local, disc_local_dim(m, local)));
            }
        }
        let mut assigned: Vec<Option<CellRef>> = vec![None; total];
        let mut next_id: Vec<u32> = Vec::new();
        let mut class_cell = vec![None; total];
        for r in 0..total {
            let root = uf.find(r);
            if root == r {
                let d = raw[r].2 as usize;
                if next_id.len() <= d {
                    next_id.resize(d + 1, 0);
                }
                class_cell[r] = Some(CellRef::new(component, d as u32, next_id[d]));
                next_id[d] += 1;
            }
            assigned[r] = class_cell[root];
        }
        let assigned: Vec<CellRef> = assigned.into_iter().map(|c| c.expect("root first")).collect();
        // boundaries, pushed in canonical order: by dim, then id (= order of class minima)
        let mut reps: Vec<usize> = (0..total).filter(|&r| uf.find(r) == r).collect();
        reps.sort_by_key(|&r| (raw[r].2, assigned[r].id));
        let mut set = BiGlobularSet::new();
        let mut origins = Vec::with_capacity(reps.len());
        for r in reps {
            let (col, local, d) = raw[r];
            let boundary = disc_local_boundary(dims[col], local).map(|(s, t)| {
                (
                    assigned[offsets[col] + s].id,
                    assigned[offsets[col] + t].id,
                )
            });
            let cell = set.push(component, d, boundary);
            debug_assert_eq!(cell, assigned[r]);
            origins.push((col, local));
        }
        let columns = dims
            .iter()
            .enumerate()
            .map(|(col, &m)| {
                (0..=2 * m as usize)
                    .map(|local| assigned[offsets[col] + local])
                    .collect()
            })
            .collect();
        Realization { ctx, set, columns, origins }
    }

    pub fn ctx(&self) -> GlobeContext {
        self.ctx
    }

    pub fn set(&self) -> &BiGlobularSet {
        &self.set
    }

    /// Cell hit by local cell `local` of column `col` (disc layout `s_0, t_0, ..., top`).
    pub fn column_cell(&self, col: usize, local: usize) -> Option<CellRef> {
        self.columns.get(col)?.get(local).copied()
    }

    pub fn column_cells(&self, col: usize) -> &[CellRef] {
        &self.columns[col]
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    /// First column cell (in scan order) that became `cell`.
    pub fn origin(&self, cell: CellRef) -> Option<(usize, usize)> {
        self.origins.get(self.set.flat_index(cell)?).copied()
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, cell: CellRef) -> bool {
        self.set.contains(cell)
    }

    pub fn source(&self, cell: CellRef) -> Option<CellRef> {
        self.set.source(cell)
    }

    pub fn target(&self, cell: CellRef) -> Option<CellRef> {
        self.set.target(cell)
    }

    pub fn flat_index(&self, cell: CellRef) -> Option<usize> {
        self.set.flat_index(cell)
    }

    pub fn cell_at(&self, index: usize) -> Option<CellRef> {
        self.set.cell_at(index)
    }

    pub fn cells(&self) -> impl Iterator<Item = CellRef> + '_ {
        self.set.cells()
    }

    pub fn locally_maximal(&self) -> Vec<CellRef> {
        self.set.locally_maximal()
    }

    /// Same canonical cells and boundaries; labels are not compared.
    pub fn same_shape(&self, other: &Realization) -> bool {
        self.set == other.set
    }
}

struct TreeData {
    ctx: GlobeContext,
    columns: Vec<GlobeObject>,
    glues: Vec<GlobeObject>,
    real: Realization,
}

/// A validated table of columns and glues. Cheap to clone.
#[derive(Clone)]
pub struct Tree(Arc<TreeData>);

impl Tree {
    pub fn new(
        ctx: GlobeContext,
        columns: Vec<GlobeObject>,
        glues: Vec<GlobeObject>,
    ) -> Result<Tree, PastingError> {
        Tree::with_options(ctx, columns, glues, TreeOptions::default())
    }

    pub fn with_options(
        ctx: GlobeContext,
        columns: Vec<GlobeObject>,
        glues: Vec<GlobeObject>,
        opts: TreeOptions,
    ) -> Result<Tree, PastingError> {
        if columns.is_empty() || glues.len() + 1 != columns.len() {
            return Err(PastingError::ArityMismatch {
                columns: columns.len(),
                glues: glues.len(),
            });
        }
        for o in columns.iter().chain(&glues) {
            GlobeObject::new(ctx, o.family, o.dim)?;
        }
        for (index, g) in glues.iter().enumerate() {
            let (l, r) = (columns[index], columns[index + 1]);
            if !glue_fits(ctx, *g, l, r, opts) {
                return Err(PastingError::GlueNotBelow {
                    index,
                    glue: g.ascii(),
                    left: l.ascii(),
                    right: r.ascii(),
                });
            }
        }
        let real = Realization::build(ctx, &columns, &glues);
        Ok(Tree(Arc::new(TreeData { ctx, columns, glues, real })))
    }

    /// The one-column tree `[a]`.
    pub fn disc(ctx: GlobeContext, a: GlobeObject) -> Result<Tree, PastingError> {
        Tree::new(ctx, vec![a], Vec::new())
    }

    /// Concatenates `left` and `right` with `g` in between.
    pub fn glue(left: &Tree, g: GlobeObject, right: &Tree) -> Result<Tree, PastingError> {
        let mut columns = left.columns().to_vec();
        columns.extend_from_slice(right.columns());
        let mut glues = left.glues().to_vec();
        glues.push(g);
        glues.extend_from_slice(right.glues());
        Tree::new(left.ctx(), columns, glues)
    }

    pub fn ctx(&self) -> GlobeContext {
        self.0.ctx
    }

    pub fn columns(&self) -> &[GlobeObject] {
        &self.0.columns
    }

    pub fn glues(&self) -> &[GlobeObject] {
        &self.0.glues
    }

    pub fn realization(&self) -> &Realization {
        &self.0.real
    }

    pub fn component(&self) -> Component {
        self.0.columns[0].component()
    }

    pub fn is_disc(&self) -> bool {
        self.0.columns.len() == 1 && self.0.columns[0].family.is_series()
    }

    pub fn ptr_eq(&self, other: &Tree) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    /// Renders the table as `[xi, f1, f1 ; f0, f0]`.
    pub fn keyword_table(&self) -> String {
        let cols: Vec<_> = self.columns().iter().map(|c| c.keyword()).collect();
        let mut out = format!("[{}", cols.join(", "));
        if !self.glues().is_empty() {
            let glues: Vec<_> = self.glues().iter().map(|g| g.keyword()).collect();
            let _ = write!(out, " ; {}", glues.join(", "));
        }
        out.push(']');
        out
    }

    /// Pasting notation, e.g. `τ(1(0)) ⋆^1_0 f_1(1(1))`.
    pub fn pasting_notation(&self) -> String {
        let ctx = self.ctx();
        let cols = self.columns();
        let mut out = cols[0].arity_notation(ctx);
        for (l, g) in self.glues().iter().enumerate() {
            let top = cols[l].dim.max(cols[l + 1].dim);
            let _ = write!(out, " ⋆^{top}_{} {}", g.dim, cols[l + 1].arity_notation(ctx));
        }
        out
    }
}

fn glue_fits(
    ctx: GlobeContext,
    g: GlobeObject,
    l: GlobeObject,
    r: GlobeObject,
    opts: TreeOptions,
) -> bool {
    let below = |c: GlobeObject| {
        leq(ctx, g, c) && (g.dim < c.dim || (opts.allow_degenerate_glues && g == c))
    };
    below(l) && below(r)
}

impl PartialEq for Tree {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other)
            || (self.0.ctx == other.0.ctx
                && self.0.columns == other.0.columns
                && self.0.glues == other.0.glues)
    }
}

impl Eq for Tree {}

impl std::hash::Hash for Tree {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.ctx.hash(state);
        self.0.columns.hash(state);
        self.0.glues.hash(state);
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, {})", self.ctx().n, self.keyword_table())
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.keyword_table())
    }
}

/// Equality of realizations, ignoring the labels of the tables.
pub fn realization_equal(a: &Tree, b: &Tree) -> bool {
    a.realization().same_shape(b.realization())
}

/// All valid trees with at most `max_cols` columns over objects of dimension at most `max_dim`.
///
/// Ordered by column count, then lexicographically on the interleaved
/// sequence `column, glue, column, ...` in object order.
pub fn enumerate_trees(ctx: GlobeContext, max_cols: usize, max_dim: u32) -> Vec<Tree> {
    let objects = ctx.objects_up_to(max_dim);
    let opts = TreeOptions::default();
    let mut tables: Vec<Vec<(Vec<GlobeObject>, Vec<GlobeObject>)>> = vec![Vec::new(); max_cols + 1];
    if max_cols == 0 {
        return Vec::new();
    }
    tables[1] = objects.iter().map(|&o| (vec![o], Vec::new())).collect();
    for k in 2..=max_cols {
        let mut next = Vec::new();
        for (cols, glues) in &tables[k - 1] {
            let last = *cols.last().expect("nonempty");
            for &g in &objects {
                if g.dim >= last.dim {
                    continue;
                }
                for &c in &objects {
                    if glue_fits(ctx, g, last, c, opts) {
                        let mut cols = cols.clone();
                        let mut glues = glues.clone();
                        cols.push(c);
                        glues.push(g);
                        next.push((cols, glues));
                    }
                }
            }
        }
        tables[k] = next;
    }
    tables
        .into_iter()
        .flatten()
        .map(|(cols, glues)| Tree::new(ctx, cols, glues).expect("enumerated tables are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::globe::Family;

    fn ctx(n: u32) -> GlobeContext {
        GlobeContext::new(n)
    }

    #[test]
    fn two_composable_arrows() {
        let c = ctx(0);
        let t = Tree::new(c, vec![c.dom(1), c.dom(1)], vec![c.dom(0)]).unwrap();
        let r = t.realization();
        assert_eq!(r.set().count(Component::One, 0), 3);
        assert_eq!(r.set().count(Component::One, 1), 2);
        let a = CellRef::new(Component::One, 1, 0);
        let b = CellRef::new(Component::One, 1, 1);
        assert_eq!(r.target(a), r.source(b));
    }

    #[test]
    fn tau_then_f_renders() {
        let c = ctx(2);
        let t = Tree::new(c, vec![c.xi().unwrap(), c.fser(1).unwrap()], vec![c.fser(0).unwrap()])
            .unwrap();
        assert_eq!(t.pasting_notation(), "τ(1(0)) ⋆^1_0 f_1(1(1))");
        assert_eq!(t.keyword_table(), "[xi, f1 ; f0]");
    }

    #[test]
    fn glue_not_below() {
        let c = ctx(1);
        let err = Tree::new(c, vec![c.dom(1), c.cod(1).unwrap()], vec![c.dom(0)]).unwrap_err();
        assert!(matches!(err, PastingError::GlueNotBelow { index: 0, .. }));
        let err = Tree::new(c, vec![c.dom(1)], vec![c.dom(0)]).unwrap_err();
        assert!(matches!(err, PastingError::ArityMismatch { .. }));
        assert!(matches!(
            Tree::new(c, vec![], vec![]),
            Err(PastingError::ArityMismatch { columns: 0, glues: 0 })
        ));
    }

    #[test]
    fn degenerate_glue_needs_opt_in() {
        let c = ctx(0);
        let cols = vec![c.dom(1), c.dom(1)];
        assert!(Tree::new(c, cols.clone(), vec![c.dom(1)]).is_err());
        let opts = TreeOptions { allow_degenerate_glues: true };
        let t = Tree::with_options(c, cols, vec![c.dom(1)], opts).unwrap();
        assert_eq!(t.realization().len(), 3);
    }

    #[test]
    fn glue_trees() {
        let c = ctx(2);
        let xi = Tree::disc(c, c.xi().unwrap()).unwrap();
        let f1 = Tree::disc(c, c.fser(1).unwrap()).unwrap();
        let t = Tree::glue(&xi, c.fser(0).unwrap(), &f1).unwrap();
        assert_eq!(t.to_string(), "[xi, f1 ; f0]");
        let two1 = Tree::disc(c, c.cod(1).unwrap()).unwrap();
        let tt = Tree::glue(&two1, c.cod(0).unwrap(), &two1).unwrap();
        assert_eq!(tt.to_string(), "[two1, two1 ; two0]");
        let one1 = Tree::disc(c, c.dom(1)).unwrap();
        assert!(matches!(
            Tree::glue(&one1, c.cod(0).unwrap(), &one1),
            Err(PastingError::GlueNotBelow { .. })
        ));
    }

    #[test]
    fn realization_examples() {
        let c = ctx(2);
        let (g1, g0, f1, f0, xi) = (
            c.gser(1).unwrap(),
            c.gser(0).unwrap(),
            c.fser(1).unwrap(),
            c.fser(0).unwrap(),
            c.xi().unwrap(),
        );
        let left = Tree::new(c, vec![g1, g1, xi], vec![g0, g0]).unwrap();
        let s = left.realization().set();
        assert_eq!(s.count(Component::One, 0), 3);
        assert_eq!(s.count(Component::One, 1), 2);
        assert_eq!(s.max_dim(Component::Two), None);
        let mid = Tree::new(c, vec![g1, xi, f1], vec![g0, f0]).unwrap();
        let right = Tree::new(c, vec![xi, f1, f1], vec![f0, f0]).unwrap();
        assert!(realization_equal(&left, &right));
        assert!(realization_equal(&left, &mid));
        assert!(realization_equal(&left, &left));
        let one1 = Tree::disc(c, c.dom(1)).unwrap();
        let two1 = Tree::disc(c, c.cod(1).unwrap()).unwrap();
        assert!(!realization_equal(&one1, &two1));
        assert_eq!(Tree::disc(c, c.dom(2)).unwrap().realization().len(), 5);
        let tt = Tree::new(c, vec![c.cod(1).unwrap(); 2], vec![c.cod(0).unwrap()]).unwrap();
        assert_eq!(tt.realization().set().count(Component::Two, 0), 3);
        assert_eq!(tt.realization().set().count(Component::Two, 1), 2);
    }

    #[test]
    fn xi_disc_is_a_point() {
        let c = ctx(2);
        let t = Tree::disc(c, c.xi().unwrap()).unwrap();
        assert_eq!(t.realization().len(), 1);
        assert_eq!(disc_size(c.xi().unwrap()), 1);
    }

    #[test]
    fn provenance_and_flat_indices() {
        let c = ctx(0);
        let t = Tree::new(c, vec![c.dom(2), c.dom(1)], vec![c.dom(0)]).unwrap();
        let r = t.realization();
        for (i, cell) in r.cells().enumerate() {
            assert_eq!(r.flat_index(cell), Some(i));
            assert_eq!(r.cell_at(i), Some(cell));
            let (col, local) = r.origin(cell).unwrap();
            assert_eq!(r.column_cell(col, local), Some(cell));
        }
        // target point of the 2-disc is the source of the arrow
        assert_eq!(r.column_cell(0, 1), r.column_cell(1, 0));
        assert_eq!(r.locally_maximal().len(), 2);
        assert!(r.set().is_globular());
    }

    #[test]
    fn enumeration_small() {
        let trees = enumerate_trees(ctx(0), 1, 1);
        let shown: Vec<_> = trees.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, ["[one0]", "[one1]"]);
        let n2 = enumerate_trees(ctx(2), 1, 1);
        assert!(n2.iter().any(|t| t.columns()[0].family == Family::Xi));
    }

    #[test]
    fn exports() {
        let c = ctx(0);
        let t = Tree::new(c, vec![c.dom(1), c.dom(1)], vec![c.dom(0)]).unwrap();
        let j = t.realization().set().to_json();
        assert_eq!(j["cells"].as_array().unwrap().len(), 5);
        assert_eq!(j["components"][0]["counts"], json!([3, 2]));
        let dot = t.realization().set().to_dot("t");
        assert!(dot.contains("cluster_1"));
        assert!(dot.contains("[label=s]"));
    }
}
