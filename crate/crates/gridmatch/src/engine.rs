//! Perfect-matching deciders: an exhaustive oracle for small graphs and the
//! streaming transfer-relation evaluator, plus slice extraction.

use crate::grid::{Edge, GraphError, GridGraph, Vertex};
use crate::monoid::{MonoidElement, Relation};
use std::collections::{BTreeSet, HashMap, HashSet};
use thiserror::Error;

/// Vertex-count ceiling for the exhaustive oracle.
pub const DEFAULT_ORACLE_BOUND: usize = 128;

/// Column-occupancy ceiling for relation-based evaluation.
pub const DEFAULT_WIDTH_BOUND: u32 = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("graph has {0} vertices, oracle bound is {1}")]
    SizeBound(usize, usize),
    #[error("graph width {0} exceeds evaluator bound {1}")]
    WidthBound(u32, u32),
    #[error("boundary profile addresses column {0}, expected {1}")]
    ProfileColumn(u32, u32),
    #[error("boundary profile selects rows absent from the column")]
    ProfileRows,
    #[error("slice fold produced the absorbing zero element")]
    ZeroFold,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A subset of one column's present vertices, encoded by row bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundaryProfile {
    pub col: u32,
    pub rows: u32,
}

impl BoundaryProfile {
    pub fn new(col: u32, rows: u32) -> Self {
        BoundaryProfile { col, rows }
    }

    pub fn empty(col: u32) -> Self {
        BoundaryProfile { col, rows: 0 }
    }
}

fn matchable(adj: &[u128], alive: u128, failed: &mut HashSet<u128>) -> bool {
    if alive == 0 {
        return true;
    }
    if failed.contains(&alive) {
        return false;
    }
    let v = alive.trailing_zeros() as usize;
    let mut nbrs = adj[v] & alive;
    while nbrs != 0 {
        let u = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        if matchable(adj, alive & !(1u128 << v) & !(1u128 << u), failed) {
            return true;
        }
    }
    failed.insert(alive);
    false
}

fn pm_of_subset(g: &GridGraph, keep: &BTreeSet<Vertex>, bound: usize) -> Result<bool, EngineError> {
    if keep.len() > bound {
        return Err(EngineError::SizeBound(keep.len(), bound));
    }
    if keep.len() % 2 == 1 {
        return Ok(false);
    }
    let index: HashMap<Vertex, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut adj = vec![0u128; keep.len()];
    for e in g.edges() {
        let (a, b) = e.endpoints();
        if let (Some(&i), Some(&j)) = (index.get(&a), index.get(&b)) {
            adj[i] |= 1 << j;
            adj[j] |= 1 << i;
        }
    }
    let alive = if keep.len() == 128 {
        u128::MAX
    } else {
        (1u128 << keep.len()) - 1
    };
    Ok(matchable(&adj, alive, &mut HashSet::new()))
}

/// True iff `g` has a perfect matching. Exhaustive backtracking with
/// failure memoization; `brute_force_pm_bounded` for a custom size cap.
pub fn brute_force_pm(g: &GridGraph) -> Result<bool, EngineError> {
    brute_force_pm_bounded(g, DEFAULT_ORACLE_BOUND)
}

pub fn brute_force_pm_bounded(g: &GridGraph, bound: usize) -> Result<bool, EngineError> {
    pm_of_subset(g, g.vertices(), bound)
}

/// Matching decision after deleting the listed boundary vertices: true iff
/// the graph minus `left_unsat` and `right_unsat` has a perfect matching.
pub fn exposed_pm(
    g: &GridGraph,
    left_unsat: BoundaryProfile,
    right_unsat: BoundaryProfile,
) -> Result<bool, EngineError> {
    if left_unsat.col != 0 {
        return Err(EngineError::ProfileColumn(left_unsat.col, 0));
    }
    if right_unsat.col != g.length() - 1 {
        return Err(EngineError::ProfileColumn(right_unsat.col, g.length() - 1));
    }
    if left_unsat.rows & !g.column_mask(0) != 0
        || right_unsat.rows & !g.column_mask(g.length() - 1) != 0
    {
        return Err(EngineError::ProfileRows);
    }
    let last = g.length() - 1;
    let keep: BTreeSet<Vertex> = g
        .vertices()
        .iter()
        .copied()
        .filter(|v| {
            !(v.col == 0 && left_unsat.rows >> v.row & 1 == 1)
                && !(v.col == last && right_unsat.rows >> v.row & 1 == 1)
        })
        .collect();
    pm_of_subset(g, &keep, DEFAULT_ORACLE_BOUND)
}

/// A two-column window of a host graph, rebased to columns 0 and 1.
#[derive(Clone, Debug)]
pub struct Slice {
    pub index: usize,
    pub graph: GridGraph,
}

/// One-pass slicing support: buckets the host graph's edges by their lower
/// column once, so extracting each slice costs only that slice's size.
pub struct Slicer<'a> {
    g: &'a GridGraph,
    by_lo: Vec<Vec<Edge>>,
}

impl<'a> Slicer<'a> {
    pub fn new(g: &'a GridGraph) -> Self {
        assert!(g.length() >= 2, "slicing requires length >= 2");
        let mut by_lo = vec![Vec::new(); g.length() as usize];
        for e in g.edges() {
            let (a, b) = e.endpoints();
            by_lo[a.col.min(b.col) as usize].push(*e);
        }
        Slicer { g, by_lo }
    }

    /// Slice i: the cross edges of gap (i, i+1) and the vertical edges of
    /// column i, rebased to columns 0 and 1; the final slice also carries the
    /// last column's vertical edges.
    pub fn slice(&self, i: u32) -> Slice {
        let g = self.g;
        let last_gap = i == g.length() - 2;
        let mut vertices = BTreeSet::new();
        for r in g.column_rows(i) {
            vertices.insert(Vertex::new(0, r));
        }
        for r in g.column_rows(i + 1) {
            vertices.insert(Vertex::new(1, r));
        }
        let mut edges = BTreeSet::new();
        let mut take = |e: &Edge, base: u32| {
            let (a, b) = e.endpoints();
            edges.insert(Edge::new(
                Vertex::new(a.col - base, a.row),
                Vertex::new(b.col - base, b.row),
            ));
        };
        for e in &self.by_lo[i as usize] {
            take(e, i);
        }
        if last_gap {
            for e in &self.by_lo[i as usize + 1] {
                debug_assert_eq!(e.a().col, e.b().col);
                take(e, i);
            }
        }
        let graph = GridGraph::new(g.width(), 2, vertices, edges)
            .expect("slices of a valid graph are valid");
        Slice {
            index: i as usize,
            graph,
        }
    }
}

impl<'a> Slicer<'a> {
    /// A canonical compact encoding of slice i (occupancy of both columns plus
    /// a bitmask over the finitely many possible edge shapes), usable as a
    /// memo key without materializing the slice graph. Requires width <= 16.
    fn key(&self, i: u32) -> u128 {
        let g = self.g;
        let w = g.width() as u32;
        debug_assert!(w <= 16);
        let last_gap = i == g.length() - 2;
        let mut bits: u128 = 0;
        let mut mark = |e: &Edge| {
            let (a, b) = e.endpoints();
            let r = a.row.min(b.row);
            let idx = if a.col == b.col {
                // vertical in rebased column 0 or 1
                (a.col - i) * (w - 1) + r
            } else if a.row == b.row {
                2 * (w - 1) + r
            } else if a.row < b.row {
                // (0, r) -- (1, r+1)
                2 * (w - 1) + w + r
            } else {
                // (0, r+1) -- (1, r)
                2 * (w - 1) + w + (w - 1) + r
            };
            bits |= 1u128 << idx;
        };
        for e in &self.by_lo[i as usize] {
            mark(e);
        }
        if last_gap {
            for e in &self.by_lo[i as usize + 1] {
                mark(e);
            }
        }
        bits | (g.column_mask(i) as u128) << 80 | (g.column_mask(i + 1) as u128) << 96
    }
}

/// Splits `g` into L-1 two-column slices.
pub fn slices_of(g: &GridGraph) -> Vec<Slice> {
    let slicer = Slicer::new(g);
    (0..g.length() - 1).map(|i| slicer.slice(i)).collect()
}

/// The transfer relation of a slice: Rel(X, Y, R) with X and Y the two column
/// occupancies and (X', Y') in R iff the slice minus (X \ X') and Y' has a
/// perfect matching.
///
/// Computed by sweeping every matching of the slice once and recording which
/// exposure pair it saturates; this is equivalent to probing each of the
/// 2^|X| * 2^|Y| pairs with the oracle (the definitional route, kept as an
/// independent check in tests) and much cheaper on repeated slices.
pub fn slice_element(s: &Slice) -> MonoidElement {
    let g = &s.graph;
    let left_mask = g.column_mask(0);
    let right_mask = g.column_mask(1);
    let left_rows = g.column_rows(0);
    let right_rows = g.column_rows(1);
    let n = g.vertex_count();
    debug_assert!(n <= 64);
    let verts: Vec<Vertex> = g.vertices().iter().copied().collect();
    let mut adj = vec![0u64; n];
    for e in g.edges() {
        let (a, b) = e.endpoints();
        let i = verts.binary_search(&a).unwrap();
        let j = verts.binary_search(&b).unwrap();
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let mut rel = Relation::empty(left_mask, right_mask);
    // Index of each vertex inside its column's sorted row list.
    let sub_index: Vec<(bool, u32)> = verts
        .iter()
        .map(|v| {
            if v.col == 0 {
                (true, left_rows.iter().position(|&r| r == v.row).unwrap() as u32)
            } else {
                (false, right_rows.iter().position(|&r| r == v.row).unwrap() as u32)
            }
        })
        .collect();
    // Enumerate matchings: each vertex in order is left unsaturated or
    // matched to a later unsaturated neighbor.
    fn sweep(
        adj: &[u64],
        sub_index: &[(bool, u32)],
        n: usize,
        from: usize,
        used: u64,
        saturated: u64,
        rel: &mut Relation,
    ) {
        if from == n {
            let mut xm = 0u32;
            let mut ym_unsat = 0u32;
            for (i, &(is_left, si)) in sub_index.iter().enumerate() {
                let sat = saturated >> i & 1 == 1;
                if is_left {
                    if sat {
                        xm |= 1 << si;
                    }
                } else if !sat {
                    ym_unsat |= 1 << si;
                }
            }
            rel.insert(xm, ym_unsat);
            return;
        }
        if used >> from & 1 == 1 {
            sweep(adj, sub_index, n, from + 1, used, saturated, rel);
            return;
        }
        // Unmatched.
        sweep(adj, sub_index, n, from + 1, used | 1 << from, saturated, rel);
        let mut nbrs = adj[from] & !used & !((1u64 << from) | (1u64 << from) - 1);
        while nbrs != 0 {
            let u = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            sweep(
                adj,
                sub_index,
                n,
                from + 1,
                used | 1 << from | 1 << u,
                saturated | 1 << from | 1 << u,
                rel,
            );
        }
    }
    sweep(&adj, &sub_index, n, 0, 0, 0, &mut rel);
    MonoidElement::Rel(rel)
}

fn padded_for_eval(g: &GridGraph) -> GridGraph {
    if g.length() >= 2 {
        return g.clone();
    }
    GridGraph::new(
        g.width(),
        2,
        g.vertices().clone(),
        g.edges().clone(),
    )
    .expect("adding an empty column preserves validity")
}

/// Streaming perfect-matching decision: folds the slice relations left to
/// right, carrying only the relation row reachable from the full left
/// boundary, and accepts iff the empty right-exposure set is reachable.
/// Equals `brute_force_pm` wherever the oracle applies.
pub fn evaluate_pm(g: &GridGraph) -> Result<bool, EngineError> {
    evaluate_pm_bounded(g, DEFAULT_WIDTH_BOUND)
}

pub fn evaluate_pm_bounded(g: &GridGraph, width_bound: u32) -> Result<bool, EngineError> {
    let g = padded_for_eval(g);
    for col in 0..g.length() {
        if g.column_rows(col).len() as u32 > width_bound {
            return Err(EngineError::WidthBound(g.width(), width_bound));
        }
    }
    let mut memo: HashMap<u128, MonoidElement> = HashMap::new();
    // Row vector over subsets of the current right boundary, as a bitset.
    let k0 = g.column_rows(0).len();
    let full = ((1u128 << k0) - 1) as usize;
    let mut vec_bits = vec![0u64; words_for(k0)];
    set_bit(&mut vec_bits, full);
    let slicer = Slicer::new(&g);
    for i in 0..g.length() - 1 {
        let elem = memo
            .entry(slicer.key(i))
            .or_insert_with(|| slice_element(&slicer.slice(i)));
        let rel = match elem {
            MonoidElement::Rel(r) => r,
            _ => return Err(EngineError::ZeroFold),
        };
        debug_assert_eq!(rel.left_mask(), g.column_mask(i));
        let ky = rel.right_arity();
        let mut next = vec![0u64; words_for(ky)];
        for (w, &word) in vec_bits.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                rel.or_row_into(w * 64 + b, &mut next);
            }
        }
        vec_bits = next;
    }
    Ok(get_bit(&vec_bits, 0))
}

pub(crate) fn words_for(arity: usize) -> usize {
    let bits = 1usize << arity;
    bits.div_ceil(64)
}

fn set_bit(words: &mut [u64], i: usize) {
    words[i / 64] |= 1 << (i % 64);
}

fn get_bit(words: &[u64], i: usize) -> bool {
    words[i / 64] >> (i % 64) & 1 == 1
}
