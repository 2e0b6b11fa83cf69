//! Grid layered planar graphs, the three gadget blocks, the block-joining
//! rule and boundary-identifying concatenation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use thiserror::Error;

/// A lattice point, identified positionally by column and row.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vertex {
    pub col: u32,
    pub row: u32,
}

impl Vertex {
    pub fn new(col: u32, row: u32) -> Self {
        Vertex { col, row }
    }
}

/// An unordered vertex pair, stored with endpoints sorted.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Edge {
    a: Vertex,
    b: Vertex,
}

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge { a: u, b: v }
        } else {
            Edge { a: v, b: u }
        }
    }

    pub fn a(&self) -> Vertex {
        self.a
    }

    pub fn b(&self) -> Vertex {
        self.b
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.a, self.b)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph invariant violated: {0:?}")]
    Invalid(Vec<Violation>),
    #[error("width mismatch: {0} vs {1}")]
    WidthMismatch(u32, u32),
    #[error("boundary occupancy mismatch in concatenation")]
    BoundaryMismatch,
    #[error("vertical edge in boundary column {0}")]
    BoundaryVerticalEdge(u32),
    #[error("port row {0} is not a present vertex in column {1}")]
    MissingPort(u32, u32),
    #[error("graph of width {0} cannot host a 6-row block")]
    WidthTooSmall(u32),
}

/// One invariant violation found by [`validate`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Vertex outside the declared width/length box.
    OutOfRange(Vertex),
    /// Edge endpoint that is not a present vertex.
    DanglingEdge(Vertex, Vertex),
    /// Edge whose endpoints coincide.
    SelfLoop(Vertex),
    /// Edge spanning more than one column step.
    ColumnSpan(Vertex, Vertex),
    /// Two edges whose straight segments intersect away from a shared endpoint.
    Crossing(Vertex, Vertex, Vertex, Vertex),
}

/// Result of checking a (possibly invalid) graph description.
#[derive(Clone, Debug)]
pub struct Diagnostics {
    pub violations: Vec<Violation>,
    pub bipartite: bool,
}

impl Diagnostics {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A width-W, length-L grid layered planar graph. Immutable once built;
/// `new` rejects any description violating the embedding invariants.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GridGraph {
    width: u32,
    length: u32,
    vertices: BTreeSet<Vertex>,
    edges: BTreeSet<Edge>,
}

impl GridGraph {
    pub fn new(
        width: u32,
        length: u32,
        vertices: BTreeSet<Vertex>,
        edges: BTreeSet<Edge>,
    ) -> Result<Self, GraphError> {
        let g = GridGraph {
            width,
            length,
            vertices,
            edges,
        };
        let d = validate(&g);
        if d.is_clean() {
            Ok(g)
        } else {
            Err(GraphError::Invalid(d.violations))
        }
    }

    /// Builds without validating. For diagnostics and tests of `validate`.
    pub fn new_unchecked(
        width: u32,
        length: u32,
        vertices: BTreeSet<Vertex>,
        edges: BTreeSet<Edge>,
    ) -> Self {
        GridGraph {
            width,
            length,
            vertices,
            edges,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn length(&self) -> u32 {
        self.length
    }

    pub fn vertices(&self) -> &BTreeSet<Vertex> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    /// Rows occupied in `col`, as a bitmask (bit r set iff (col, r) present).
    /// Only meaningful for widths up to 32.
    pub fn column_mask(&self, col: u32) -> u32 {
        let mut m = 0u32;
        for v in self
            .vertices
            .range(Vertex::new(col, 0)..=Vertex::new(col, u32::MAX))
        {
            m |= 1 << v.row;
        }
        m
    }

    /// Occupied rows of `col` in ascending order.
    pub fn column_rows(&self, col: u32) -> Vec<u32> {
        self.vertices
            .range(Vertex::new(col, 0)..=Vertex::new(col, u32::MAX))
            .map(|v| v.row)
            .collect()
    }

    pub fn has_vertical_edge_in_column(&self, col: u32) -> bool {
        self.edges
            .iter()
            .any(|e| e.a.col == col && e.b.col == col)
    }
}

fn orient(p: Vertex, q: Vertex, r: Vertex) -> i64 {
    let (px, py) = (p.col as i64, p.row as i64);
    let (qx, qy) = (q.col as i64, q.row as i64);
    let (rx, ry) = (r.col as i64, r.row as i64);
    (qx - px) * (ry - py) - (qy - py) * (rx - px)
}

fn on_segment(p: Vertex, a: Vertex, b: Vertex) -> bool {
    orient(a, b, p) == 0
        && p.col >= a.col.min(b.col)
        && p.col <= a.col.max(b.col)
        && p.row >= a.row.min(b.row)
        && p.row <= a.row.max(b.row)
}

/// True if the straight segments of e and f meet anywhere except a shared
/// endpoint.
fn segments_conflict(e: &Edge, f: &Edge) -> bool {
    let (p1, p2) = e.endpoints();
    let (p3, p4) = f.endpoints();
    let shared = |v: Vertex| v == p3 || v == p4;
    if shared(p1) || shared(p2) {
        // Sharing one endpoint is fine unless the segments overlap further,
        // which can only happen when collinear.
        let other1 = if shared(p1) { p2 } else { p1 };
        let other2 = if p3 == p1 || p3 == p2 { p4 } else { p3 };
        return on_segment(other1, p3, p4) || on_segment(other2, p1, p2);
    }
    let d1 = orient(p3, p4, p1);
    let d2 = orient(p3, p4, p2);
    let d3 = orient(p1, p2, p3);
    let d4 = orient(p1, p2, p4);
    if ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)) {
        return true;
    }
    (d1 == 0 && on_segment(p1, p3, p4))
        || (d2 == 0 && on_segment(p2, p3, p4))
        || (d3 == 0 && on_segment(p3, p1, p2))
        || (d4 == 0 && on_segment(p4, p1, p2))
}

/// Checks every embedding invariant and 2-colorability, reporting all
/// violations instead of failing on the first.
pub fn validate(g: &GridGraph) -> Diagnostics {
    let mut violations = Vec::new();
    for &v in &g.vertices {
        if v.col >= g.length || v.row >= g.width {
            violations.push(Violation::OutOfRange(v));
        }
    }
    for e in &g.edges {
        let (a, b) = e.endpoints();
        if a == b {
            violations.push(Violation::SelfLoop(a));
            continue;
        }
        if !g.vertices.contains(&a) || !g.vertices.contains(&b) {
            violations.push(Violation::DanglingEdge(a, b));
        }
        if a.col.abs_diff(b.col) > 1 {
            violations.push(Violation::ColumnSpan(a, b));
        }
    }
    // Edges only span adjacent columns, so group them per column touched and
    // compare within a group.
    let mut by_col: BTreeMap<u32, Vec<&Edge>> = BTreeMap::new();
    for e in &g.edges {
        if e.a.col.abs_diff(e.b.col) > 1 {
            continue; // already reported
        }
        by_col.entry(e.a.col.min(e.b.col)).or_default().push(e);
    }
    let cols: Vec<u32> = by_col.keys().copied().collect();
    for &c in &cols {
        let here = &by_col[&c];
        for i in 0..here.len() {
            for j in (i + 1)..here.len() {
                if segments_conflict(here[i], here[j]) {
                    let (a, b) = here[i].endpoints();
                    let (u, w) = here[j].endpoints();
                    violations.push(Violation::Crossing(a, b, u, w));
                }
            }
            if let Some(next) = by_col.get(&(c + 1)) {
                for f in next {
                    if segments_conflict(here[i], f) {
                        let (a, b) = here[i].endpoints();
                        let (u, w) = f.endpoints();
                        violations.push(Violation::Crossing(a, b, u, w));
                    }
                }
            }
        }
    }
    Diagnostics {
        violations,
        bipartite: is_bipartite(g),
    }
}

fn is_bipartite(g: &GridGraph) -> bool {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for e in &g.edges {
        let (a, b) = e.endpoints();
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    }
    let mut color: BTreeMap<Vertex, bool> = BTreeMap::new();
    for &start in &g.vertices {
        if color.contains_key(&start) {
            continue;
        }
        color.insert(start, false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[&v];
            for &u in adj.get(&v).map(|l| l.as_slice()).unwrap_or(&[]) {
                match color.get(&u) {
                    Some(&cu) if cu == cv => return false,
                    Some(_) => {}
                    None => {
                        color.insert(u, !cv);
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    true
}

/// True when g has equal boundary occupancies and admits a 2-coloring that
/// assigns each left-boundary vertex the same color as the right-boundary
/// vertex in the same row. Such a graph stays bipartite under arbitrary
/// repeated self-concatenation.
pub fn self_concatenable_bipartite(g: &GridGraph) -> bool {
    let last = g.length - 1;
    let left = g.column_rows(0);
    if left != g.column_rows(last) {
        return false;
    }
    // 2-coloring with parity-labeled constraints: real edges demand opposite
    // colors (parity 1), boundary row ties demand equal colors (parity 0).
    let mut adj: BTreeMap<Vertex, Vec<(Vertex, bool)>> = BTreeMap::new();
    for e in &g.edges {
        let (a, b) = e.endpoints();
        adj.entry(a).or_default().push((b, true));
        adj.entry(b).or_default().push((a, true));
    }
    if last > 0 {
        for r in left {
            let (a, b) = (Vertex::new(0, r), Vertex::new(last, r));
            adj.entry(a).or_default().push((b, false));
            adj.entry(b).or_default().push((a, false));
        }
    }
    let mut color: BTreeMap<Vertex, bool> = BTreeMap::new();
    for &start in &g.vertices {
        if color.contains_key(&start) {
            continue;
        }
        color.insert(start, false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[&v];
            for &(u, flip) in adj.get(&v).map(|l| l.as_slice()).unwrap_or(&[]) {
                let want = cv ^ flip;
                match color.get(&u) {
                    Some(&cu) if cu != want => return false,
                    Some(_) => {}
                    None => {
                        color.insert(u, want);
                        queue.push_back(u);
                    }
                }
            }
        }
    }
    true
}

/// The three gadget blocks, each a 2-column, 6-row grid graph.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BlockKind {
    B00,
    B01,
    B10,
}

impl BlockKind {
    /// Occupied lattice points, block-local coordinates.
    pub fn vertices(self) -> &'static [(u32, u32)] {
        match self {
            BlockKind::B00 => &[(0, 0), (1, 0), (0, 5), (1, 5), (0, 2), (0, 3)],
            BlockKind::B01 => &[(0, 1), (1, 1), (0, 4), (1, 4), (1, 2), (1, 3)],
            BlockKind::B10 => &[(0, 0), (1, 0), (0, 5), (1, 5), (0, 1), (0, 4)],
        }
    }

    /// Internal edges, block-local coordinates.
    pub fn edges(self) -> &'static [((u32, u32), (u32, u32))] {
        match self {
            BlockKind::B00 => &[((0, 0), (1, 0)), ((0, 5), (1, 5)), ((0, 2), (0, 3))],
            BlockKind::B01 => &[((0, 1), (1, 1)), ((0, 4), (1, 4)), ((1, 2), (1, 3))],
            BlockKind::B10 => &[
                ((0, 0), (1, 0)),
                ((0, 0), (0, 1)),
                ((0, 5), (1, 5)),
                ((0, 5), (0, 4)),
            ],
        }
    }

    /// (bottom, top) port rows on the left boundary.
    pub fn left_ports(self) -> (u32, u32) {
        match self {
            BlockKind::B00 => (0, 5),
            BlockKind::B01 => (1, 4),
            BlockKind::B10 => (1, 4),
        }
    }

    /// (bottom, top) port rows on the right boundary.
    pub fn right_ports(self) -> (u32, u32) {
        match self {
            BlockKind::B00 => (0, 5),
            BlockKind::B01 => (1, 4),
            BlockKind::B10 => (0, 5),
        }
    }

    /// Recognizes a block from the occupancy masks of its two columns.
    pub fn from_column_masks(left: u32, right: u32) -> Option<BlockKind> {
        for kind in [BlockKind::B00, BlockKind::B01, BlockKind::B10] {
            let mut lm = 0u32;
            let mut rm = 0u32;
            for &(c, r) in kind.vertices() {
                if c == 0 {
                    lm |= 1 << r;
                } else {
                    rm |= 1 << r;
                }
            }
            if lm == left && rm == right {
                return Some(kind);
            }
        }
        None
    }
}

/// Builds the 2x6 block graph for `kind`.
pub fn make_block(kind: BlockKind) -> GridGraph {
    let vertices = kind
        .vertices()
        .iter()
        .map(|&(c, r)| Vertex::new(c, r))
        .collect();
    let edges = kind
        .edges()
        .iter()
        .map(|&((c1, r1), (c2, r2))| Edge::new(Vertex::new(c1, r1), Vertex::new(c2, r2)))
        .collect();
    GridGraph::new(6, 2, vertices, edges).expect("block graphs are valid by construction")
}

/// Appends a block after `left`, adding the two port-to-port connector edges
/// (bottom to bottom, top to top).
pub fn join_block(
    left: &GridGraph,
    ports: (u32, u32),
    kind: BlockKind,
) -> Result<GridGraph, GraphError> {
    if left.width < 6 {
        return Err(GraphError::WidthTooSmall(left.width));
    }
    let c_max = left.length - 1;
    for row in [ports.0, ports.1] {
        if !left.contains(Vertex::new(c_max, row)) {
            return Err(GraphError::MissingPort(row, c_max));
        }
    }
    let mut vertices = left.vertices.clone();
    let mut edges = left.edges.clone();
    for &(c, r) in kind.vertices() {
        vertices.insert(Vertex::new(c_max + 1 + c, r));
    }
    for &((c1, r1), (c2, r2)) in kind.edges() {
        edges.insert(Edge::new(
            Vertex::new(c_max + 1 + c1, r1),
            Vertex::new(c_max + 1 + c2, r2),
        ));
    }
    let (lb, lt) = kind.left_ports();
    edges.insert(Edge::new(
        Vertex::new(c_max, ports.0),
        Vertex::new(c_max + 1, lb),
    ));
    edges.insert(Edge::new(
        Vertex::new(c_max, ports.1),
        Vertex::new(c_max + 1, lt),
    ));
    GridGraph::new(left.width, left.length + 2, vertices, edges)
}

/// Concatenates two graphs by identifying g1's rightmost column with g2's
/// leftmost column. Both boundary columns must carry no vertical edges and
/// have identical occupancy.
pub fn concat(g1: &GridGraph, g2: &GridGraph) -> Result<GridGraph, GraphError> {
    if g1.width != g2.width {
        return Err(GraphError::WidthMismatch(g1.width, g2.width));
    }
    let seam = g1.length - 1;
    if g1.column_rows(seam) != g2.column_rows(0) {
        return Err(GraphError::BoundaryMismatch);
    }
    if g1.has_vertical_edge_in_column(seam) {
        return Err(GraphError::BoundaryVerticalEdge(seam));
    }
    if g2.has_vertical_edge_in_column(0) {
        return Err(GraphError::BoundaryVerticalEdge(0));
    }
    let mut vertices = g1.vertices.clone();
    let mut edges = g1.edges.clone();
    for v in &g2.vertices {
        vertices.insert(Vertex::new(v.col + seam, v.row));
    }
    for e in &g2.edges {
        let (a, b) = e.endpoints();
        edges.insert(Edge::new(
            Vertex::new(a.col + seam, a.row),
            Vertex::new(b.col + seam, b.row),
        ));
    }
    GridGraph::new(g1.width, g1.length + g2.length - 1, vertices, edges)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ComponentKind {
    SingleEdge,
    Path,
    Other,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub kind: ComponentKind,
    pub vertices: Vec<Vertex>,
}

impl Component {
    pub fn min_col(&self) -> u32 {
        self.vertices.iter().map(|v| v.col).min().unwrap()
    }

    pub fn max_col(&self) -> u32 {
        self.vertices.iter().map(|v| v.col).max().unwrap()
    }
}

/// Connected components with their structural classification.
pub fn classify_components(g: &GridGraph) -> Vec<Component> {
    let mut adj: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for v in &g.vertices {
        adj.insert(*v, Vec::new());
    }
    for e in &g.edges {
        let (a, b) = e.endpoints();
        adj.get_mut(&a).map(|l| l.push(b));
        adj.get_mut(&b).map(|l| l.push(a));
    }
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &g.vertices {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = vec![start];
        seen.insert(start);
        let mut queue = VecDeque::from([start]);
        let mut edge_count = 0usize;
        while let Some(v) = queue.pop_front() {
            for &u in &adj[&v] {
                edge_count += 1;
                if seen.insert(u) {
                    comp.push(u);
                    queue.push_back(u);
                }
            }
        }
        edge_count /= 2;
        comp.sort();
        let n = comp.len();
        let max_deg = comp.iter().map(|v| adj[v].len()).max().unwrap_or(0);
        let kind = if n == 2 && edge_count == 1 {
            ComponentKind::SingleEdge
        } else if edge_count + 1 == n && max_deg <= 2 {
            ComponentKind::Path
        } else {
            ComponentKind::Other
        };
        out.push(Component {
            kind,
            vertices: comp,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: u32, r: u32) -> Vertex {
        Vertex::new(c, r)
    }

    #[test]
    fn block_b00_shape() {
        let g = make_block(BlockKind::B00);
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edges().len(), 3);
        assert!(g.edges().contains(&Edge::new(v(0, 2), v(0, 3))));
        let d = validate(&g);
        assert!(d.is_clean() && d.bipartite);
    }

    #[test]
    fn block_b01_left_boundary() {
        let g = make_block(BlockKind::B01);
        assert_eq!(g.column_rows(0), vec![1, 4]);
    }

    #[test]
    fn block_b10_column0_components() {
        let g = make_block(BlockKind::B10);
        let comps = classify_components(&g);
        assert_eq!(comps.len(), 2);
        for c in &comps {
            assert_eq!(c.kind, ComponentKind::Path);
            assert_eq!(c.vertices.len(), 3);
        }
    }

    #[test]
    fn join_b00_b00_horizontal_connectors() {
        let g = make_block(BlockKind::B00);
        let j = join_block(&g, BlockKind::B00.right_ports(), BlockKind::B00).unwrap();
        assert!(j.edges().contains(&Edge::new(v(1, 0), v(2, 0))));
        assert!(j.edges().contains(&Edge::new(v(1, 5), v(2, 5))));
        assert!(validate(&j).is_clean());
    }

    #[test]
    fn join_b00_b01_diagonal_connectors() {
        let g = make_block(BlockKind::B00);
        let j = join_block(&g, BlockKind::B00.right_ports(), BlockKind::B01).unwrap();
        assert!(j.edges().contains(&Edge::new(v(1, 0), v(2, 1))));
        assert!(j.edges().contains(&Edge::new(v(1, 5), v(2, 4))));
    }

    #[test]
    fn join_b01_b10_horizontal_connectors() {
        let g = make_block(BlockKind::B01);
        let j = join_block(&g, BlockKind::B01.right_ports(), BlockKind::B10).unwrap();
        assert!(j.edges().contains(&Edge::new(v(1, 1), v(2, 1))));
        assert!(j.edges().contains(&Edge::new(v(1, 4), v(2, 4))));
    }

    #[test]
    fn join_adds_exactly_two_connector_edges() {
        let g = make_block(BlockKind::B10);
        let j = join_block(&g, BlockKind::B10.right_ports(), BlockKind::B00).unwrap();
        assert_eq!(
            j.edges().len(),
            g.edges().len() + BlockKind::B00.edges().len() + 2
        );
    }

    #[test]
    fn concat_neutral_column() {
        let g = make_block(BlockKind::B00);
        let tail_occ = g.column_rows(1);
        let tail = GridGraph::new(
            6,
            1,
            tail_occ.iter().map(|&r| v(0, r)).collect(),
            BTreeSet::new(),
        )
        .unwrap();
        let c = concat(&g, &tail).unwrap();
        assert_eq!(c, g);
    }

    #[test]
    fn concat_boundary_mismatch_rejected() {
        let a = make_block(BlockKind::B00);
        let b = make_block(BlockKind::B01);
        assert_eq!(concat(&a, &b), Err(GraphError::BoundaryMismatch));
    }

    #[test]
    fn concat_rejects_boundary_vertical() {
        // B00 has a vertical edge in its left column.
        let a = make_block(BlockKind::B00);
        let left = GridGraph::new(
            6,
            1,
            a.column_rows(0).iter().map(|&r| v(0, r)).collect(),
            BTreeSet::new(),
        )
        .unwrap();
        assert!(matches!(
            concat(&left, &a),
            Err(GraphError::BoundaryVerticalEdge(0))
        ));
    }

    #[test]
    fn validate_reports_column_span() {
        let vs: BTreeSet<_> = [v(0, 0), v(2, 0)].into_iter().collect();
        let es: BTreeSet<_> = [Edge::new(v(0, 0), v(2, 0))].into_iter().collect();
        let g = GridGraph::new_unchecked(1, 3, vs, es);
        let d = validate(&g);
        assert!(d
            .violations
            .iter()
            .any(|x| matches!(x, Violation::ColumnSpan(..))));
    }

    #[test]
    fn validate_reports_crossing_diagonals() {
        let vs: BTreeSet<_> = [v(0, 0), v(0, 1), v(1, 0), v(1, 1)].into_iter().collect();
        let es: BTreeSet<_> = [
            Edge::new(v(0, 0), v(1, 1)),
            Edge::new(v(0, 1), v(1, 0)),
        ]
        .into_iter()
        .collect();
        let g = GridGraph::new_unchecked(2, 2, vs, es);
        let d = validate(&g);
        assert!(d
            .violations
            .iter()
            .any(|x| matches!(x, Violation::Crossing(..))));
    }

    #[test]
    fn validate_reports_overlapping_verticals() {
        let vs: BTreeSet<_> = [v(0, 0), v(0, 2), v(0, 1), v(0, 3)].into_iter().collect();
        let es: BTreeSet<_> = [
            Edge::new(v(0, 0), v(0, 2)),
            Edge::new(v(0, 1), v(0, 3)),
        ]
        .into_iter()
        .collect();
        let g = GridGraph::new_unchecked(4, 1, vs, es);
        assert!(!validate(&g).is_clean());
    }

    #[test]
    fn six_cycle_classified_other() {
        let vs: BTreeSet<_> = [v(0, 0), v(0, 1), v(1, 0), v(1, 2), v(2, 0), v(2, 1)]
            .into_iter()
            .collect();
        let es: BTreeSet<_> = [
            Edge::new(v(0, 0), v(1, 0)),
            Edge::new(v(1, 0), v(2, 0)),
            Edge::new(v(2, 0), v(2, 1)),
            Edge::new(v(2, 1), v(1, 2)),
            Edge::new(v(1, 2), v(0, 1)),
            Edge::new(v(0, 1), v(0, 0)),
        ]
        .into_iter()
        .collect();
        let g = GridGraph::new(3, 3, vs, es).unwrap();
        let comps = classify_components(&g);
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].kind, ComponentKind::Other);
    }
}
