//! The two executable reductions: parity of a bitstring to perfect matching
//! of a gadget-block graph, and membership in Mod_p to perfect matching of a
//! pendant-probe union built from a group certificate.

use crate::engine::BoundaryProfile;
use crate::grid::{
    concat, join_block, make_block, BlockKind, GraphError, GridGraph, Vertex,
};
use crate::monoid::{element_of, GroupCertificate, MonoidError, Relation};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("input is not a bitstring: {0:?}")]
    NotBits(char),
    #[error("pendant profile addresses column {0}, boundary is {1}")]
    ProfileColumn(u32, u32),
    #[error("pendant profile selects unoccupied rows {0:#b} in column {1}")]
    ProfileRows(u32, u32),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

pub fn check_bits(s: &str) -> Result<(), ReductionError> {
    match s.chars().find(|c| *c != '0' && *c != '1') {
        Some(c) => Err(ReductionError::NotBits(c)),
        None => Ok(()),
    }
}

/// bd: doubles every bit, y₁y₂…yₙ ↦ y₁y₁y₂y₂…yₙyₙ.
pub fn bit_double(s: &str) -> String {
    s.chars().flat_map(|c| [c, c]).collect()
}

/// An even-length bitstring read as consecutive 2-bit constituent pairs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairString {
    bits: String,
}

impl PairString {
    pub fn new(bits: String) -> Self {
        assert!(bits.len() % 2 == 0, "pair string must have even length");
        PairString { bits }
    }

    pub fn bits(&self) -> &str {
        &self.bits
    }

    pub fn pairs(&self) -> impl Iterator<Item = (char, char)> + '_ {
        let b: Vec<char> = self.bits.chars().collect();
        (0..b.len() / 2)
            .map(move |i| (b[2 * i], b[2 * i + 1]))
            .collect::<Vec<_>>()
            .into_iter()
    }

    /// The source-string invariants: no 11 pair; every 01 is immediately
    /// followed by 10; every 10 is immediately preceded by 01.
    pub fn check_invariants(&self) -> bool {
        let pairs: Vec<(char, char)> = self.pairs().collect();
        for (i, &p) in pairs.iter().enumerate() {
            match p {
                ('1', '1') => return false,
                ('0', '1') => {
                    if pairs.get(i + 1) != Some(&('1', '0')) {
                        return false;
                    }
                }
                ('1', '0') => {
                    if i == 0 || pairs[i - 1] != ('0', '1') {
                        return false;
                    }
                }
                _ => {}
            }
        }
        true
    }
}

/// f(x) = 0 bd(0x₁0x₂0…0xₙ0) 0.
pub fn parity_source(x: &str) -> Result<PairString, ReductionError> {
    check_bits(x)?;
    let mut inner = String::from("0");
    for c in x.chars() {
        inner.push(c);
        inner.push('0');
    }
    let mut out = String::from("0");
    out.push_str(&bit_double(&inner));
    out.push('0');
    Ok(PairString::new(out))
}

fn block_of_pair(p: (char, char)) -> BlockKind {
    match p {
        ('0', '0') => BlockKind::B00,
        ('0', '1') => BlockKind::B01,
        ('1', '0') => BlockKind::B10,
        other => unreachable!("11 pair cannot occur in a parity source: {other:?}"),
    }
}

/// G_x: one gadget block per constituent pair of f(x), port-joined left to
/// right. Has a perfect matching iff x has even parity.
pub fn parity_to_graph(x: &str) -> Result<GridGraph, ReductionError> {
    let source = parity_source(x)?;
    let kinds: Vec<BlockKind> = source.pairs().map(block_of_pair).collect();
    let mut g = make_block(kinds[0]);
    let mut prev = kinds[0];
    for &kind in &kinds[1..] {
        g = join_block(&g, prev.right_ports(), kind)?;
        prev = kind;
    }
    Ok(g)
}

/// Number of B10 blocks in G_x; equals the number of ones in x.
pub fn b10_block_count(x: &str) -> Result<usize, ReductionError> {
    Ok(parity_source(x)?
        .pairs()
        .filter(|&p| p == ('1', '0'))
        .count())
}

/// h(z): a leading B, then B per 0-bit and A per 1-bit, concatenated.
/// Its monoid element is g^t where t is the number of ones in z.
pub fn h_graph(z: &str, cert: &GroupCertificate) -> Result<GridGraph, ReductionError> {
    check_bits(z)?;
    let mut g = cert.b.clone();
    for c in z.chars() {
        let next = if c == '1' { &cert.a } else { &cert.b };
        g = concat(&g, next)?;
    }
    Ok(g)
}

/// G_{X′Y′}: adds a fresh column on each side; every left-boundary vertex
/// outside X′ gets a pendant neighbor on the left, every right-boundary
/// vertex inside Y′ gets one on the right. Empty pendant columns are kept so
/// all variants of one graph share length.
pub fn pendant_variant(
    g: &GridGraph,
    x_keep: BoundaryProfile,
    y_drop: BoundaryProfile,
) -> Result<GridGraph, ReductionError> {
    let last = g.length() - 1;
    if x_keep.col != 0 {
        return Err(ReductionError::ProfileColumn(x_keep.col, 0));
    }
    if y_drop.col != last {
        return Err(ReductionError::ProfileColumn(y_drop.col, last));
    }
    if x_keep.rows & !g.column_mask(0) != 0 {
        return Err(ReductionError::ProfileRows(x_keep.rows, 0));
    }
    if y_drop.rows & !g.column_mask(last) != 0 {
        return Err(ReductionError::ProfileRows(y_drop.rows, last));
    }
    let mut vertices: BTreeSet<Vertex> = g
        .vertices()
        .iter()
        .map(|v| Vertex::new(v.col + 1, v.row))
        .collect();
    let mut edges: BTreeSet<_> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = e.endpoints();
            crate::grid::Edge::new(Vertex::new(a.col + 1, a.row), Vertex::new(b.col + 1, b.row))
        })
        .collect();
    for r in g.column_rows(0) {
        if x_keep.rows >> r & 1 == 0 {
            vertices.insert(Vertex::new(0, r));
            edges.insert(crate::grid::Edge::new(
                Vertex::new(0, r),
                Vertex::new(1, r),
            ));
        }
    }
    for r in g.column_rows(last) {
        if y_drop.rows >> r & 1 == 1 {
            vertices.insert(Vertex::new(last + 2, r));
            edges.insert(crate::grid::Edge::new(
                Vertex::new(last + 1, r),
                Vertex::new(last + 2, r),
            ));
        }
    }
    Ok(GridGraph::new(g.width(), g.length() + 2, vertices, edges)?)
}

/// Expands a subset index over a sorted occupancy mask into a row mask.
pub fn subset_rows(occupancy: u32, subset: u32) -> u32 {
    let mut rows = 0;
    let mut bit = 0;
    for r in 0..32 {
        if occupancy >> r & 1 == 1 {
            if subset >> bit & 1 == 1 {
                rows |= 1 << r;
            }
            bit += 1;
        }
    }
    rows
}

/// All (X′, Y′) boundary-profile pairs of a relation, in canonical
/// (row-major) order, for a graph with the relation's boundary occupancies.
pub fn relation_profiles(rel: &Relation, last_col: u32) -> Vec<(BoundaryProfile, BoundaryProfile)> {
    rel.pairs()
        .into_iter()
        .map(|(x, y)| {
            (
                BoundaryProfile::new(0, subset_rows(rel.left_mask(), x)),
                BoundaryProfile::new(last_col, subset_rows(rel.right_mask(), y)),
            )
        })
        .collect()
}

/// G_z: the horizontal disjoint union (one empty spacer column between
/// parts) of the pendant variants of h(z) over every pair of the identity's
/// relation. Has a perfect matching iff z ∉ Mod_p.
pub fn modp_to_graph(z: &str, cert: &GroupCertificate) -> Result<GridGraph, ReductionError> {
    let identity = element_of(&cert.b).map_err(MonoidError::from)?;
    let rel = identity
        .as_rel()
        .expect("a verified certificate's identity is a relation")
        .clone();
    let h = h_graph(z, cert)?;
    let parts: Vec<GridGraph> = relation_profiles(&rel, h.length() - 1)
        .into_iter()
        .map(|(x, y)| pendant_variant(&h, x, y))
        .collect::<Result<_, _>>()?;
    let part_len = h.length() + 2;
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for (i, part) in parts.iter().enumerate() {
        let off = i as u32 * (part_len + 1);
        for v in part.vertices() {
            vertices.insert(Vertex::new(v.col + off, v.row));
        }
        for e in part.edges() {
            let (a, b) = e.endpoints();
            edges.insert(crate::grid::Edge::new(
                Vertex::new(a.col + off, a.row),
                Vertex::new(b.col + off, b.row),
            ));
        }
    }
    let total_len = if parts.is_empty() {
        1
    } else {
        parts.len() as u32 * (part_len + 1) - 1
    };
    Ok(GridGraph::new(cert.a.width(), total_len, vertices, edges)?)
}

/// Reference predicate: z ∈ Mod_p iff the number of ones in z ≢ 0 mod p.
pub fn modp_membership(z: &str, p: u64) -> bool {
    let ones = z.chars().filter(|c| *c == '1').count() as u64;
    ones % p != 0
}
