//! Seeded random instance generation: general grid graphs for engine
//! cross-validation and benchmarks, and exploration pools for the group
//! search.

use crate::grid::{self_concatenable_bipartite, Edge, GridGraph, Vertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// The project-wide deterministic RNG; one seed fixes every sample.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub width: u32,
    pub length: u32,
    /// Percent chance a lattice point is occupied.
    pub vertex_keep: u32,
    /// Percent chance an available cross edge is kept.
    pub edge_keep: u32,
    /// Percent chance an available vertical edge is kept.
    pub vertical_keep: u32,
}

impl GenConfig {
    pub fn new(width: u32, length: u32) -> Self {
        GenConfig {
            width,
            length,
            vertex_keep: 85,
            edge_keep: 45,
            vertical_keep: 25,
        }
    }
}

/// Samples a valid graph: random occupancy, then random non-crossing edges
/// between occupied neighbors (at most one diagonal per row pair per gap).
pub fn random_graph(rng: &mut ChaCha8Rng, cfg: &GenConfig) -> GridGraph {
    let mut vertices: BTreeSet<Vertex> = BTreeSet::new();
    for c in 0..cfg.length {
        for r in 0..cfg.width {
            if rng.gen_range(0..100) < cfg.vertex_keep {
                vertices.insert(Vertex::new(c, r));
            }
        }
    }
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    let keep = |rng: &mut ChaCha8Rng, pct: u32| rng.gen_range(0..100) < pct;
    for c in 0..cfg.length.saturating_sub(1) {
        for r in 0..cfg.width {
            let a = Vertex::new(c, r);
            let b = Vertex::new(c + 1, r);
            if vertices.contains(&a) && vertices.contains(&b) && keep(rng, cfg.edge_keep) {
                edges.insert(Edge::new(a, b));
            }
        }
        for r in 0..cfg.width.saturating_sub(1) {
            // Pick at most one of the two opposite diagonals of a row pair.
            let up = (Vertex::new(c, r), Vertex::new(c + 1, r + 1));
            let down = (Vertex::new(c, r + 1), Vertex::new(c + 1, r));
            let candidates = [up, down];
            let pick = rng.gen_range(0..2usize);
            let (a, b) = candidates[pick];
            if vertices.contains(&a) && vertices.contains(&b) && keep(rng, cfg.edge_keep) {
                edges.insert(Edge::new(a, b));
            }
        }
    }
    for c in 0..cfg.length {
        for r in 0..cfg.width.saturating_sub(1) {
            let a = Vertex::new(c, r);
            let b = Vertex::new(c, r + 1);
            if vertices.contains(&a) && vertices.contains(&b) && keep(rng, cfg.vertical_keep) {
                edges.insert(Edge::new(a, b));
            }
        }
    }
    GridGraph::new(cfg.width, cfg.length.max(1), vertices, edges)
        .expect("generator only emits valid graphs")
}

/// Samples a candidate pool graph for group exploration: equal boundary
/// occupancy, vertical edges only in interior columns (so pool graphs
/// concatenate), and a 2-coloring tying equal rows of the two boundaries
/// (so arbitrary self-concatenations stay bipartite).
pub fn random_pool_graph(rng: &mut ChaCha8Rng, width: u32, max_length: u32) -> Option<GridGraph> {
    let length = rng.gen_range(3..=max_length.max(3));
    let occupancy: u32 = rng.gen_range(1..(1u32 << width));
    let mut vertices: BTreeSet<Vertex> = BTreeSet::new();
    for r in 0..width {
        if occupancy >> r & 1 == 1 {
            vertices.insert(Vertex::new(0, r));
            vertices.insert(Vertex::new(length - 1, r));
        }
    }
    for c in 1..length - 1 {
        for r in 0..width {
            if rng.gen_range(0..100) < 85 {
                vertices.insert(Vertex::new(c, r));
            }
        }
    }
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    for c in 0..length - 1 {
        for r in 0..width {
            let a = Vertex::new(c, r);
            let b = Vertex::new(c + 1, r);
            if vertices.contains(&a) && vertices.contains(&b) && rng.gen_range(0..100) < 45 {
                edges.insert(Edge::new(a, b));
            }
        }
        for r in 0..width.saturating_sub(1) {
            let up = (Vertex::new(c, r), Vertex::new(c + 1, r + 1));
            let down = (Vertex::new(c, r + 1), Vertex::new(c + 1, r));
            let candidates = [up, down];
            let (a, b) = candidates[rng.gen_range(0..2usize)];
            if vertices.contains(&a) && vertices.contains(&b) && rng.gen_range(0..100) < 40 {
                edges.insert(Edge::new(a, b));
            }
        }
    }
    for c in 1..length - 1 {
        for r in 0..width.saturating_sub(1) {
            let a = Vertex::new(c, r);
            let b = Vertex::new(c, r + 1);
            if vertices.contains(&a) && vertices.contains(&b) && rng.gen_range(0..100) < 30 {
                edges.insert(Edge::new(a, b));
            }
        }
    }
    let g = GridGraph::new(width, length, vertices, edges).ok()?;
    if !self_concatenable_bipartite(&g) {
        return None;
    }
    Some(g)
}

/// A pool of distinct exploration candidates.
pub fn random_pool(rng: &mut ChaCha8Rng, width: u32, count: usize) -> Vec<GridGraph> {
    let mut pool = Vec::new();
    let mut seen = BTreeSet::new();
    let mut tries = 0usize;
    while pool.len() < count && tries < count.saturating_mul(50) {
        tries += 1;
        if let Some(g) = random_pool_graph(rng, width, 7) {
            if seen.insert(g.clone()) {
                pool.push(g);
            }
        }
    }
    pool
}
