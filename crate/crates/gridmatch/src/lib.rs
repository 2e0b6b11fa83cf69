//! Perfect-matching workbench for grid-layered planar graphs: a brute-force
//! matching oracle, a streaming transfer-relation decider, the parity and
//! mod-p counting reductions, cyclic-group discovery inside the transfer
//! monoid, and cutwidth-based path decompositions.

pub mod decomp;
pub mod engine;
pub mod format;
pub mod gen;
pub mod grid;
pub mod monoid;
pub mod reductions;
