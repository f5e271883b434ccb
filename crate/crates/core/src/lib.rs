//! Perfect forests of connected even-order graphs.
//!
//! A perfect forest of `G` is a spanning forest in which every vertex has odd
//! degree and every tree is an induced subgraph of `G`. Every connected graph
//! of even order has one. This crate builds them two ways
//! ([`perfect_forest_split`], [`perfect_forest_edge`]), checks them against
//! the definition ([`verify_perfect_forest`]), and counts them by brute force
//! on small graphs ([`enumerate_perfect_forests`]).

pub mod algo;
pub mod bench;
pub mod cli;
pub mod error;
pub mod gen;
pub mod graph;
pub mod io;
pub mod verify;

pub use algo::{
    choose_even_split, even_spanning_tree, fundamental_cycle, perfect_forest_edge, perfect_forest_split,
    reattach_cycle_fix, select_edge, Algorithm, CyclePath, EdgeChoice, Forest,
};
pub use error::{Error, Result};
pub use graph::{
    branches_of, components, induced_subgraph, spanning_tree, tree_path, Edge, Graph, Remap, SpanningTree, Split,
    VertexId,
};
pub use verify::{enumerate_perfect_forests, exhaustive_selfcheck, verify_perfect_forest, OracleReport, Verdict};
