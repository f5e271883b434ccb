//! The two perfect-forest constructions (vertex-split induction and edge
//! induction) and the pieces they share.

mod edge;
mod lemma;
mod split;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use edge::{fundamental_cycle, perfect_forest_edge, reattach_cycle_fix, select_edge, EdgeChoice};
pub use lemma::{choose_even_split, even_spanning_tree};
pub use split::perfect_forest_split;

use crate::error::{Error, Result};
use crate::graph::{components, DisjointSet, Edge, Graph, VertexId};
use crate::verify::verify_perfect_forest;

/// A spanning forest of a host graph.
///
/// Construction checks that the edges are host edges and acyclic; whether the
/// forest is perfect is a separate question, answered by [`Forest::is_perfect`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest<'g> {
    host: &'g Graph,
    edges: Vec<Edge>,
    components: Vec<Vec<VertexId>>,
}

impl<'g> Forest<'g> {
    pub fn new(host: &'g Graph, mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        let mut dsu = DisjointSet::new(host.n());
        for &e in &edges {
            if !host.contains_edge(e) {
                return Err(Error::Precondition(format!("forest edge {e} is not a host edge")));
            }
            if !dsu.union(e.a(), e.b()) {
                return Err(Error::Precondition(format!("forest edge {e} closes a cycle")));
            }
        }
        let components = components(&Graph::from_sorted_unchecked(host.n(), edges.clone()));
        Ok(Forest { host, edges, components })
    }

    pub fn host(&self) -> &'g Graph {
        self.host
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Vertex sets of the forest's trees, each sorted, listed by smallest member.
    pub fn components(&self) -> &[Vec<VertexId>] {
        &self.components
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.host.n()];
        for e in &self.edges {
            deg[e.a()] += 1;
            deg[e.b()] += 1;
        }
        deg
    }

    pub fn is_perfect(&self) -> bool {
        verify_perfect_forest(self.host, &self.edges).valid
    }

    pub fn into_edges(self) -> Vec<Edge> {
        self.edges
    }
}

/// The fundamental cycle closed by a non-tree edge: the tree path between the
/// closing edge's endpoints, plus the closing edge itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclePath {
    pub vertices: Vec<VertexId>,
    pub closing: Edge,
}

impl CyclePath {
    /// Tree edges along the path, in path order.
    pub fn path_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    /// Number of tree edges on the path.
    pub fn len(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    /// Induction on the number of vertices: split into two even halves.
    Split,
    /// Induction on the number of edges: peel edges, repair cycles.
    Edge,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Split, Algorithm::Edge];

    pub fn run<'g>(self, g: &'g Graph) -> Result<Forest<'g>> {
        match self {
            Algorithm::Split => perfect_forest_split(g),
            Algorithm::Edge => perfect_forest_edge(g),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Split => "split",
            Algorithm::Edge => "edge",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "split" => Ok(Algorithm::Split),
            "edge" => Ok(Algorithm::Edge),
            other => Err(Error::Precondition(format!("unknown algorithm {other:?}"))),
        }
    }
}

/// Shared entry checks for both constructions.
pub(crate) fn check_input(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() % 2 != 0 {
        return Err(Error::OddOrder(g.n()));
    }
    Ok(())
}

pub(crate) fn is_all_odd_tree(g: &Graph) -> bool {
    g.is_tree() && (0..g.n()).all(|v| g.degree(v) % 2 == 1)
}
