//! Graph generators: named families and seeded random trees / connected
//! graphs.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, so a given
//! `(parameters, seed)` pair yields the same graph on every platform.

use std::collections::BinaryHeap;
use std::cmp::Reverse;
use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    RandomTree,
    RandomConnected,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Star => "star",
            Family::CompleteBipartite => "complete_bipartite",
            Family::RandomTree => "random_tree",
            Family::RandomConnected => "random_connected",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        <Family as clap::ValueEnum>::from_str(s, false).map_err(|_| Error::InvalidSpec(format!("unknown family {s:?}")))
    }
}

/// Everything needed to reproduce one generated graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    /// Edge count for `random_connected`, part size for `complete_bipartite`.
    pub m: Option<usize>,
    pub seed: u64,
}

impl GenSpec {
    pub fn generate(&self) -> Result<Graph> {
        if self.n == 0 {
            return Err(Error::InvalidSpec("n must be at least 1".into()));
        }
        match self.family {
            Family::RandomTree => random_tree(self.n, self.seed),
            Family::RandomConnected => {
                let m = self
                    .m
                    .ok_or_else(|| Error::InvalidSpec("random_connected needs an edge count".into()))?;
                random_connected(self.n, m, self.seed)
            }
            family => named_graph(family, self.n, self.m),
        }
    }
}

/// Decodes a Prüfer sequence over `0..n` into the labeled tree it encodes.
pub fn tree_from_prufer(n: usize, sequence: &[VertexId]) -> Result<Graph> {
    if n < 2 || sequence.len() != n - 2 {
        return Err(Error::InvalidSpec(format!(
            "a Prüfer sequence for {n} vertices has length n - 2, got {}",
            sequence.len()
        )));
    }
    if let Some(&v) = sequence.iter().find(|&&v| v >= n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    let mut remaining = vec![1usize; n];
    for &v in sequence {
        remaining[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<VertexId>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in sequence {
        let Reverse(leaf) = leaves.pop().expect("a leaf remains while decoding");
        edges.push(Edge::new(leaf, v));
        remaining[v] -= 1;
        if remaining[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(x) = leaves.pop().expect("two vertices remain");
    let Reverse(y) = leaves.pop().expect("two vertices remain");
    edges.push(Edge::new(x, y));
    Graph::from_edges(n, edges)
}

fn tree_with(rng: &mut ChaCha8Rng, n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("random tree needs n >= 2, got {n}")));
    }
    let sequence: Vec<VertexId> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    tree_from_prufer(n, &sequence)
}

/// Uniformly random labeled tree on `n` vertices.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    tree_with(&mut ChaCha8Rng::seed_from_u64(seed), n)
}

/// `random_tree(n, seed)` plus `m - (n - 1)` further edges drawn uniformly
/// without replacement from the pairs the tree does not use.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    let max_m = n.saturating_mul(n.saturating_sub(1)) / 2;
    if n < 2 || m + 1 < n || m > max_m {
        return Err(Error::InvalidSpec(format!(
            "random_connected needs n >= 2 and n - 1 <= m <= {max_m}, got n = {n}, m = {m}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tree = tree_with(&mut rng, n)?;
    let extra = m - (n - 1);
    if extra == 0 {
        return Ok(tree);
    }

    // Pairs (a, b), a < b, are ranked lexicographically. Sample ranks in the
    // complement of the tree, then step over tree ranks to recover the pair rank.
    let mut tree_ranks: Vec<usize> = tree.edges().iter().map(|e| pair_rank(n, *e)).collect();
    tree_ranks.sort_unstable();
    let mut picks = index::sample(&mut rng, max_m - (n - 1), extra).into_vec();
    picks.sort_unstable();

    let mut edges = tree.edges().to_vec();
    let mut skipped = 0;
    for c in picks {
        while skipped < tree_ranks.len() && tree_ranks[skipped] <= c + skipped {
            skipped += 1;
        }
        edges.push(pair_unrank(n, c + skipped));
    }
    Graph::from_edges(n, edges)
}

fn pair_rank(n: usize, e: Edge) -> usize {
    let a = e.a();
    // Pairs starting below `a` come first: sum of (n - 1 - i) for i < a.
    a * (2 * n - a - 1) / 2 + (e.b() - a - 1)
}

fn pair_unrank(n: usize, mut rank: usize) -> Edge {
    let mut a = 0;
    while rank >= n - 1 - a {
        rank -= n - 1 - a;
        a += 1;
    }
    Edge::new(a, a + 1 + rank)
}

/// Canonical labeled instance of a named family. `k` is the size of the first
/// part of a complete bipartite graph (default `n / 2`).
pub fn named_graph(family: Family, n: usize, k: Option<usize>) -> Result<Graph> {
    let too_small = |min: usize| {
        Err(Error::InvalidSpec(format!("{family} needs at least {min} vertices, got {n}")))
    };
    let edges: Vec<(usize, usize)> = match family {
        Family::Path => {
            if n < 1 {
                return too_small(1);
            }
            (1..n).map(|i| (i - 1, i)).collect()
        }
        Family::Cycle => {
            if n < 3 {
                return too_small(3);
            }
            (0..n).map(|i| (i, (i + 1) % n)).collect()
        }
        Family::Complete => {
            if n < 1 {
                return too_small(1);
            }
            (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
        }
        Family::Star => {
            if n < 2 {
                return too_small(2);
            }
            (0..n - 1).map(|i| (i, n - 1)).collect()
        }
        Family::CompleteBipartite => {
            if n < 2 {
                return too_small(2);
            }
            let k = k.unwrap_or(n / 2);
            if k == 0 || k >= n {
                return Err(Error::InvalidSpec(format!("part size {k} must be in 1..{n}")));
            }
            (0..k).flat_map(|i| (k..n).map(move |j| (i, j))).collect()
        }
        Family::RandomTree | Family::RandomConnected => {
            return Err(Error::InvalidSpec(format!("{family} is not a named family; it needs a seed")));
        }
    };
    Graph::from_edges(n, edges)
}
