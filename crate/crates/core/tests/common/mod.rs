#![allow(dead_code)]

use perfect_forest::{Edge, Graph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn e(a: usize, b: usize) -> Edge {
    Edge::new(a, b)
}

pub fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges.iter().copied()).unwrap()
}

pub fn p4() -> Graph {
    graph(4, &[(0, 1), (1, 2), (2, 3)])
}

pub fn c4() -> Graph {
    graph(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
}

pub fn k4() -> Graph {
    graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

/// Number of connected labeled graphs on `n` vertices, from the standard
/// recurrence: all graphs minus those where vertex 0's component has size k < n.
pub fn connected_labeled_count(n: usize) -> u64 {
    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    let all = |k: usize| 1u64 << (k * k.saturating_sub(1) / 2);
    let mut c = vec![0u64; n + 1];
    for k in 1..=n {
        let mut total = all(k);
        for j in 1..k {
            total -= binom(k as u64 - 1, j as u64 - 1) * c[j] * all(k - j);
        }
        c[k] = total;
    }
    c[n]
}

/// Definition check written independently of the library verifier: odd
/// degrees everywhere, edge count n - (#components), and each component's
/// host edge count equal to its forest edge count.
pub fn naive_is_perfect(g: &Graph, subset: &[Edge]) -> bool {
    let n = g.n();
    let mut deg = vec![0usize; n];
    for f in subset {
        deg[f.a()] += 1;
        deg[f.b()] += 1;
    }
    if deg.iter().any(|d| d % 2 == 0) {
        return false;
    }
    // Label components by repeated relaxation.
    let mut label: Vec<usize> = (0..n).collect();
    loop {
        let mut changed = false;
        for f in subset {
            let low = label[f.a()].min(label[f.b()]);
            for x in [f.a(), f.b()] {
                if label[x] != low {
                    label[x] = low;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut comps: Vec<usize> = label.clone();
    comps.sort_unstable();
    comps.dedup();
    if subset.len() + comps.len() != n {
        return false;
    }
    g.edges()
        .iter()
        .filter(|h| label[h.a()] == label[h.b()])
        .all(|h| subset.contains(h))
}

pub fn naive_perfect_forests(g: &Graph) -> Vec<Vec<Edge>> {
    let m = g.m();
    assert!(m <= 16, "naive enumeration is for tiny graphs");
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let subset: Vec<Edge> = (0..m).filter(|k| mask >> k & 1 == 1).map(|k| g.edges()[k]).collect();
        if naive_is_perfect(g, &subset) {
            out.push(subset);
        }
    }
    out.sort();
    out
}

/// Random tree on `n` (even) vertices with every degree odd: start from one
/// edge and repeatedly hang two new leaves on a random existing vertex, which
/// keeps every degree odd. Labels are then shuffled.
pub fn random_odd_tree(n: usize, seed: u64) -> Graph {
    assert!(n >= 2 && n % 2 == 0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = vec![(0usize, 1usize)];
    let mut size = 2;
    while size < n {
        let x = rng.random_range(0..size);
        edges.push((x, size));
        edges.push((x, size + 1));
        size += 2;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    Graph::from_edges(n, edges.into_iter().map(|(a, b)| (perm[a], perm[b]))).unwrap()
}

pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.n(), g.edges().iter().map(|f| (perm[f.a()], perm[f.b()]))).unwrap()
}
