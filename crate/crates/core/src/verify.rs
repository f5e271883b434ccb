//! Definition-level checking of perfect forests, plus a brute-force oracle
//! that enumerates every edge subset of small graphs.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algo::Algorithm;
use crate::error::{Error, Result};
use crate::graph::{components, induced_subgraph, DisjointSet, Edge, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Rule {
    NotSubgraph,
    HasCycle,
    EvenDegree,
    NotInduced,
    NotSpanning,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Vertex(VertexId),
    Edge(Edge),
    /// A forest component together with the host edges it is missing.
    Component { vertices: Vec<VertexId>, missing: Vec<Edge> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub rule: Rule,
    pub witness: Witness,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            Witness::Vertex(v) => write!(f, "{:?} at vertex {v}", self.rule),
            Witness::Edge(e) => write!(f, "{:?} at edge {e}", self.rule),
            Witness::Component { vertices, missing } => {
                write!(f, "{:?} for component {vertices:?}, missing", self.rule)?;
                for e in missing {
                    write!(f, " {e}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn has(&self, rule: Rule) -> bool {
        self.violations.iter().any(|v| v.rule == rule)
    }

    pub fn summary(&self) -> String {
        if self.valid {
            return "valid".into();
        }
        self.violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ")
    }
}

/// Checks `forest` against the definition of a perfect forest of `g`.
///
/// Every violation is reported. Edges that are not host edges (including
/// loops and out-of-range pairs) are reported and otherwise ignored.
pub fn verify_perfect_forest(g: &Graph, forest: &[Edge]) -> Verdict {
    let mut violations = Vec::new();
    let violation = |rule, witness| Violation { rule, witness };

    let mut kept: Vec<Edge> = Vec::with_capacity(forest.len());
    for &e in forest {
        if g.contains_edge(e) {
            kept.push(e);
        } else {
            violations.push(violation(Rule::NotSubgraph, Witness::Edge(e)));
        }
    }

    let mut dsu = DisjointSet::new(g.n());
    let mut acyclic: Vec<Edge> = Vec::with_capacity(kept.len());
    for &e in &kept {
        if dsu.union(e.a(), e.b()) {
            acyclic.push(e);
        } else {
            violations.push(violation(Rule::HasCycle, Witness::Edge(e)));
        }
    }

    let mut degree = vec![0usize; g.n()];
    for e in &kept {
        degree[e.a()] += 1;
        degree[e.b()] += 1;
    }
    for (v, &d) in degree.iter().enumerate() {
        if d % 2 == 0 {
            violations.push(violation(Rule::EvenDegree, Witness::Vertex(v)));
        }
        if d == 0 {
            violations.push(violation(Rule::NotSpanning, Witness::Vertex(v)));
        }
    }

    acyclic.sort_unstable();
    acyclic.dedup();
    let mut in_forest = kept.clone();
    in_forest.sort_unstable();
    in_forest.dedup();
    let spanning = Graph::from_sorted_unchecked(g.n(), acyclic);
    for comp in components(&spanning) {
        if comp.len() < 2 {
            continue;
        }
        let (sub, remap) = induced_subgraph(g, &comp).expect("component is a nonempty vertex set");
        let missing: Vec<Edge> = sub
            .edges()
            .iter()
            .map(|&e| remap.edge(e))
            .filter(|e| in_forest.binary_search(e).is_err())
            .collect();
        if !missing.is_empty() {
            violations.push(violation(Rule::NotInduced, Witness::Component { vertices: comp, missing }));
        }
    }

    Verdict { valid: violations.is_empty(), violations }
}

pub const ORACLE_EDGE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub count: u64,
    /// All perfect forests in lexicographic edge-set order; `None` when
    /// `count` exceeds the cap.
    pub forests: Option<Vec<Vec<Edge>>>,
    pub subsets_scanned: u64,
}

impl OracleReport {
    pub fn contains(&self, forest: &[Edge]) -> Option<bool> {
        self.forests.as_ref().map(|list| list.iter().any(|f| f == forest))
    }
}

/// Counts the perfect forests of `g` by scanning all `2^m` edge subsets.
///
/// Subsets are visited in Gray-code order while the degree-parity vector is
/// updated one edge at a time; only subsets where every vertex has odd degree
/// go through [`verify_perfect_forest`].
pub fn enumerate_perfect_forests(g: &Graph, cap: usize) -> Result<OracleReport> {
    let m = g.m();
    if m > ORACLE_EDGE_LIMIT {
        return Err(Error::TooManyEdges { m, limit: ORACLE_EDGE_LIMIT });
    }
    // Only vertices with a host edge can reach odd degree, and there are at
    // most 2m of them, so their parities fit in a u64.
    let mut bit = vec![None; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if g.degree(v) > 0 {
            bit[v] = Some(next);
            next += 1;
        }
    }
    let reachable = bit.iter().all(Option::is_some);
    let target: u64 = if next == 64 { u64::MAX } else { (1u64 << next) - 1 };
    let flip: Vec<u64> = g
        .edges()
        .iter()
        .map(|e| (1u64 << bit[e.a()].unwrap()) | (1u64 << bit[e.b()].unwrap()))
        .collect();

    let total: u64 = 1 << m;
    let mut parity = 0u64;
    let mut found: Vec<Vec<Edge>> = Vec::new();
    for i in 0..total {
        if i > 0 {
            parity ^= flip[i.trailing_zeros() as usize];
        }
        if !reachable || parity != target {
            continue;
        }
        let subset = i ^ (i >> 1);
        let edges: Vec<Edge> =
            (0..m).filter(|&k| subset >> k & 1 == 1).map(|k| g.edges()[k]).collect();
        if verify_perfect_forest(g, &edges).valid {
            found.push(edges);
        }
    }
    found.sort_unstable();
    let count = found.len() as u64;
    let forests = (found.len() <= cap).then_some(found);
    Ok(OracleReport { count, forests, subsets_scanned: total })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfcheckFailure {
    pub graph: Vec<Edge>,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelfcheckSummary {
    pub n: usize,
    pub graphs_scanned: u64,
    pub connected: u64,
    pub checked: u64,
    pub failures: Vec<SelfcheckFailure>,
}

impl SelfcheckSummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.checked == self.connected
    }
}

/// Cross-checks one connected even-order graph: the oracle finds at least one
/// perfect forest, and both algorithms return a verified member of the
/// oracle's set. Returns a description of each problem found.
pub fn cross_check(g: &Graph) -> Vec<String> {
    let report = match enumerate_perfect_forests(g, usize::MAX) {
        Ok(r) => r,
        Err(e) => return vec![format!("oracle: {e}")],
    };
    let mut problems = Vec::new();
    if report.count == 0 {
        problems.push("oracle found no perfect forest".to_string());
    }
    for algo in Algorithm::ALL {
        match algo.run(g) {
            Ok(forest) => {
                let verdict = verify_perfect_forest(g, forest.edges());
                if !verdict.valid {
                    problems.push(format!("{algo}: {}", verdict.summary()));
                }
                if report.contains(forest.edges()) != Some(true) {
                    problems.push(format!("{algo}: output not in the oracle set"));
                }
            }
            Err(e) => problems.push(format!("{algo}: {e}")),
        }
    }
    problems
}

/// Every labeled graph on `n` vertices, as the subset `mask` of the pairs of
/// `K_n` in lexicographic order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| Edge::new(i, j)));
    let edges = pairs.enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, e)| e).collect();
    Graph::from_sorted_unchecked(n, edges)
}

/// Runs [`cross_check`] on every connected labeled graph on `n` vertices.
pub fn exhaustive_selfcheck(n: usize) -> Result<SelfcheckSummary> {
    if !matches!(n, 2 | 4 | 6) {
        return Err(Error::Precondition(format!("self-check order must be 2, 4 or 6, got {n}")));
    }
    let pairs = n * (n - 1) / 2;
    let graphs_scanned = 1u64 << pairs;
    let results: Vec<Option<Vec<String>>> = (0..graphs_scanned)
        .into_par_iter()
        .map(|mask| {
            let g = labeled_graph(n, mask);
            g.is_connected().then(|| cross_check(&g))
        })
        .collect();
    let mut summary = SelfcheckSummary { n, graphs_scanned, connected: 0, checked: 0, failures: Vec::new() };
    for (mask, result) in results.into_iter().enumerate() {
        let Some(problems) = result else { continue };
        summary.connected += 1;
        summary.checked += 1;
        if !problems.is_empty() {
            summary.failures.push(SelfcheckFailure {
                graph: labeled_graph(n, mask as u64).edges().to_vec(),
                reason: problems.join("; "),
            });
        }
    }
    Ok(summary)
}
