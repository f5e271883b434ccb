//! Timing harness: both algorithms on seeded random connected graphs, every
//! output verified before its time is recorded.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use crate::algo::Algorithm;
use crate::error::{Error, Result};
use crate::gen::random_connected;
use crate::verify::verify_perfect_forest;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub algorithm: Algorithm,
    pub n: usize,
    pub m: usize,
    pub seed: u64,
    pub wall_time_ms: f64,
    pub forest_component_count: usize,
    pub verified: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchMedian {
    pub algorithm: Algorithm,
    pub n: usize,
    pub m: usize,
    pub median_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub records: Vec<BenchRecord>,
    pub medians: Vec<BenchMedian>,
}

/// Graph seed of repetition `rep` of size index `size_idx`.
pub fn case_seed(seed: u64, size_idx: usize, rep: usize) -> u64 {
    seed.wrapping_add(((size_idx as u64) << 32) | rep as u64)
}

pub fn parse_size(s: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidSpec(format!("size {s:?} is not of the form NxM"));
    let (n, m) = s.split_once(['x', 'X', ':']).ok_or_else(bad)?;
    Ok((n.trim().parse().map_err(|_| bad())?, m.trim().parse().map_err(|_| bad())?))
}

pub fn run_bench(sizes: &[(usize, usize)], reps: usize, seed: u64) -> Result<BenchReport> {
    for &(n, m) in sizes {
        if n % 2 != 0 {
            return Err(Error::OddOrder(n));
        }
        let max_m = n.saturating_mul(n.saturating_sub(1)) / 2;
        if n < 2 || m + 1 < n || m > max_m {
            return Err(Error::InvalidSpec(format!("size ({n}, {m}) is not valid for random_connected")));
        }
    }

    let mut records = Vec::with_capacity(sizes.len() * reps * Algorithm::ALL.len());
    for (size_idx, &(n, m)) in sizes.iter().enumerate() {
        for rep in 0..reps {
            let graph_seed = case_seed(seed, size_idx, rep);
            let g = random_connected(n, m, graph_seed)?;
            for algorithm in Algorithm::ALL {
                let start = Instant::now();
                let forest = algorithm.run(&g)?;
                let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
                let verdict = verify_perfect_forest(&g, forest.edges());
                if !verdict.valid {
                    return Err(Error::Verification(format!(
                        "{algorithm} on n={n} m={m} seed={graph_seed}: {}",
                        verdict.summary()
                    )));
                }
                records.push(BenchRecord {
                    algorithm,
                    n,
                    m,
                    seed: graph_seed,
                    wall_time_ms,
                    forest_component_count: forest.components().len(),
                    verified: true,
                });
            }
        }
    }

    let mut groups: BTreeMap<(usize, usize, usize), (Algorithm, Vec<f64>)> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        let size_idx = i / (reps * Algorithm::ALL.len());
        let algo_idx = Algorithm::ALL.iter().position(|&a| a == r.algorithm).unwrap();
        groups.entry((size_idx, algo_idx, r.n)).or_insert((r.algorithm, Vec::new())).1.push(r.wall_time_ms);
    }
    let medians = groups
        .into_iter()
        .map(|((size_idx, _, n), (algorithm, times))| BenchMedian {
            algorithm,
            n,
            m: sizes[size_idx].1,
            median_ms: median(times),
        })
        .collect();
    Ok(BenchReport { records, medians })
}

fn median(mut xs: Vec<f64>) -> f64 {
    if xs.is_empty() {
        return 0.0;
    }
    xs.sort_by(f64::total_cmp);
    let mid = xs.len() / 2;
    if xs.len() % 2 == 1 {
        xs[mid]
    } else {
        (xs[mid - 1] + xs[mid]) / 2.0
    }
}
