use rand::seq::index;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed::Seed;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SubsetMode {
    /// The size threshold reached `n`; only `S = V` was checked.
    FullGraph,
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DenseSubsetReport {
    pub n: usize,
    pub p: f64,
    pub subset_size: usize,
    pub mode: SubsetMode,
    pub subsets_checked: u64,
    /// Minimum of `e(S) / (|S|^2 p)` over the checked sets.
    pub min_ratio: f64,
    /// `min_ratio >= 1/4`.
    pub passed: bool,
}

fn edges_within(h: &Graph, s: &BitSet) -> usize {
    s.iter()
        .map(|v| h.neighbours(v).intersection_count(s))
        .sum::<usize>()
        / 2
}

/// Checks that sets of at least `20 ln n / p` vertices span `>= |S|^2 p / 4`
/// edges, over `samples` seeded subsets (all subsets when `n <= 20`).
pub fn dense_subset_edge_check(
    h: &Graph,
    p: f64,
    samples: u64,
    seed: Seed,
) -> Result<DenseSubsetReport> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::invalid(format!("probability {p} not in (0,1)")));
    }
    let n = h.n();
    if n == 0 {
        return Err(Error::invalid("empty vertex set"));
    }
    let wanted = (20.0 * (n as f64).ln() / p).ceil();
    let size = if wanted >= n as f64 {
        n
    } else {
        (wanted as usize).max(1)
    };
    let ratio = |s: &BitSet| edges_within(h, s) as f64 / ((s.count() * s.count()) as f64 * p);

    let (mode, checked, min_ratio) = if size == n {
        (SubsetMode::FullGraph, 1, ratio(&BitSet::full(n)))
    } else if n <= 20 {
        let mut best = f64::INFINITY;
        let mut count = 0;
        for mask in 0u32..(1 << n) {
            if (mask.count_ones() as usize) < size {
                continue;
            }
            let s = BitSet::from_iter_with_len(n, (0..n).filter(|&v| mask >> v & 1 == 1));
            best = best.min(ratio(&s));
            count += 1;
        }
        (SubsetMode::Exhaustive, count, best)
    } else {
        let best = (0..samples)
            .into_par_iter()
            .map(|k| {
                let mut rng = seed.trial(k).rng();
                let s = BitSet::from_iter_with_len(n, index::sample(&mut rng, n, size).into_iter());
                ratio(&s)
            })
            .reduce(|| f64::INFINITY, f64::min);
        (SubsetMode::Sampled, samples, best)
    };
    Ok(DenseSubsetReport {
        n,
        p,
        subset_size: size,
        mode,
        subsets_checked: checked,
        min_ratio,
        passed: min_ratio >= 0.25,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_and_empty() {
        let r = dense_subset_edge_check(&Graph::complete(30), 0.9, 10, Seed(0)).unwrap();
        assert_eq!(r.mode, SubsetMode::FullGraph);
        let s = 30.0;
        assert!(r.min_ratio >= (1.0 - 1.0 / s) / 2.0 / 0.9 - 1e-12);
        assert!(r.passed);
        let r = dense_subset_edge_check(&Graph::empty(30), 0.5, 10, Seed(0)).unwrap();
        assert_eq!(r.min_ratio, 0.0);
        assert!(!r.passed);
        assert!(dense_subset_edge_check(&Graph::empty(3), 0.0, 1, Seed(0)).is_err());
    }

    #[test]
    fn sparse_random_graph_full_check() {
        // 20 ln(500) / 0.2 > 500, so only S = V is checked; e(V)/(n^2 p) ~ 1/2.
        let h = crate::gnp::sample_gnp(500, 0.2, Seed(8)).unwrap();
        let r = dense_subset_edge_check(&h, 0.2, 10_000, Seed(8)).unwrap();
        assert_eq!((r.mode, r.subset_size), (SubsetMode::FullGraph, 500));
        let direct = h.m() as f64 / (500.0 * 500.0 * 0.2);
        assert_eq!(r.min_ratio, direct);
        assert!(r.passed);
    }

    #[test]
    fn sampled_mode_on_dense_graph() {
        // 20 ln(2000)/0.9 ~ 169 < 2000 triggers sampling
        let h = crate::gnp::sample_gnp(2000, 0.9, Seed(1)).unwrap();
        let r = dense_subset_edge_check(&h, 0.9, 50, Seed(1)).unwrap();
        assert_eq!(r.mode, SubsetMode::Sampled);
        assert_eq!(r.subset_size, 169);
        assert!(r.passed, "{r:?}");
    }
}
