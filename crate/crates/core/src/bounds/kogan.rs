use rand::seq::SliceRandom;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed::Seed;

/// Graphs up to this order get an exact maximum search.
pub const KOGAN_EXHAUSTIVE_LIMIT: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoganConfig {
    pub restarts: u64,
    pub seed: Seed,
}

impl Default for KoganConfig {
    fn default() -> Self {
        KoganConfig {
            restarts: 64,
            seed: Seed(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KoganReport {
    pub n: usize,
    pub k: usize,
    pub average_degree: f64,
    /// `ceil((k+1) n / (d+k+1))` with `d` the average degree.
    pub bound_ceiling: usize,
    pub set: Vec<usize>,
    pub achieved: usize,
    pub max_degree_in_set: usize,
    /// The set is a maximum one, found by exact search.
    pub exhaustive: bool,
    pub attains_bound: bool,
}

/// `ceil((k+1) n^2 / (2m + (k+1) n))`, the guaranteed size in exact arithmetic.
pub fn kogan_bound_ceiling(g: &Graph, k: usize) -> usize {
    let (n, m, k1) = (g.n() as u128, g.m() as u128, k as u128 + 1);
    if n == 0 {
        return 0;
    }
    (k1 * n * n).div_ceil(2 * m + k1 * n) as usize
}

fn max_degree_in(g: &Graph, set: &[usize]) -> usize {
    set.iter()
        .map(|&v| set.iter().filter(|&&w| g.has_edge(v, w)).count())
        .max()
        .unwrap_or(0)
}

fn greedy(g: &Graph, k: usize, seed: Seed) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(&mut seed.rng());
    let mut inside = vec![false; g.n()];
    let mut load = vec![0usize; g.n()];
    for v in order {
        let nbrs: Vec<usize> = g.neighbours(v).iter().filter(|&w| inside[w]).collect();
        if nbrs.len() <= k && nbrs.iter().all(|&w| load[w] < k) {
            inside[v] = true;
            load[v] = nbrs.len();
            for w in nbrs {
                load[w] += 1;
            }
        }
    }
    (0..g.n()).filter(|&v| inside[v]).collect()
}

struct Exact<'a> {
    g: &'a Graph,
    k: usize,
    load: Vec<usize>,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl Exact<'_> {
    fn go(&mut self, v: usize) {
        let n = self.g.n();
        if self.current.len() + (n - v) <= self.best.len() {
            return;
        }
        if v == n {
            self.best = self.current.clone();
            return;
        }
        let nbrs: Vec<usize> = self
            .current
            .iter()
            .copied()
            .filter(|&w| self.g.has_edge(v, w))
            .collect();
        if nbrs.len() <= self.k && nbrs.iter().all(|&w| self.load[w] < self.k) {
            for &w in &nbrs {
                self.load[w] += 1;
            }
            self.load[v] = nbrs.len();
            self.current.push(v);
            self.go(v + 1);
            self.current.pop();
            self.load[v] = 0;
            for &w in &nbrs {
                self.load[w] -= 1;
            }
        }
        self.go(v + 1);
    }
}

/// A vertex set `U` with `Delta(G[U]) <= k`: a maximum one by exact search
/// when `n <= 20`, otherwise the best of seeded greedy restarts.
pub fn kogan_sparse_set(g: &Graph, k: usize, config: &KoganConfig) -> Result<KoganReport> {
    let n = g.n();
    let (set, exhaustive) = if n <= KOGAN_EXHAUSTIVE_LIMIT {
        let mut search = Exact {
            g,
            k,
            load: vec![0; n],
            current: Vec::new(),
            best: Vec::new(),
        };
        search.go(0);
        (search.best, true)
    } else {
        if config.restarts == 0 {
            return Err(Error::invalid("restarts must be positive"));
        }
        let best = (0..config.restarts)
            .into_par_iter()
            .map(|i| (greedy(g, k, config.seed.trial(i)), i))
            .max_by(|a, b| a.0.len().cmp(&b.0.len()).then(b.1.cmp(&a.1)))
            .expect("at least one restart");
        (best.0, false)
    };
    let max_degree_in_set = max_degree_in(g, &set);
    if max_degree_in_set > k {
        return Err(Error::VerificationFailed(format!(
            "sparse set has internal degree {max_degree_in_set} > {k}"
        )));
    }
    let bound_ceiling = kogan_bound_ceiling(g, k);
    Ok(KoganReport {
        n,
        k,
        average_degree: if n == 0 {
            0.0
        } else {
            2.0 * g.m() as f64 / n as f64
        },
        bound_ceiling,
        achieved: set.len(),
        attains_bound: set.len() >= bound_ceiling,
        set,
        max_degree_in_set,
        exhaustive,
    })
}
