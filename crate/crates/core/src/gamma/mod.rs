//! Coloured gadget graphs `Gamma` on `q(delta-1)+1` vertices and checks of
//! the two conditions they must meet: each colour class has maximum degree
//! below `delta`, and every `delta`-set carries a copy of `F` in every colour.

mod affine;
mod check;
mod embedders;
mod prime;

pub use affine::{
    affine_feasibility, affine_gamma_on_points, affine_gamma_with_prime, build_affine_gamma,
    line_id, AffineGamma, Point,
};
pub use check::{
    check_cover_condition, check_degree_condition, CheckedMode, CoverMode, CoverWitness,
    DegreeCheck, GammaCheckReport, DEFAULT_SAMPLES, EXHAUSTIVE_SUBSET_LIMIT,
};
pub use embedders::{embed_forest_peeling, embed_forest_pigeonhole};
pub use prime::{is_prime, largest_prime_leq};

use rand::Rng as _;

use crate::coloured::ColouredGraph;
use crate::error::{Error, Result};
use crate::seed::Seed;

/// `q(delta-1)+1`, the minimum degree a simple minimal Ramsey graph attains.
pub fn gamma_order(delta: usize, q: usize) -> Result<usize> {
    if delta == 0 || q == 0 {
        return Err(Error::invalid("delta and q must be positive"));
    }
    q.checked_mul(delta - 1)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::invalid("q(delta-1)+1 overflows"))
}

/// Uniform random `q`-coloured `G(N, 1/2)`. Pairs are visited in row-major
/// order; each draws one uniform for the edge and, if present, one colour.
pub fn build_random_gamma(delta: usize, q: usize, seed: Seed) -> Result<ColouredGraph> {
    let n = gamma_order(delta, q)?;
    let mut rng = seed.rng();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < 0.5 {
                edges.push((u, v, rng.gen_range(1..=q)));
            }
        }
    }
    ColouredGraph::from_coloured_edges(n, q, &edges)
}

/// `q(delta-1)+1` isolated vertices.
pub fn build_empty_gamma(delta: usize, q: usize) -> Result<ColouredGraph> {
    ColouredGraph::from_coloured_edges(gamma_order(delta, q)?, q, &[])
}
