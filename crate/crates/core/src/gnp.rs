//! Binomial random graphs `G(n, p)`.

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed::Seed;

/// Samples `G(n, p)`.
///
/// One `f64` draw per unordered pair, consumed in row-major order
/// `(0,1), (0,2), …, (0,n-1), (1,2), …`; the pair is an edge iff the draw is
/// below `p`. The result is a pure function of `(n, p, seed)`.
pub fn sample_gnp(n: usize, p: f64, seed: Seed) -> Result<Graph> {
    if n == 0 {
        return Err(Error::invalid("G(n,p) needs n >= 1"));
    }
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::invalid(format!("edge probability {p} not in (0,1)")));
    }
    let mut rng = seed.rng();
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge_unchecked(u, v);
            }
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_parameters() {
        assert!(sample_gnp(0, 0.5, Seed(0)).is_err());
        assert!(sample_gnp(5, 0.0, Seed(0)).is_err());
        assert!(sample_gnp(5, 1.0, Seed(0)).is_err());
        assert!(sample_gnp(5, f64::NAN, Seed(0)).is_err());
    }

    #[test]
    fn near_one_gives_complete_graph() {
        let g = sample_gnp(4, 1.0 - 1e-15, Seed(0)).unwrap();
        assert_eq!(g.m(), 6);
    }

    #[test]
    fn deterministic() {
        let a = sample_gnp(100, 0.5, Seed(11)).unwrap();
        let b = sample_gnp(100, 0.5, Seed(11)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, sample_gnp(100, 0.5, Seed(12)).unwrap());
    }

    #[test]
    fn mean_edge_count() {
        // E[m] = C(2000,2)/2 = 999_500; the mean of 50 trials has sd ~ 50.
        let trials = 50u64;
        let total: usize = (0..trials)
            .map(|k| sample_gnp(2000, 0.5, Seed(3).trial(k)).unwrap().m())
            .sum();
        let mean = total as f64 / trials as f64;
        let expect = 2000.0 * 1999.0 / 4.0;
        assert!((mean - expect).abs() / expect < 0.02, "mean {mean}");
    }

    proptest::proptest! {
        #[test]
        fn sampled_graphs_are_well_formed(n in 1usize..40, p in 0.01f64..0.99, s in 0u64..10_000) {
            let g = sample_gnp(n, p, Seed(s)).unwrap();
            let mut deg_sum = 0;
            for u in 0..n {
                proptest::prop_assert!(!g.has_edge(u, u));
                for v in g.neighbours(u) {
                    proptest::prop_assert!(g.has_edge(v, u));
                }
                deg_sum += g.degree(u);
            }
            proptest::prop_assert_eq!(deg_sum, 2 * g.m());
        }
    }
}
