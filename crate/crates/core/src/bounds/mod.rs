//! Bounds on the simplicity threshold `q~(H)`: finite-`n` evaluations from a
//! neighbourhood profile, leading-order curves over a `p` grid, and the
//! sparse-set subroutine behind the maximum-degree upper bound.

mod curves;
mod kogan;

pub use curves::{corollary_curves, parse_p_grid, write_curves_csv, CurveConfig, CurveRow, Regime};
pub use kogan::{
    kogan_bound_ceiling, kogan_sparse_set, KoganConfig, KoganReport, KOGAN_EXHAUSTIVE_LIMIT,
};

use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::analysis::NeighbourhoodProfile;
use crate::error::{Error, Result};
use crate::gamma::affine_feasibility;

/// A bound that may be infinite. Serialises as a number or the string `"inf"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Bound {
    Finite(u64),
    Infinite,
}

impl Bound {
    pub fn is_finite(self) -> bool {
        matches!(self, Bound::Finite(_))
    }
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bound::Finite(v) => write!(f, "{v}"),
            Bound::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Bound {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Bound::Finite(v) => s.serialize_u64(*v),
            Bound::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Bound {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = Bound;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a non-negative integer or \"inf\"")
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Bound, E> {
                Ok(Bound::Finite(v))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Bound, E> {
                match v {
                    "inf" => Ok(Bound::Infinite),
                    _ => Err(E::invalid_value(de::Unexpected::Str(v), &self)),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsConfig {
    /// Slack passed to the affine feasibility test, in `(0, 0.2)`.
    pub eps: f64,
    /// The constant `C` in `delta / (C log n)`.
    pub log_constant: f64,
}

impl Default for BoundsConfig {
    fn default() -> Self {
        BoundsConfig {
            eps: 0.04,
            log_constant: 80.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: usize,
    pub delta: usize,
    pub lambda_f: usize,
    pub max_degree_f: usize,
    pub e_f: usize,
    pub is_forest_f: bool,
    pub config: BoundsConfig,
    /// Largest `q` passing the affine construction's feasibility test; `0`
    /// when none does, infinite when `F` has no edges.
    pub lower_affine: Bound,
    pub lower_log: Bound,
    pub lower: Bound,
    pub upper_maxdeg: Bound,
    pub upper_edges: Bound,
    pub upper: Bound,
    /// `F` has no edges, so `H` is simple for every `q`.
    pub simple_for_all_q: bool,
}

impl BoundsReport {
    /// The hypotheses under which `lower <= upper` is guaranteed.
    pub fn consistency_applies(&self) -> bool {
        self.e_f >= 1
            && self.is_forest_f
            && self.max_degree_f as f64 <= self.config.log_constant * (self.n as f64).ln()
    }
}

/// `floor((delta + Delta - 1)/Delta - 1/(delta - 1))` in exact integer arithmetic.
pub fn upper_from_max_degree(delta: usize, max_degree_f: usize) -> Bound {
    if max_degree_f == 0 || delta < 2 {
        return Bound::Infinite;
    }
    let (d, m) = (delta as u128, max_degree_f as u128);
    let num = (d + m - 1) * (d - 1);
    let den = m * (d - 1);
    Bound::Finite(num.saturating_sub(m).checked_div(den).unwrap_or(0) as u64)
}

/// `floor(C(delta, 2) / e_F)`.
pub fn upper_from_edges(delta: usize, e_f: usize) -> Bound {
    if e_f == 0 {
        return Bound::Infinite;
    }
    let pairs = delta as u128 * (delta as u128).saturating_sub(1) / 2;
    Bound::Finite((pairs / e_f as u128) as u64)
}

/// Largest `q` for which the affine construction is feasible, `0` if none.
pub fn lower_from_affine(delta: usize, lambda_f: usize, eps: f64) -> Bound {
    let Ok(s) = affine_feasibility(delta, 1, lambda_f.max(1), eps) else {
        return Bound::Finite(0);
    };
    // feasibility is monotone in q and fails beyond s
    let best = (1..=s as usize)
        .take_while(|&q| affine_feasibility(delta, q, lambda_f.max(1), eps).is_ok())
        .last()
        .unwrap_or(0);
    Bound::Finite(best as u64)
}

pub fn qtilde_bounds(
    profile: &NeighbourhoodProfile,
    n: usize,
    config: &BoundsConfig,
) -> Result<BoundsReport> {
    if !profile.unique_min {
        return Err(Error::precondition(
            "the minimum degree is attained more than once",
        ));
    }
    if !(config.eps > 0.0 && config.eps < 0.2) {
        return Err(Error::invalid(format!(
            "eps {} not in (0, 0.2)",
            config.eps
        )));
    }
    if !(config.log_constant > 0.0) || n < 2 {
        return Err(Error::invalid(
            "log_constant must be positive and n at least 2",
        ));
    }
    let delta = profile.delta;
    let simple = profile.e_f == 0;
    let lower_affine = if simple {
        Bound::Infinite
    } else {
        lower_from_affine(delta, profile.lambda_f, config.eps)
    };
    let lower_log =
        Bound::Finite((delta as f64 / (config.log_constant * (n as f64).ln())).floor() as u64);
    let upper_maxdeg = upper_from_max_degree(delta, profile.max_degree_f);
    let upper_edges = upper_from_edges(delta, profile.e_f);
    Ok(BoundsReport {
        n,
        delta,
        lambda_f: profile.lambda_f,
        max_degree_f: profile.max_degree_f,
        e_f: profile.e_f,
        is_forest_f: profile.is_forest_f,
        config: *config,
        lower_affine,
        lower_log,
        lower: lower_affine.max(lower_log),
        upper_maxdeg,
        upper_edges,
        upper: upper_maxdeg.min(upper_edges),
        simple_for_all_q: simple,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn profile(delta: usize, f: Graph) -> NeighbourhoodProfile {
        NeighbourhoodProfile {
            u: 0,
            unique_min: true,
            delta,
            neighbourhood: (1..=delta).collect(),
            lambda_f: f.largest_component_order(),
            max_degree_f: f.max_degree(),
            e_f: f.m(),
            is_forest_f: f.is_forest(),
            f,
        }
    }

    #[test]
    fn worked_example() {
        let f = Graph::matching(2).disjoint_union(&Graph::empty(21));
        let r = qtilde_bounds(&profile(25, f), 10_000, &BoundsConfig::default()).unwrap();
        assert_eq!(r.upper_edges, Bound::Finite(150));
        assert_eq!(r.upper_maxdeg, Bound::Finite(24));
        assert_eq!(r.upper, Bound::Finite(24));
        assert_eq!(r.lower_affine, Bound::Finite(5));
        assert_eq!(r.lower_log, Bound::Finite(0));
        assert_eq!(r.lower, Bound::Finite(5));
        assert!(r.consistency_applies());
    }

    #[test]
    fn empty_neighbourhood_is_simple() {
        let r = qtilde_bounds(&profile(7, Graph::empty(7)), 100, &BoundsConfig::default()).unwrap();
        assert!(r.simple_for_all_q);
        assert_eq!((r.lower, r.upper), (Bound::Infinite, Bound::Infinite));
        assert_eq!(
            serde_json::to_value(r.upper).unwrap(),
            serde_json::json!("inf")
        );
    }

    #[test]
    fn preconditions() {
        let mut p = profile(3, Graph::path(3));
        assert!(qtilde_bounds(
            &p,
            100,
            &BoundsConfig {
                eps: 0.3,
                ..BoundsConfig::default()
            }
        )
        .is_err());
        p.unique_min = false;
        assert!(qtilde_bounds(&p, 100, &BoundsConfig::default()).is_err());
    }

    #[test]
    fn integer_formula_matches_real_formula() {
        for delta in 2..60usize {
            for m in 1..delta {
                let real = (delta + m - 1) as f64 / m as f64 - 1.0 / (delta - 1) as f64;
                let Bound::Finite(v) = upper_from_max_degree(delta, m) else {
                    panic!()
                };
                assert!(
                    v as f64 <= real + 1e-9 && real < v as f64 + 1.0 - 1e-9,
                    "{delta} {m}"
                );
            }
        }
    }

    #[test]
    fn lower_le_upper_on_forests() {
        // the hypotheses of the consistency argument on every small forest shape
        for delta in 2..40usize {
            for (lambda, max_deg, e) in [
                (2, 1, 1),
                (3, 2, 2),
                (4, 3, 3),
                (4, 2, 3),
                (2, 1, delta / 2),
            ] {
                if e == 0 || lambda > delta {
                    continue;
                }
                let lower = lower_from_affine(delta, lambda, 0.04);
                let upper = upper_from_max_degree(delta, max_deg).min(upper_from_edges(delta, e));
                assert!(lower <= upper, "delta={delta} lambda={lambda}");
            }
        }
    }

    #[test]
    fn bound_serde_round_trip() {
        for b in [Bound::Finite(0), Bound::Finite(17), Bound::Infinite] {
            let s = serde_json::to_string(&b).unwrap();
            assert_eq!(serde_json::from_str::<Bound>(&s).unwrap(), b);
        }
        assert!(serde_json::from_str::<Bound>("\"nan\"").is_err());
    }
}
