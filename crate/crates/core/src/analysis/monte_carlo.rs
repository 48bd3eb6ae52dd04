use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::profile::neighbourhood_profile;
use super::well_behaved::{well_behaved, WellBehavedConfig};
use crate::error::{Error, Result};
use crate::gnp::sample_gnp;
use crate::graph::Graph;
use crate::seed::Seed;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

/// The registered graph predicates that [`monte_carlo`] can estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Property {
    #[serde(rename = "is_forest")]
    IsForest,
    #[serde(rename = "every_edge_in_triangle")]
    EveryEdgeInTriangle,
    /// `e(F) = 0` for the minimum-degree neighbourhood.
    #[serde(rename = "e_F_zero")]
    EmptyNeighbourhood,
    /// `n^2 p^3 / 16 <= e(F) <= 4 n^2 p^3`.
    #[serde(rename = "e_F_window")]
    NeighbourhoodEdgeWindow,
    /// `lambda(F) <= ln(n) / 2`.
    #[serde(rename = "lambda_F_small")]
    SmallNeighbourhoodComponents,
    #[serde(rename = "unique_min_degree")]
    UniqueMinDegree,
    /// `|d(v) - np| <= 0.2 np` for every vertex.
    #[serde(rename = "degree_concentration")]
    DegreeConcentration,
    /// W1–W4, with the cut-set property sampled at scale.
    #[serde(rename = "well_behaved")]
    WellBehaved,
}

impl Property {
    pub const ALL: [Property; 8] = [
        Property::IsForest,
        Property::EveryEdgeInTriangle,
        Property::EmptyNeighbourhood,
        Property::NeighbourhoodEdgeWindow,
        Property::SmallNeighbourhoodComponents,
        Property::UniqueMinDegree,
        Property::DegreeConcentration,
        Property::WellBehaved,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::IsForest => "is_forest",
            Property::EveryEdgeInTriangle => "every_edge_in_triangle",
            Property::EmptyNeighbourhood => "e_F_zero",
            Property::NeighbourhoodEdgeWindow => "e_F_window",
            Property::SmallNeighbourhoodComponents => "lambda_F_small",
            Property::UniqueMinDegree => "unique_min_degree",
            Property::DegreeConcentration => "degree_concentration",
            Property::WellBehaved => "well_behaved",
        }
    }

    /// Evaluates the predicate on one sample. `aux` seeds any internal
    /// sampling the predicate does.
    pub fn holds(self, h: &Graph, p: f64, aux: Seed) -> bool {
        let n = h.n() as f64;
        match self {
            Property::IsForest => h.is_forest(),
            Property::EveryEdgeInTriangle => h.every_edge_in_triangle(),
            Property::EmptyNeighbourhood => neighbourhood_profile(h)
                .map(|pr| pr.e_f == 0)
                .unwrap_or(false),
            Property::NeighbourhoodEdgeWindow => {
                let scale = n * n * p * p * p;
                neighbourhood_profile(h)
                    .map(|pr| {
                        let e = pr.e_f as f64;
                        scale / 16.0 <= e && e <= 4.0 * scale
                    })
                    .unwrap_or(false)
            }
            Property::SmallNeighbourhoodComponents => neighbourhood_profile(h)
                .map(|pr| pr.lambda_f as f64 <= 0.5 * n.ln())
                .unwrap_or(false),
            Property::UniqueMinDegree => neighbourhood_profile(h)
                .map(|pr| pr.unique_min)
                .unwrap_or(false),
            Property::DegreeConcentration => {
                let np = n * p;
                (0..h.n()).all(|v| (h.degree(v) as f64 - np).abs() <= 0.2 * np)
            }
            Property::WellBehaved => {
                let cfg = WellBehavedConfig {
                    seed: aux,
                    ..WellBehavedConfig::default()
                };
                well_behaved(h, &cfg).map(|r| r.overall).unwrap_or(false)
            }
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "e(F)=0" => return Ok(Property::EmptyNeighbourhood),
            "forest" => return Ok(Property::IsForest),
            _ => {}
        }
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

/// Success count of a Monte-Carlo run with a 95% Wilson score interval.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub property: Property,
    pub n: usize,
    pub p: f64,
    pub trials: u64,
    pub seed: Seed,
    pub successes: u64,
    pub estimate: f64,
    pub lo: f64,
    pub hi: f64,
}

impl EstimateReport {
    pub const CSV_HEADER: &'static str = "property,n,p,trials,successes,estimate,lo,hi,seed";

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.property,
            self.n,
            self.p,
            self.trials,
            self.successes,
            self.estimate,
            self.lo,
            self.hi,
            self.seed.base()
        )
    }

    /// Empirical stand-in for "asymptotically almost surely": the lower
    /// confidence bound clears `threshold`.
    pub fn confirms(&self, threshold: f64) -> bool {
        self.lo >= threshold
    }
}

/// Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    (
        (centre - half).max(0.0).min(phat),
        (centre + half).min(1.0).max(phat),
    )
}

/// Samples `trials` independent copies of `G(n, p)` and counts how often
/// `property` holds. Trial `k` uses `seed.trial(k)`, so the count does not
/// depend on how rayon splits the work.
pub fn monte_carlo(
    property: Property,
    n: usize,
    p: f64,
    trials: u64,
    seed: Seed,
) -> Result<EstimateReport> {
    if trials == 0 {
        return Err(Error::invalid("need at least one trial"));
    }
    // Validate once up front so workers cannot fail.
    if n == 0 {
        return Err(Error::invalid("G(n,p) needs n >= 1"));
    }
    sample_gnp(1, p, seed)?;
    let successes = (0..trials)
        .into_par_iter()
        .filter(|&k| {
            let trial = seed.trial(k);
            let h = sample_gnp(n, p, trial).expect("parameters validated");
            property.holds(&h, p, trial.trial(1))
        })
        .count() as u64;
    let (lo, hi) = wilson_interval(successes, trials);
    Ok(EstimateReport {
        property,
        n,
        p,
        trials,
        seed,
        successes,
        estimate: successes as f64 / trials as f64,
        lo,
        hi,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
            assert_eq!(
                serde_json::to_string(&p).unwrap(),
                format!("\"{}\"", p.name())
            );
        }
        assert_eq!(
            "e(F)=0".parse::<Property>().unwrap(),
            Property::EmptyNeighbourhood
        );
        assert!(matches!(
            "nope".parse::<Property>(),
            Err(Error::UnknownProperty(_))
        ));
    }

    #[test]
    fn wilson_contains_estimate() {
        for t in [1u64, 7, 100] {
            for s in 0..=t {
                let (lo, hi) = wilson_interval(s, t);
                let e = s as f64 / t as f64;
                assert!(lo <= e && e <= hi && 0.0 <= lo && hi <= 1.0);
            }
        }
        let (lo, _) = wilson_interval(100, 100);
        assert!((lo - 0.963).abs() < 1e-3);
    }

    #[test]
    fn deterministic_across_thread_counts() {
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| monte_carlo(Property::IsForest, 200, 0.004, 40, Seed(9)).unwrap())
        };
        let one = run(1);
        assert_eq!(one, run(3));
        assert!(one.successes <= one.trials);
    }

    #[test]
    fn triangle_regime() {
        let r = monte_carlo(Property::EveryEdgeInTriangle, 120, 0.5, 20, Seed(1)).unwrap();
        assert_eq!(r.successes, 20);
        assert!(monte_carlo(Property::IsForest, 10, 0.5, 0, Seed(1)).is_err());
        assert!(monte_carlo(Property::IsForest, 10, 1.5, 3, Seed(1)).is_err());
    }

    #[test]
    fn csv_layout() {
        let r = monte_carlo(Property::IsForest, 30, 0.01, 5, Seed(2)).unwrap();
        let row = r.csv_row();
        assert_eq!(
            row.split(',').count(),
            EstimateReport::CSV_HEADER.split(',').count()
        );
        assert!(row.starts_with("is_forest,30,0.01,5,"));
        assert!(row.ends_with(",2"));
    }
}
