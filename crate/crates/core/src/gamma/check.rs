use rand::seq::index;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::analysis::{binomial_saturating, next_combination};
use crate::bitset::BitSet;
use crate::coloured::ColouredGraph;
use crate::embed::forest_copy_in;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed::Seed;

/// Exhaustive cover checks refuse more subsets than this.
pub const EXHAUSTIVE_SUBSET_LIMIT: u64 = 10_000_000;

/// Default number of sampled subsets.
pub const DEFAULT_SAMPLES: u64 = 10_000;

const CHUNK: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "kind")]
pub enum CoverMode {
    Exhaustive,
    Sampled { samples: u64, seed: Seed },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub ok: bool,
    pub max_colour_degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverWitness {
    pub subset: Vec<usize>,
    pub colour: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckedMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCheckReport {
    pub degree_ok: bool,
    pub max_colour_degree: usize,
    pub cover_ok: bool,
    pub mode: CheckedMode,
    pub samples_checked: u64,
    pub witness: Option<CoverWitness>,
}

/// Every colour class has maximum degree at most `delta - 1`.
pub fn check_degree_condition(gamma: &ColouredGraph, delta: usize) -> DegreeCheck {
    let max_colour_degree = gamma.max_class_degree();
    DegreeCheck {
        ok: delta >= 1 && max_colour_degree < delta,
        max_colour_degree,
    }
}

/// Checks that every `delta`-subset `U` and every colour `i` admit a copy of
/// `forest` inside `gamma_i[U]`.
///
/// A sampled run whose budget covers all `C(N, delta)` subsets enumerates
/// them instead and reports itself as exhaustive.
pub fn check_cover_condition(
    gamma: &ColouredGraph,
    forest: &Graph,
    delta: usize,
    mode: CoverMode,
) -> Result<GammaCheckReport> {
    if !forest.is_forest() {
        return Err(Error::NotAForest);
    }
    let n = gamma.n();
    if delta > n {
        return Err(Error::precondition(format!(
            "delta = {delta} exceeds v(Gamma) = {n}"
        )));
    }
    let total = binomial_saturating(n as u64, delta as u64);
    let degree = check_degree_condition(gamma, delta);
    let rows = gamma.class_rows();

    let fails = |subset: &[usize]| -> Option<CoverWitness> {
        let allowed = BitSet::from_iter_with_len(n, subset.iter().copied());
        (1..=gamma.q()).find_map(|colour| {
            let found =
                forest_copy_in(&rows[colour - 1], Some(&allowed), forest).expect("forest checked");
            found.is_none().then(|| CoverWitness {
                subset: subset.to_vec(),
                colour,
            })
        })
    };

    let exhaustive = match mode {
        CoverMode::Exhaustive => {
            if total > EXHAUSTIVE_SUBSET_LIMIT {
                return Err(Error::BudgetExceeded {
                    nodes: 0,
                    millis: 0,
                    reason: format!("C({n}, {delta}) exceeds {EXHAUSTIVE_SUBSET_LIMIT} subsets"),
                });
            }
            true
        }
        CoverMode::Sampled { samples, .. } => samples >= total,
    };

    let (checked, witness) = if exhaustive {
        let mut combo: Vec<usize> = (0..delta).collect();
        let mut done = false;
        let mut checked = 0u64;
        let mut witness = None;
        while !done && witness.is_none() {
            let mut chunk = Vec::with_capacity(CHUNK);
            while chunk.len() < CHUNK && !done {
                chunk.push(combo.clone());
                done = !next_combination(&mut combo, n);
            }
            match chunk
                .par_iter()
                .enumerate()
                .find_map_first(|(i, u)| fails(u).map(|w| (i, w)))
            {
                Some((i, w)) => {
                    checked += i as u64 + 1;
                    witness = Some(w);
                }
                None => checked += chunk.len() as u64,
            }
        }
        (checked, witness)
    } else {
        let CoverMode::Sampled { samples, seed } = mode else {
            unreachable!("exhaustive handled above")
        };
        let hit = (0..samples).into_par_iter().find_map_first(|k| {
            let mut rng = seed.trial(k).rng();
            let mut subset = index::sample(&mut rng, n, delta).into_vec();
            subset.sort_unstable();
            fails(&subset).map(|w| (k, w))
        });
        match hit {
            Some((k, w)) => (k + 1, Some(w)),
            None => (samples, None),
        }
    };

    Ok(GammaCheckReport {
        degree_ok: degree.ok,
        max_colour_degree: degree.max_colour_degree,
        cover_ok: witness.is_none(),
        mode: if exhaustive {
            CheckedMode::Exhaustive
        } else {
            CheckedMode::Sampled
        },
        samples_checked: checked,
        witness,
    })
}
