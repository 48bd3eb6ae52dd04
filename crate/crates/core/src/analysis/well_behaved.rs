use rand::seq::index;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::connectivity::small_vertex_cut;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::seed::Seed;

/// Above this many `delta`-subsets the cut-set property is sampled.
pub const W4_EXHAUSTIVE_LIMIT: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Exact,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W1 {
    pub ok: bool,
    pub tied: Option<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W2 {
    pub ok: bool,
    pub pair: Option<(usize, usize)>,
    pub codegree: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W3 {
    pub ok: bool,
    pub cut: Option<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutWitness {
    pub cut_set: Vec<usize>,
    pub component: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct W4 {
    pub ok: bool,
    pub mode: Verdict,
    pub cut_sets_checked: u64,
    /// Closed window of forbidden component orders.
    pub window: (usize, usize),
    pub witness: Option<CutWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellBehavedReport {
    pub w1: W1,
    pub w2: W2,
    pub w3: W3,
    pub w4: W4,
    pub overall: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WellBehavedConfig {
    /// Random cut-sets drawn when the exhaustive check is too large.
    pub w4_samples: usize,
    pub seed: Seed,
}

impl Default for WellBehavedConfig {
    fn default() -> Self {
        WellBehavedConfig {
            w4_samples: 2000,
            seed: Seed(0),
        }
    }
}

pub(crate) fn binomial_saturating(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Checks W1–W4. Requires at least four vertices.
pub fn well_behaved(h: &Graph, config: &WellBehavedConfig) -> Result<WellBehavedReport> {
    let n = h.n();
    if n < 4 {
        return Err(Error::precondition(
            "well-behavedness needs at least 4 vertices",
        ));
    }
    let degrees = h.degrees();
    let delta = *degrees.iter().min().expect("n >= 4");
    let minimisers: Vec<usize> = (0..n).filter(|&v| degrees[v] == delta).collect();
    let w1 = W1 {
        ok: minimisers.len() == 1,
        tied: (minimisers.len() > 1).then(|| (minimisers[0], minimisers[1])),
    };

    let bad_pair = (0..n).find_map(|u| {
        (u + 1..n).find_map(|v| {
            let c = h.neighbours(u).intersection_count(h.neighbours(v));
            (2 * c > delta).then_some((u, v, c))
        })
    });
    let w2 = W2 {
        ok: bad_pair.is_none(),
        pair: bad_pair.map(|(u, v, _)| (u, v)),
        codegree: bad_pair.map(|(_, _, c)| c),
    };

    let cut = if n > 3 { small_vertex_cut(h, 3) } else { None };
    let w3 = W3 {
        ok: n > 3 && cut.is_none(),
        cut,
    };

    let w4 = check_w4(h, delta, config);
    let overall = w1.ok && w2.ok && w3.ok && w4.ok;
    Ok(WellBehavedReport {
        w1,
        w2,
        w3,
        w4,
        overall,
    })
}

/// A component of `h - removed` whose order lies in `[lo, hi]`.
fn component_in_window(h: &Graph, removed: &BitSet, lo: usize, hi: usize) -> Option<Vec<usize>> {
    let n = h.n();
    let mut seen = removed.clone();
    for s in 0..n {
        if seen.contains(s) {
            continue;
        }
        seen.insert(s);
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            let mut fresh = h.neighbours(v).clone();
            fresh.difference_with(&seen);
            for w in fresh.iter() {
                seen.insert(w);
                comp.push(w);
            }
        }
        if (lo..=hi).contains(&comp.len()) {
            comp.sort_unstable();
            return Some(comp);
        }
    }
    None
}

fn check_w4(h: &Graph, delta: usize, config: &WellBehavedConfig) -> W4 {
    let n = h.n();
    let lo = delta.div_ceil(2);
    let hi = n / 2;
    let window = (lo, hi);
    if lo > hi || delta >= n {
        return W4 {
            ok: true,
            mode: Verdict::Exact,
            cut_sets_checked: 0,
            window,
            witness: None,
        };
    }
    let test = |set: &[usize]| -> Option<CutWitness> {
        let removed = BitSet::from_iter_with_len(n, set.iter().copied());
        component_in_window(h, &removed, lo, hi).map(|component| CutWitness {
            cut_set: set.to_vec(),
            component,
        })
    };

    let total = binomial_saturating(n as u64, delta as u64);
    if total <= W4_EXHAUSTIVE_LIMIT {
        let mut combo: Vec<usize> = (0..delta).collect();
        let mut checked = 0;
        loop {
            checked += 1;
            if let Some(w) = test(&combo) {
                return W4 {
                    ok: false,
                    mode: Verdict::Exact,
                    cut_sets_checked: checked,
                    window,
                    witness: Some(w),
                };
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
        return W4 {
            ok: true,
            mode: Verdict::Exact,
            cut_sets_checked: checked,
            window,
            witness: None,
        };
    }

    // Neighbourhoods of minimum-degree vertices first, then uniform samples.
    let mut candidates: Vec<Vec<usize>> = (0..n)
        .filter(|&v| h.degree(v) == delta)
        .map(|v| h.neighbours(v).iter().collect())
        .collect();
    let structured = candidates.len();
    candidates.extend((0..config.w4_samples as u64).map(|k| {
        let mut rng = config.seed.trial(k).rng();
        let mut s = index::sample(&mut rng, n, delta).into_vec();
        s.sort_unstable();
        s
    }));
    let hit = candidates
        .par_iter()
        .enumerate()
        .find_map_first(|(i, set)| test(set).map(|w| (i, w)));
    W4 {
        ok: hit.is_none(),
        mode: Verdict::Sampled,
        cut_sets_checked: hit
            .as_ref()
            .map_or((structured + config.w4_samples) as u64, |(i, _)| {
                *i as u64 + 1
            }),
        window,
        witness: hit.map(|(_, w)| w),
    }
}

/// Advances `combo` to the next `k`-subset of `0..n` in lexicographic order.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
