use serde::{Deserialize, Serialize};

use super::{active_pattern, arrows, Budget};
use crate::analysis::{binomial_saturating, neighbourhood_profile, next_combination};
use crate::coloured::ColouredGraph;
use crate::error::{Error, Result};
use crate::gamma::{CoverWitness, EXHAUSTIVE_SUBSET_LIMIT};
use crate::graph::Graph;
use crate::verify::{mono_copy_scan, naive_contains};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NecessityReport {
    pub w: usize,
    pub delta: usize,
    /// Whether H's minimum degree vertex is unique; when it is not, the
    /// lowest-index minimiser defines `f`.
    pub unique_min: bool,
    pub f: Graph,
    /// `N(w)` in increasing order; vertex `i` of `gamma` is `neighbourhood[i]`.
    pub neighbourhood: Vec<usize>,
    pub gamma: ColouredGraph,
    pub subsets_checked: u64,
    /// First `(U, i)` with no colour-`i` copy of `f` in `gamma[U]`, in host labels.
    pub violation: Option<CoverWitness>,
    pub condition_holds: bool,
}

/// Brute-force cover scan over all `delta`-subsets and colours of `gamma`,
/// independent of the bit-set matcher. Returns subsets checked and the first
/// failure in `gamma`'s labels.
pub(crate) fn brute_cover_scan(
    gamma: &ColouredGraph,
    f: &Graph,
    delta: usize,
) -> Result<(u64, Option<CoverWitness>)> {
    let n = gamma.n();
    if delta > n {
        return Err(Error::precondition(format!(
            "delta = {delta} exceeds {n} vertices"
        )));
    }
    let total = binomial_saturating(n as u64, delta as u64);
    if total > EXHAUSTIVE_SUBSET_LIMIT {
        return Err(Error::BudgetExceeded {
            nodes: 0,
            millis: 0,
            reason: format!("C({n}, {delta}) exceeds {EXHAUSTIVE_SUBSET_LIMIT} subsets"),
        });
    }
    let classes = gamma.classes();
    let mut combo: Vec<usize> = (0..delta).collect();
    let mut checked = 0;
    loop {
        checked += 1;
        for (i, class) in classes.iter().enumerate() {
            if naive_contains(&class.induced(&combo), f).is_none() {
                return Ok((
                    checked,
                    Some(CoverWitness {
                        subset: combo,
                        colour: i + 1,
                    }),
                ));
            }
        }
        if !next_combination(&mut combo, n) {
            return Ok((checked, None));
        }
    }
}

fn h_free_colouring_of(
    g_minus_w: &Graph,
    h: &Graph,
    q: usize,
    given: Option<&ColouredGraph>,
    budget: &Budget,
) -> Result<ColouredGraph> {
    match given {
        Some(c) => {
            c.covers(g_minus_w)?;
            if c.q() != q {
                return Err(Error::precondition(format!(
                    "colouring uses {} colours, expected {q}",
                    c.q()
                )));
            }
            if let Some(hit) = mono_copy_scan(c, h) {
                return Err(Error::precondition(format!(
                    "supplied colouring has a colour-{} copy of H",
                    hit.colour
                )));
            }
            Ok(c.clone())
        }
        None => {
            let r = arrows(g_minus_w, h, q, budget)?;
            r.witness.ok_or_else(|| {
                Error::precondition("G - w arrows H, so no H-free colouring of G - w exists")
            })
        }
    }
}

/// Restricts an H-free colouring of `G - w` to `N(w)` and tests whether every
/// `delta(H)`-subset sees a copy of `F = H[N(u)]` in every colour.
pub fn necessity_gamma(
    g: &Graph,
    h: &Graph,
    q: usize,
    w: usize,
    colouring: Option<&ColouredGraph>,
    budget: &Budget,
) -> Result<NecessityReport> {
    g.check_vertex(w)?;
    let pattern = active_pattern(h)?;
    let profile = neighbourhood_profile(&pattern)?;
    let delta = profile.delta;
    let want = q * (delta - 1) + 1;
    if g.degree(w) != want {
        return Err(Error::precondition(format!(
            "d(w) = {} but q(delta(H)-1)+1 = {want}",
            g.degree(w)
        )));
    }
    let rest = g.isolate_vertex(w);
    let c = h_free_colouring_of(&rest, &pattern, q, colouring, budget)?;
    let neighbourhood: Vec<usize> = g.neighbours(w).iter().collect();
    let gamma = c.induced(&neighbourhood);
    let (subsets_checked, violation) = brute_cover_scan(&gamma, &profile.f, delta)?;
    let violation = violation.map(|v| CoverWitness {
        subset: v.subset.iter().map(|&i| neighbourhood[i]).collect(),
        colour: v.colour,
    });
    Ok(NecessityReport {
        w,
        delta,
        unique_min: profile.unique_min,
        f: profile.f,
        neighbourhood,
        gamma,
        subsets_checked,
        condition_holds: violation.is_none(),
        violation,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleRefutation {
    pub v: usize,
    /// The common colour of the edges from `v` into `W`.
    pub colour: usize,
    /// `U = W + v`; its edges to `w` get the other colour.
    pub u_set: Vec<usize>,
    pub extension: ColouredGraph,
}

/// Extends an H-free 2-colouring of `G - w` to all of `G` when every edge of
/// `H` lies in a triangle and `d(w) = 2 delta(H) - 1`.
///
/// Finds `v` in `N(w)` and `delta - 1` further neighbours `W` of `w` whose
/// edges to `v` (where present) share one colour `c`; then `w` sends colour
/// `3 - c` to `U = W + v` and colour `c` to the other `delta - 1` neighbours.
/// A copy of `H` through `w` would need all of `U` in colour `3 - c`, and the
/// triangle on `wv` would need an edge from `v` into `W` of that colour.
pub fn triangle_refuter(
    g: &Graph,
    w: usize,
    h: &Graph,
    c: &ColouredGraph,
) -> Result<TriangleRefutation> {
    g.check_vertex(w)?;
    let pattern = active_pattern(h)?;
    if !pattern.every_edge_in_triangle() {
        return Err(Error::precondition("some edge of H lies in no triangle"));
    }
    let delta = pattern.min_degree();
    if g.degree(w) != 2 * delta - 1 {
        return Err(Error::precondition(format!(
            "d(w) = {} but 2 delta(H) - 1 = {}",
            g.degree(w),
            2 * delta - 1
        )));
    }
    let rest = g.isolate_vertex(w);
    c.covers(&rest)?;
    if c.q() != 2 {
        return Err(Error::precondition("colouring must use exactly 2 colours"));
    }
    if mono_copy_scan(c, &pattern).is_some() {
        return Err(Error::precondition("colouring of G - w is not H-free"));
    }
    let nbrs: Vec<usize> = g.neighbours(w).iter().collect();
    for &v in &nbrs {
        for colour in 1..=2 {
            let fits: Vec<usize> = nbrs
                .iter()
                .copied()
                .filter(|&x| x != v && c.colour(v, x).map_or(true, |k| k == colour))
                .take(delta - 1)
                .collect();
            if fits.len() < delta - 1 {
                continue;
            }
            let mut u_set = fits;
            u_set.push(v);
            u_set.sort_unstable();
            let mut edges: Vec<(usize, usize, usize)> = c.coloured_edges().to_vec();
            for &x in &nbrs {
                let k = if u_set.binary_search(&x).is_ok() {
                    3 - colour
                } else {
                    colour
                };
                edges.push((w.min(x), w.max(x), k));
            }
            let extension = ColouredGraph::from_coloured_edges(g.n(), 2, &edges)?;
            if let Some(hit) = mono_copy_scan(&extension, &pattern) {
                return Err(Error::VerificationFailed(format!(
                    "extension at v = {v} has a colour-{} copy of H",
                    hit.colour
                )));
            }
            return Ok(TriangleRefutation {
                v,
                colour,
                u_set,
                extension,
            });
        }
    }
    Err(Error::Infeasible(
        "no v in N(w) has delta(H) - 1 further neighbours of w joined to it in one colour".into(),
    ))
}
