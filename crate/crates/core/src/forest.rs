//! Forests are Ramsey simple: the host graph with a pendant-vertex block, an
//! explicit F-free colouring of its core, and the pigeonhole argument that
//! finds a monochromatic `F` in any colouring of the whole host.
//!
//! Host layout: `X = 0..r`, `Y = r..r+s`, and `Z_y` for the `i`-th vertex of
//! `Y` is the block of `bq` vertices starting at `r + s + i*b*q`.

use std::collections::BTreeMap;
use std::ops::Range;

use rand::seq::SliceRandom;
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::coloured::ColouredGraph;
use crate::embed::{contains_forest_copy, Embedding};
use crate::error::{Error, Result};
use crate::format::{SzzHeader, MAX_VERTICES};
use crate::graph::Graph;
use crate::seed::Seed;
use crate::verify::is_monochromatic_embedding;

/// Default cap on `r*s + t` edges.
pub const DEFAULT_MAX_EDGES: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub a_side: Vec<usize>,
    pub b_side: Vec<usize>,
    /// Vertices of `b_side` with degree 1.
    pub b1: Vec<usize>,
    pub b_ge2: Vec<usize>,
}

/// Bipartition of a forest without isolated vertices minimising `|A|`: each
/// component contributes its smaller side, and on a tie the side holding the
/// component's smallest vertex (this gives the lexicographically least `A`).
pub fn min_bipartition(f: &Graph) -> Result<Bipartition> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    if let Some(&v) = f.isolated_vertices().first() {
        return Err(Error::precondition(format!(
            "vertex {v} is isolated; strip isolated vertices first"
        )));
    }
    let mut side = vec![0u8; f.n()];
    let mut a_side = Vec::new();
    for comp in f.components() {
        // 2-colour the tree from its smallest vertex
        side[comp[0]] = 1;
        let mut stack = vec![comp[0]];
        while let Some(v) = stack.pop() {
            for w in f.neighbours(v).iter() {
                if side[w] == 0 {
                    side[w] = 3 - side[v];
                    stack.push(w);
                }
            }
        }
        let ones = comp.iter().filter(|&&v| side[v] == 1).count();
        let keep = if 2 * ones <= comp.len() { 1 } else { 2 };
        a_side.extend(comp.iter().copied().filter(|&v| side[v] == keep));
    }
    a_side.sort_unstable();
    let b_side: Vec<usize> = (0..f.n())
        .filter(|v| a_side.binary_search(v).is_err())
        .collect();
    let (b1, b_ge2) = b_side.iter().partition(|&&v| f.degree(v) == 1);
    Ok(Bipartition {
        a_side,
        b_side,
        b1,
        b_ge2,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SzzGraph {
    pub forest: Graph,
    pub q: usize,
    pub bipartition: Bipartition,
    pub a: usize,
    pub b: usize,
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub graph: Graph,
}

impl SzzGraph {
    pub fn header(&self) -> SzzHeader {
        SzzHeader {
            a: self.a,
            b: self.b,
            r: self.r,
            s: self.s,
            t: self.t,
            q: self.q,
        }
    }

    pub fn x(&self, j: usize) -> usize {
        j
    }

    pub fn y(&self, i: usize) -> usize {
        self.r + i
    }

    /// `Z_y` for the `i`-th vertex of `Y`.
    pub fn z_block(&self, i: usize) -> Range<usize> {
        let start = self.r + self.s + i * self.b * self.q;
        start..start + self.b * self.q
    }
}

/// Builds the host for `f` and `q`: `r = q(a-1)`, `s = q^(r+1) v(f)`,
/// `t = s b q`, complete between `X` and `Y`, and a star from each `y` to
/// its own `bq` pendant vertices.
pub fn construct_szz(f: &Graph, q: usize, max_edges: u64) -> Result<SzzGraph> {
    if q < 2 {
        return Err(Error::invalid("q must be at least 2"));
    }
    let bipartition = min_bipartition(f)?;
    let a = bipartition.a_side.len();
    let b = bipartition.b_side.len();
    if bipartition.b_ge2.len() + 1 > a {
        return Err(Error::VerificationFailed(format!(
            "|B_>=2| = {} exceeds a - 1 = {}",
            bipartition.b_ge2.len(),
            a - 1
        )));
    }
    let too_big = || Error::BudgetExceeded {
        nodes: 0,
        millis: 0,
        reason: "construction size overflows".into(),
    };
    let r = q * (a - 1);
    let s = u32::try_from(r + 1)
        .ok()
        .and_then(|e| (q as u64).checked_pow(e))
        .and_then(|p| p.checked_mul(f.n() as u64))
        .ok_or_else(too_big)?;
    let t = s.checked_mul((b * q) as u64).ok_or_else(too_big)?;
    let edges = (r as u64)
        .checked_mul(s)
        .and_then(|x| x.checked_add(t))
        .ok_or_else(too_big)?;
    let n = r as u64 + s + t;
    if edges > max_edges || n > MAX_VERTICES as u64 {
        return Err(Error::BudgetExceeded {
            nodes: 0,
            millis: 0,
            reason: format!(
                "host would have {n} vertices and {edges} edges (caps {MAX_VERTICES}, {max_edges})"
            ),
        });
    }
    let (s, t, n) = (s as usize, t as usize, n as usize);
    let mut graph = Graph::empty(n);
    for x in 0..r {
        for i in 0..s {
            graph.add_edge_unchecked(x, r + i);
        }
    }
    let block = b * q;
    for i in 0..s {
        for z in r + s + i * block..r + s + (i + 1) * block {
            graph.add_edge_unchecked(r + i, z);
        }
    }
    Ok(SzzGraph {
        forest: f.clone(),
        q,
        bipartition,
        a,
        b,
        r,
        s,
        t,
        graph,
    })
}

/// Colours `E(X_i, Y)` with colour `i`, where `X_i` is the `i`-th block of
/// `a - 1` consecutive vertices of `X`, and checks that no colour class holds
/// a copy of `F`. Pendant edges are left out.
pub fn colour_g_minus_z(g: &SzzGraph) -> Result<ColouredGraph> {
    let block = g.a - 1;
    let mut edges = Vec::with_capacity(g.r * g.s);
    for x in 0..g.r {
        let colour = x / block + 1;
        for i in 0..g.s {
            edges.push((x, g.y(i), colour));
        }
    }
    let coloured = ColouredGraph::from_coloured_edges(g.graph.n(), g.q, &edges)?;
    for c in 1..=g.q {
        if contains_forest_copy(&coloured.class(c), &g.forest)?.is_some() {
            return Err(Error::VerificationFailed(format!(
                "colour {c} of G - Z contains F"
            )));
        }
    }
    Ok(coloured)
}

/// Uniform colouring of every host edge, drawn in edge order.
pub fn random_colouring(g: &SzzGraph, seed: Seed) -> ColouredGraph {
    let mut rng = seed.rng();
    let edges: Vec<(usize, usize, usize)> = g
        .graph
        .edges()
        .map(|(u, v)| (u, v, rng.gen_range(1..=g.q)))
        .collect();
    ColouredGraph::from_coloured_edges(g.graph.n(), g.q, &edges).expect("colours in range")
}

/// A colouring in which every colour profile uses each colour exactly
/// `a - 1` times, so no colour repeats `a` times: each `y` gets a shuffled
/// balanced profile and pendant colours are uniform.
pub fn balanced_colouring(g: &SzzGraph, seed: Seed) -> ColouredGraph {
    let mut rng = seed.rng();
    let base: Vec<usize> = (0..g.r).map(|x| x / (g.a - 1).max(1) + 1).collect();
    let mut edges = Vec::with_capacity(g.graph.m());
    for i in 0..g.s {
        let mut profile = base.clone();
        profile.shuffle(&mut rng);
        edges.extend(
            profile
                .iter()
                .enumerate()
                .map(|(x, &c)| (g.x(x), g.y(i), c)),
        );
        edges.extend(g.z_block(i).map(|z| (g.y(i), z, rng.gen_range(1..=g.q))));
    }
    ColouredGraph::from_coloured_edges(g.graph.n(), g.q, &edges).expect("colours in range")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProofCase {
    /// Some colour fills `a` profile positions: `F` sits in a monochromatic
    /// `K_{a, v(F)}` between `X` and `Y`.
    RepeatedColour,
    /// Every colour fills exactly `a - 1` positions: `A` goes to `Y`, `B_1`
    /// to the pendant sets and `B_>=2` to `X`.
    Balanced,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonoForest {
    pub colour: usize,
    pub case: ProofCase,
    /// The pendant colour shared by `Y'`; the argument's "colour 1".
    pub pendant_colour: usize,
    pub profile: Vec<usize>,
    /// The `v(F)` vertices of `Y'` sharing `profile`.
    pub y_vertices: Vec<usize>,
    pub embedding: Embedding,
}

/// Runs the pigeonhole argument on an arbitrary `q`-colouring `phi` of the
/// host and returns the monochromatic copy of `F` it produces.
pub fn find_mono_forest(g: &SzzGraph, phi: &ColouredGraph) -> Result<MonoForest> {
    phi.covers(&g.graph)?;
    if phi.q() != g.q {
        return Err(Error::precondition(format!(
            "colouring has {} colours, expected {}",
            phi.q(),
            g.q
        )));
    }
    let colour = |u: usize, v: usize| phi.colour(u, v).expect("host edge is coloured");
    let q = g.q;
    let vf = g.forest.n();

    // (1) majority pendant colour per y (ties to the lowest colour) and the
    // first b pendants of that colour
    let mut pendant = Vec::with_capacity(g.s);
    let mut z_prime: Vec<Vec<usize>> = Vec::with_capacity(g.s);
    for i in 0..g.s {
        let y = g.y(i);
        let mut count = vec![0usize; q + 1];
        for z in g.z_block(i) {
            count[colour(y, z)] += 1;
        }
        let best = (1..=q)
            .max_by(|&c, &d| count[c].cmp(&count[d]).then(d.cmp(&c)))
            .expect("q >= 1");
        pendant.push(best);
        z_prime.push(
            g.z_block(i)
                .filter(|&z| colour(y, z) == best)
                .take(g.b)
                .collect(),
        );
    }

    // (2) the most common pendant colour, and its first s/q vertices
    let mut freq = vec![0usize; q + 1];
    for &c in &pendant {
        freq[c] += 1;
    }
    let pendant_colour = (1..=q)
        .max_by(|&c, &d| freq[c].cmp(&freq[d]).then(d.cmp(&c)))
        .expect("q >= 1");
    let y_prime: Vec<usize> = (0..g.s)
        .filter(|&i| pendant[i] == pendant_colour)
        .take(g.s / q)
        .collect();
    if y_prime.len() < g.s / q {
        return Err(Error::VerificationFailed(
            "pendant pigeonhole produced too few vertices".into(),
        ));
    }

    // (3) bucket Y' by colour profile; the least profile with v(F) members
    let mut buckets: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
    for &i in &y_prime {
        let y = g.y(i);
        let profile: Vec<usize> = (0..g.r).map(|x| colour(g.x(x), y)).collect();
        buckets.entry(profile).or_default().push(i);
    }
    let (profile, members) = buckets
        .into_iter()
        .find(|(_, m)| m.len() >= vf)
        .ok_or_else(|| {
            Error::VerificationFailed("profile pigeonhole produced no large bucket".into())
        })?;
    let ys: Vec<usize> = members[..vf].to_vec();

    let mut uses = vec![0usize; q + 1];
    for &c in &profile {
        uses[c] += 1;
    }
    let bip = &g.bipartition;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(vf);
    let (case, mono) = match (1..=q).find(|&c| uses[c] >= g.a) {
        Some(c) => {
            let xs: Vec<usize> = (0..g.r).filter(|&x| profile[x] == c).take(g.a).collect();
            pairs.extend(bip.a_side.iter().zip(&xs).map(|(&v, &x)| (v, g.x(x))));
            pairs.extend(bip.b_side.iter().zip(&ys).map(|(&v, &i)| (v, g.y(i))));
            (ProofCase::RepeatedColour, c)
        }
        None => {
            if (1..=q).any(|c| uses[c] != g.a - 1) {
                return Err(Error::VerificationFailed(format!(
                    "profile {profile:?} is neither repeated nor balanced"
                )));
            }
            let x_prime: Vec<usize> = (0..g.r).filter(|&x| profile[x] == pendant_colour).collect();
            let mut slot = vec![usize::MAX; vf];
            for (k, &v) in bip.a_side.iter().enumerate() {
                slot[v] = k;
                pairs.push((v, g.y(ys[k])));
            }
            pairs.extend(bip.b_ge2.iter().zip(&x_prime).map(|(&v, &x)| (v, g.x(x))));
            let mut next = vec![0usize; vf];
            for &v in &bip.b1 {
                let parent = g.forest.neighbours(v).first().expect("degree one");
                let k = slot[parent];
                pairs.push((v, z_prime[ys[k]][next[k]]));
                next[k] += 1;
            }
            (ProofCase::Balanced, pendant_colour)
        }
    };
    pairs.sort_unstable();
    let embedding = Embedding { pairs };
    if !is_monochromatic_embedding(phi, &g.forest, &embedding, mono) {
        return Err(Error::VerificationFailed(format!(
            "{case:?} embedding is not a colour-{mono} copy of F"
        )));
    }
    Ok(MonoForest {
        colour: mono,
        case,
        pendant_colour,
        profile,
        y_vertices: ys.iter().map(|&i| g.y(i)).collect(),
        embedding,
    })
}
