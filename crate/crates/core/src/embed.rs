//! Exact (non-induced) subgraph search by backtracking over bit-set rows.
//!
//! Forest patterns have no size limit. General patterns are capped at
//! [`GENERAL_PATTERN_CAP`] vertices.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const GENERAL_PATTERN_CAP: usize = 10;

/// An injective map from pattern vertices to host vertices, stored as
/// `(pattern, host)` pairs sorted by pattern vertex. Isolated pattern
/// vertices are stripped before matching and do not appear.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Embedding {
    pub pairs: Vec<(usize, usize)>,
}

impl Embedding {
    pub fn get(&self, x: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&x, |&(p, _)| p)
            .ok()
            .map(|i| self.pairs[i].1)
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().map(|&(_, h)| h)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A pattern graph linearised into a matching order.
#[derive(Clone, Debug)]
pub(crate) struct Pattern {
    /// Pattern vertices in the order they are matched.
    order: Vec<usize>,
    /// For position `i`, the earlier positions adjacent to `order[i]`.
    back: Vec<Vec<usize>>,
    degree: Vec<usize>,
}

impl Pattern {
    fn from_order(g: &Graph, order: Vec<usize>) -> Pattern {
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut b: Vec<usize> = g
                    .neighbours(v)
                    .iter()
                    .map(|w| pos[w])
                    .filter(|&j| j < i)
                    .collect();
                b.sort_unstable();
                b
            })
            .collect();
        let degree = order.iter().map(|&v| g.degree(v)).collect();
        Pattern {
            order,
            back,
            degree,
        }
    }

    /// Components by decreasing order (ties: smallest vertex first), each
    /// in BFS order from its highest-degree vertex (ties: lowest index).
    pub(crate) fn forest(f: &Graph) -> Pattern {
        let mut comps = f.components();
        comps.retain(|c| c.len() > 1 || f.degree(c[0]) > 0);
        comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        let mut order = Vec::with_capacity(f.n());
        let mut seen = BitSet::new(f.n());
        for comp in comps {
            let root = *comp
                .iter()
                .max_by(|&&a, &&b| f.degree(a).cmp(&f.degree(b)).then(b.cmp(&a)))
                .expect("non-empty component");
            seen.insert(root);
            let start = order.len();
            order.push(root);
            let mut head = start;
            while head < order.len() {
                let v = order[head];
                head += 1;
                for w in f.neighbours(v).iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        order.push(w);
                    }
                }
            }
        }
        Pattern::from_order(f, order)
    }

    /// Greedy connectivity order: start from `start` (or the highest-degree
    /// vertex), then always take the vertex with most placed neighbours.
    /// Isolated vertices are skipped.
    pub(crate) fn general(g: &Graph, start: &[usize]) -> Pattern {
        let n = g.n();
        let mut placed = BitSet::new(n);
        let mut order: Vec<usize> = Vec::with_capacity(n);
        for &s in start {
            placed.insert(s);
            order.push(s);
        }
        let active: Vec<usize> = (0..n).filter(|&v| g.degree(v) > 0).collect();
        while order.len() < active.len() {
            let next = active
                .iter()
                .copied()
                .filter(|&v| !placed.contains(v))
                .max_by(|&a, &b| {
                    let ka = g.neighbours(a).intersection_count(&placed);
                    let kb = g.neighbours(b).intersection_count(&placed);
                    ka.cmp(&kb)
                        .then(g.degree(a).cmp(&g.degree(b)))
                        .then(b.cmp(&a))
                })
                .expect("unplaced vertex exists");
            placed.insert(next);
            order.push(next);
        }
        Pattern::from_order(g, order)
    }

    pub(crate) fn len(&self) -> usize {
        self.order.len()
    }

    pub(crate) fn vertex_at(&self, i: usize) -> usize {
        self.order[i]
    }
}

/// Search state over a host given as adjacency rows, optionally restricted
/// to an allowed vertex set.
pub(crate) struct Matcher<'a> {
    rows: &'a [BitSet],
    allowed: Option<&'a BitSet>,
    pattern: &'a Pattern,
    images: Vec<usize>,
    used: BitSet,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(
        rows: &'a [BitSet],
        allowed: Option<&'a BitSet>,
        pattern: &'a Pattern,
    ) -> Self {
        Matcher {
            rows,
            allowed,
            pattern,
            images: Vec::with_capacity(pattern.len()),
            used: BitSet::new(rows.len()),
        }
    }

    fn host_degree(&self, v: usize) -> usize {
        match self.allowed {
            Some(a) => self.rows[v].intersection_count(a),
            None => self.rows[v].count(),
        }
    }

    /// Runs the search with the first `prefix.len()` positions pinned.
    /// Returns images indexed by pattern position.
    pub(crate) fn run(mut self, prefix: &[usize]) -> Option<Vec<usize>> {
        for (i, &h) in prefix.iter().enumerate() {
            if self.used.contains(h) || !self.admissible(i, h) {
                return None;
            }
            self.images.push(h);
            self.used.insert(h);
        }
        if self.extend() {
            Some(self.images)
        } else {
            None
        }
    }

    fn admissible(&self, i: usize, h: usize) -> bool {
        if let Some(a) = self.allowed {
            if !a.contains(h) {
                return false;
            }
        }
        self.pattern.back[i]
            .iter()
            .all(|&j| self.rows[h].contains(self.images[j]))
            && self.host_degree(h) >= self.pattern.degree[i]
    }

    fn extend(&mut self) -> bool {
        let i = self.images.len();
        if i == self.pattern.len() {
            return true;
        }
        let back = &self.pattern.back[i];
        let mut cand = match back.first() {
            Some(&j) => self.rows[self.images[j]].clone(),
            None => BitSet::full(self.rows.len()),
        };
        for &j in back.iter().skip(1) {
            cand.intersect_with(&self.rows[self.images[j]]);
        }
        if let Some(a) = self.allowed {
            cand.intersect_with(a);
        }
        cand.difference_with(&self.used);
        let need = self.pattern.degree[i];
        for h in cand.iter() {
            if self.host_degree(h) < need {
                continue;
            }
            self.images.push(h);
            self.used.insert(h);
            if self.extend() {
                return true;
            }
            self.used.remove(h);
            self.images.pop();
        }
        false
    }
}

fn to_embedding(pattern: &Pattern, images: Vec<usize>) -> Embedding {
    let mut pairs: Vec<(usize, usize)> = images
        .into_iter()
        .enumerate()
        .map(|(i, h)| (pattern.vertex_at(i), h))
        .collect();
    pairs.sort_unstable();
    Embedding { pairs }
}

/// Finds a copy of the forest `forest` in `host`, or `None`.
///
/// Isolated vertices of `forest` are stripped first. Errors on cyclic input.
pub fn contains_forest_copy(host: &Graph, forest: &Graph) -> Result<Option<Embedding>> {
    forest_copy_in(host.rows(), None, forest)
}

/// Like [`contains_forest_copy`] but only host vertices in `allowed` may be used.
pub fn contains_forest_copy_within(
    host: &Graph,
    forest: &Graph,
    allowed: &BitSet,
) -> Result<Option<Embedding>> {
    forest_copy_in(host.rows(), Some(allowed), forest)
}

pub(crate) fn forest_copy_in(
    rows: &[BitSet],
    allowed: Option<&BitSet>,
    forest: &Graph,
) -> Result<Option<Embedding>> {
    if !forest.is_forest() {
        return Err(Error::NotAForest);
    }
    let pattern = Pattern::forest(forest);
    Ok(Matcher::new(rows, allowed, &pattern)
        .run(&[])
        .map(|img| to_embedding(&pattern, img)))
}

/// General subgraph search for patterns with at most [`GENERAL_PATTERN_CAP`]
/// non-isolated vertices.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Result<Option<Embedding>> {
    let active = pattern.n() - pattern.isolated_vertices().len();
    if active > GENERAL_PATTERN_CAP {
        return Err(Error::invalid(format!(
            "general subgraph search supports at most {GENERAL_PATTERN_CAP} non-isolated pattern vertices, got {active}"
        )));
    }
    let p = Pattern::general(pattern, &[]);
    Ok(Matcher::new(host.rows(), None, &p)
        .run(&[])
        .map(|img| to_embedding(&p, img)))
}
