//! Undirected simple graphs with bit-set adjacency rows.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// An undirected simple graph on vertices `0..n`.
///
/// Rows are kept symmetric and loop-free; the edge count is cached. Graphs
/// are immutable once built, derived graphs are returned as new values.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
    m: usize,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr {
            n: g.n,
            edges: g.edges().collect(),
        }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;

    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_edges(r.n, &r.edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![BitSet::new(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Endpoint order within a pair is irrelevant.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.rows[u].contains(v) {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    /// Caller guarantees `u != v`, both in range, and the edge is new.
    #[inline]
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        self.m += 1;
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::empty(n);
        for v in 0..n {
            g.add_edge_unchecked(v, (v + 1) % n);
        }
        g
    }

    /// Path on `n` vertices (so `n - 1` edges).
    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge_unchecked(v - 1, v);
        }
        g
    }

    /// Star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::empty(leaves + 1);
        for v in 1..=leaves {
            g.add_edge_unchecked(0, v);
        }
        g
    }

    /// `k` disjoint edges `{2i, 2i+1}`.
    pub fn matching(k: usize) -> Self {
        let mut g = Graph::empty(2 * k);
        for i in 0..k {
            g.add_edge_unchecked(2 * i, 2 * i + 1);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, &edges).expect("petersen edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows.iter().map(BitSet::count).collect()
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.rows[u].contains(v)
    }

    /// Edges as `(u, v)` with `u < v`, in row-major order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.rows[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn min_degree(&self) -> usize {
        self.rows.iter().map(BitSet::count).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows.iter().map(BitSet::count).max().unwrap_or(0)
    }

    /// Number of common neighbours of two distinct vertices.
    pub fn codegree(&self, u: usize, v: usize) -> Result<usize> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::precondition("codegree needs two distinct vertices"));
        }
        Ok(self.rows[u].intersection_count(&self.rows[v]))
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.rows[a].contains(b) {
                    g.add_edge_unchecked(i, j);
                }
            }
        }
        g
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        if g.rows[u].contains(v) {
            g.rows[u].remove(v);
            g.rows[v].remove(u);
            g.m -= 1;
        }
        g
    }

    /// `G - v`, keeping `v` as an isolated vertex so labels stay stable.
    pub fn isolate_vertex(&self, v: usize) -> Graph {
        let mut g = self.clone();
        let nbrs: Vec<usize> = g.rows[v].iter().collect();
        for w in nbrs {
            g.rows[w].remove(v);
            g.m -= 1;
        }
        g.rows[v] = BitSet::new(self.n);
        g
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.rows[v].is_empty()).collect()
    }

    /// Removes isolated vertices. Returns the stripped graph and, for each of
    /// its vertices, the original label.
    pub fn strip_isolated(&self) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = (0..self.n).filter(|&v| !self.rows[v].is_empty()).collect();
        (self.induced(&keep), keep)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for w in self.rows[v].iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Order of the largest component (0 for the empty vertex set).
    pub fn largest_component_order(&self) -> usize {
        self.components().iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_forest(&self) -> bool {
        self.m + self.components().len() == self.n
    }

    /// True iff every edge `uv` has a common neighbour.
    pub fn every_edge_in_triangle(&self) -> bool {
        self.edges()
            .all(|(u, v)| self.rows[u].intersects(&self.rows[v]))
    }

    /// Graph relabelled by `perm`: vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union, `other` shifted past `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_unchecked(self.n + u, self.n + v);
        }
        g
    }

    /// Same vertex set with one extra edge; errors if the edge is invalid or present.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.try_add_edge(u, v)?;
        Ok(g)
    }

    /// Adds a new vertex joined to `nbrs`; it gets label `n`.
    pub fn with_vertex(&self, nbrs: &[usize]) -> Result<Graph> {
        let mut g = Graph::empty(self.n + 1);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for &w in nbrs {
            g.try_add_edge(self.n, w)?;
        }
        Ok(g)
    }
}
