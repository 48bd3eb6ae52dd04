//! Edge-coloured graphs over the palette `1..=q`.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A graph with every edge carrying a colour in `1..=q`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(into = "ColouredRepr", try_from = "ColouredRepr")]
pub struct ColouredGraph {
    graph: Graph,
    q: usize,
    /// `(u, v, c)` with `u < v`, sorted, one entry per edge.
    colours: Vec<(usize, usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct ColouredRepr {
    n: usize,
    q: usize,
    edges: Vec<(usize, usize, usize)>,
}

impl From<ColouredGraph> for ColouredRepr {
    fn from(c: ColouredGraph) -> Self {
        ColouredRepr {
            n: c.graph.n(),
            q: c.q,
            edges: c.colours,
        }
    }
}

impl TryFrom<ColouredRepr> for ColouredGraph {
    type Error = Error;

    fn try_from(r: ColouredRepr) -> Result<Self> {
        ColouredGraph::from_coloured_edges(r.n, r.q, &r.edges)
    }
}

impl ColouredGraph {
    pub fn from_coloured_edges(
        n: usize,
        q: usize,
        edges: &[(usize, usize, usize)],
    ) -> Result<Self> {
        if q == 0 {
            return Err(Error::invalid("palette needs q >= 1"));
        }
        let mut graph = Graph::empty(n);
        let mut colours = Vec::with_capacity(edges.len());
        for &(u, v, c) in edges {
            if c == 0 || c > q {
                return Err(Error::ColourOutOfRange { colour: c, q });
            }
            graph.try_add_edge(u, v)?;
            colours.push((u.min(v), u.max(v), c));
        }
        colours.sort_unstable();
        Ok(ColouredGraph { graph, q, colours })
    }

    /// Colours every edge of `graph` through `colour_of(u, v)` (with `u < v`).
    pub fn from_fn(
        graph: &Graph,
        q: usize,
        mut colour_of: impl FnMut(usize, usize) -> usize,
    ) -> Result<Self> {
        let edges: Vec<_> = graph
            .edges()
            .map(|(u, v)| (u, v, colour_of(u, v)))
            .collect();
        ColouredGraph::from_coloured_edges(graph.n(), q, &edges)
    }

    /// A graph whose edges all get colour 1.
    pub fn monochromatic(graph: &Graph, q: usize) -> Result<Self> {
        ColouredGraph::from_fn(graph, q, |_, _| 1)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Coloured edges `(u, v, c)` with `u < v`, sorted.
    pub fn coloured_edges(&self) -> &[(usize, usize, usize)] {
        &self.colours
    }

    pub fn colour(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.colours
            .binary_search_by(|&(a, b, _)| (a, b).cmp(&key))
            .ok()
            .map(|i| self.colours[i].2)
    }

    /// The colour-`i` subgraph on the full vertex set.
    pub fn class(&self, colour: usize) -> Graph {
        let mut g = Graph::empty(self.n());
        for &(u, v, c) in &self.colours {
            if c == colour {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn classes(&self) -> Vec<Graph> {
        (1..=self.q).map(|c| self.class(c)).collect()
    }

    /// Restriction to the subgraph induced on `vertices`, relabelled `0..len`.
    pub fn induced(&self, vertices: &[usize]) -> ColouredGraph {
        let graph = self.graph.induced(vertices);
        let colours = graph
            .edges()
            .map(|(i, j)| {
                let c = self
                    .colour(vertices[i], vertices[j])
                    .expect("induced edge is coloured");
                (i, j, c)
            })
            .collect();
        ColouredGraph {
            graph,
            q: self.q,
            colours,
        }
    }

    /// Keeps only edges satisfying `keep`, on the same vertex set.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, usize, usize) -> bool) -> ColouredGraph {
        let kept: Vec<_> = self
            .colours
            .iter()
            .copied()
            .filter(|&(u, v, c)| keep(u, v, c))
            .collect();
        ColouredGraph::from_coloured_edges(self.n(), self.q, &kept)
            .expect("subset of a valid colouring")
    }

    /// Applies a colour permutation: colour `c` becomes `perm[c - 1]`.
    pub fn recoloured(&self, perm: &[usize]) -> Result<ColouredGraph> {
        let edges: Vec<_> = self
            .colours
            .iter()
            .map(|&(u, v, c)| (u, v, perm[c - 1]))
            .collect();
        ColouredGraph::from_coloured_edges(self.n(), self.q, &edges)
    }

    /// Checks that this colouring covers exactly the edges of `graph`.
    pub fn covers(&self, graph: &Graph) -> Result<()> {
        if graph.n() != self.n() {
            return Err(Error::precondition(format!(
                "colouring has {} vertices, graph has {}",
                self.n(),
                graph.n()
            )));
        }
        if let Some((u, v)) = graph.edges().find(|&(u, v)| !self.graph.has_edge(u, v)) {
            return Err(Error::Uncoloured(u, v));
        }
        if self.graph.m() != graph.m() {
            return Err(Error::precondition("colouring has edges outside the graph"));
        }
        Ok(())
    }

    /// Per-colour adjacency rows, indexed `[colour - 1][vertex]`.
    pub fn class_rows(&self) -> Vec<Vec<BitSet>> {
        let n = self.n();
        let mut rows = vec![vec![BitSet::new(n); n]; self.q];
        for &(u, v, c) in &self.colours {
            rows[c - 1][u].insert(v);
            rows[c - 1][v].insert(u);
        }
        rows
    }

    /// Largest degree inside any single colour class.
    pub fn max_class_degree(&self) -> usize {
        let mut deg = vec![vec![0usize; self.n()]; self.q];
        for &(u, v, c) in &self.colours {
            deg[c - 1][u] += 1;
            deg[c - 1][v] += 1;
        }
        deg.iter().flatten().copied().max().unwrap_or(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_partition_edges() {
        let k4 = Graph::complete(4);
        let c = ColouredGraph::from_fn(&k4, 3, |u, v| (u + v) % 3 + 1).unwrap();
        let total: usize = c.classes().iter().map(Graph::m).sum();
        assert_eq!(total, 6);
        assert_eq!(c.colour(1, 0), Some(2));
        assert_eq!(c.colour(0, 0), None);
        c.covers(&k4).unwrap();
    }

    #[test]
    fn rejects_bad_colours() {
        assert!(matches!(
            ColouredGraph::from_coloured_edges(3, 2, &[(0, 1, 3)]),
            Err(Error::ColourOutOfRange { .. })
        ));
        assert!(ColouredGraph::from_coloured_edges(3, 2, &[(0, 1, 0)]).is_err());
        assert!(ColouredGraph::from_coloured_edges(3, 0, &[]).is_err());
    }

    #[test]
    fn induced_and_recolour() {
        let c =
            ColouredGraph::from_coloured_edges(4, 2, &[(0, 1, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        let sub = c.induced(&[1, 2, 3]);
        assert_eq!(sub.coloured_edges(), &[(0, 1, 2), (1, 2, 1)]);
        let swapped = c.recoloured(&[2, 1]).unwrap();
        assert_eq!(swapped.colour(0, 1), Some(2));
        assert_eq!(c.max_class_degree(), 1);
    }
}
