use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{arrows, Budget};
use crate::coloured::ColouredGraph;
use crate::error::Result;
use crate::graph::Graph;

/// Outcome of deleting one edge `(u, v)` or one vertex `(v, v)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Deletion {
    pub removed: (usize, usize),
    pub arrows: bool,
    pub witness: Option<ColouredGraph>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MinimalityReport {
    pub is_ramsey: bool,
    /// `is_ramsey` and no single edge or vertex deletion still arrows.
    pub minimal: bool,
    pub edge_deletions: Vec<Deletion>,
    /// Deleted vertices keep their label and become isolated.
    pub vertex_deletions: Vec<Deletion>,
    pub nodes: u64,
}

/// Checks `g -> (h)_q` and then every single edge and vertex deletion.
///
/// A vertex deletion can only still arrow when every edge deletion at that
/// vertex does, or when the vertex is isolated.
pub fn is_minimal_ramsey(
    g: &Graph,
    h: &Graph,
    q: usize,
    budget: &Budget,
) -> Result<MinimalityReport> {
    let full = arrows(g, h, q, budget)?;
    if !full.arrows {
        return Ok(MinimalityReport {
            is_ramsey: false,
            minimal: false,
            edge_deletions: Vec::new(),
            vertex_deletions: Vec::new(),
            nodes: full.stats.nodes,
        });
    }
    let run = |removed: (usize, usize), smaller: Graph| -> Result<(Deletion, u64)> {
        let r = arrows(&smaller, h, q, budget)?;
        Ok((
            Deletion {
                removed,
                arrows: r.arrows,
                witness: r.witness,
            },
            r.stats.nodes,
        ))
    };
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let edge_results: Vec<(Deletion, u64)> = edges
        .par_iter()
        .map(|&(u, v)| run((u, v), g.without_edge(u, v)))
        .collect::<Result<_>>()?;
    let vertex_results: Vec<(Deletion, u64)> = (0..g.n())
        .into_par_iter()
        .map(|v| run((v, v), g.isolate_vertex(v)))
        .collect::<Result<_>>()?;
    let nodes = full.stats.nodes
        + edge_results
            .iter()
            .chain(&vertex_results)
            .map(|r| r.1)
            .sum::<u64>();
    let edge_deletions: Vec<Deletion> = edge_results.into_iter().map(|r| r.0).collect();
    let vertex_deletions: Vec<Deletion> = vertex_results.into_iter().map(|r| r.0).collect();
    let minimal = edge_deletions
        .iter()
        .chain(&vertex_deletions)
        .all(|d| !d.arrows);
    Ok(MinimalityReport {
        is_ramsey: true,
        minimal,
        edge_deletions,
        vertex_deletions,
        nodes,
    })
}
