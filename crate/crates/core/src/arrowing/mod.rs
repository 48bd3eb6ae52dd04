//! Exact decisions of `G -> (H)_q` by backtracking over edge colourings,
//! with minimality certificates and the neighbourhood tests built on them.
//!
//! Every H-free colouring returned by this module is re-checked with
//! [`crate::verify::mono_copy_scan`], which shares no code with the search.

mod minimal;
mod necessity;
mod probe;

pub use minimal::{is_minimal_ramsey, Deletion, MinimalityReport};
pub use necessity::{necessity_gamma, triangle_refuter, NecessityReport, TriangleRefutation};
pub use probe::{simplicity_probe_tiny, ProbeBudget, ProbeVerdict};

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::coloured::ColouredGraph;
use crate::embed::{Matcher, Pattern, GENERAL_PATTERN_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::mono_copy_scan;

/// Caps for one arrowing search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: u64,
    /// Wall-clock cap; `None` keeps the outcome independent of machine speed.
    pub max_millis: Option<u64>,
    pub max_edges: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: 200_000_000,
            max_millis: None,
            max_edges: 40,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArrowResult {
    pub arrows: bool,
    /// An H-free colouring when `arrows` is false.
    pub witness: Option<ColouredGraph>,
    pub stats: SearchStats,
}

/// `h` without isolated vertices; errors when nothing is left or the
/// pattern exceeds the general matcher's cap.
pub(crate) fn active_pattern(h: &Graph) -> Result<Graph> {
    let (stripped, _) = h.strip_isolated();
    if stripped.m() == 0 {
        return Err(Error::invalid("H needs at least one edge"));
    }
    if stripped.n() > GENERAL_PATTERN_CAP {
        return Err(Error::invalid(format!(
            "H has {} non-isolated vertices; at most {GENERAL_PATTERN_CAP} are supported",
            stripped.n()
        )));
    }
    Ok(stripped)
}

struct Search<'a> {
    n: usize,
    q: usize,
    edges: Vec<(usize, usize)>,
    /// One pattern per oriented edge `(x, y)` of H, starting with `x, y`.
    anchored: Vec<Pattern>,
    rows: Vec<Vec<BitSet>>,
    assigned: Vec<usize>,
    budget: &'a Budget,
    nodes: u64,
    start: Instant,
}

impl Search<'_> {
    fn creates_copy(&self, colour: usize, u: usize, v: usize) -> bool {
        let rows = &self.rows[colour];
        self.anchored
            .iter()
            .any(|p| Matcher::new(rows, None, p).run(&[u, v]).is_some())
    }

    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        let over_nodes = self.nodes > self.budget.max_nodes;
        let over_time = self.nodes % 1024 == 0
            && self
                .budget
                .max_millis
                .is_some_and(|cap| self.start.elapsed().as_millis() as u64 > cap);
        if over_nodes || over_time {
            return Err(Error::BudgetExceeded {
                nodes: self.nodes,
                millis: self.start.elapsed().as_millis() as u64,
                reason: if over_nodes { "node cap" } else { "time cap" }.into(),
            });
        }
        Ok(())
    }

    /// Colours edge `i` onwards; `used` is the number of colours already in
    /// play (unused colours are interchangeable, so only one is tried).
    fn go(&mut self, i: usize, used: usize) -> Result<bool> {
        if i == self.edges.len() {
            return Ok(true);
        }
        self.tick()?;
        let (u, v) = self.edges[i];
        let limit = (used + 1).min(self.q);
        let mut order: Vec<usize> = (0..limit).collect();
        // fewest same-coloured edges at u and v first
        order.sort_by_key(|&c| (self.rows[c][u].count() + self.rows[c][v].count(), c));
        for c in order {
            self.rows[c][u].insert(v);
            self.rows[c][v].insert(u);
            if !self.creates_copy(c, u, v) {
                self.assigned[i] = c;
                if self.go(i + 1, used.max(c + 1))? {
                    return Ok(true);
                }
            }
            self.rows[c][u].remove(v);
            self.rows[c][v].remove(u);
        }
        Ok(false)
    }
}

/// Decides whether every `q`-colouring of `g` has a monochromatic `h`.
pub fn arrows(g: &Graph, h: &Graph, q: usize, budget: &Budget) -> Result<ArrowResult> {
    if q == 0 {
        return Err(Error::invalid("q must be at least 1"));
    }
    let pattern = active_pattern(h)?;
    if g.m() > budget.max_edges {
        return Err(Error::BudgetExceeded {
            nodes: 0,
            millis: 0,
            reason: format!("host has {} edges, cap is {}", g.m(), budget.max_edges),
        });
    }
    let start = Instant::now();
    let n = g.n();
    let degrees = g.degrees();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.sort_by_key(|&(u, v)| (std::cmp::Reverse(degrees[u] + degrees[v]), u, v));
    let anchored = pattern
        .edges()
        .flat_map(|(x, y)| [[x, y], [y, x]])
        .map(|s| Pattern::general(&pattern, &s))
        .collect();
    let mut search = Search {
        n,
        q,
        assigned: vec![0; edges.len()],
        edges,
        anchored,
        rows: vec![vec![BitSet::new(n); n]; q],
        budget,
        nodes: 0,
        start,
    };
    let found = search.go(0, 0)?;
    let stats = SearchStats {
        nodes: search.nodes,
        millis: start.elapsed().as_millis() as u64,
    };
    if !found {
        return Ok(ArrowResult {
            arrows: true,
            witness: None,
            stats,
        });
    }
    let coloured: Vec<(usize, usize, usize)> = search
        .edges
        .iter()
        .zip(&search.assigned)
        .map(|(&(u, v), &c)| (u, v, c + 1))
        .collect();
    let witness = ColouredGraph::from_coloured_edges(search.n, q, &coloured)?;
    if let Some(hit) = mono_copy_scan(&witness, &pattern) {
        return Err(Error::VerificationFailed(format!(
            "search returned a colouring with a colour-{} copy of H",
            hit.colour
        )));
    }
    Ok(ArrowResult {
        arrows: false,
        witness: Some(witness),
        stats,
    })
}
