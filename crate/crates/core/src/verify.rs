//! Independent checkers used to re-validate search results.
//!
//! Nothing here touches the bit-set matcher: hosts are copied into plain
//! boolean matrices and patterns are mapped by naive backtracking in vertex
//! order.

use crate::coloured::ColouredGraph;
use crate::embed::Embedding;
use crate::graph::Graph;

fn matrix(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

fn pattern_edges(pattern: &Graph) -> Vec<(usize, usize)> {
    pattern.edges().collect()
}

/// True iff `e` maps every non-isolated vertex of `pattern` injectively into
/// `host` and every pattern edge onto a host edge.
pub fn is_valid_embedding(host: &Graph, pattern: &Graph, e: &Embedding) -> bool {
    let adj = matrix(host.n(), host.edges());
    valid_in(&adj, pattern, e)
}

/// Like [`is_valid_embedding`], with all host edges required to carry `colour`.
pub fn is_monochromatic_embedding(
    host: &ColouredGraph,
    pattern: &Graph,
    e: &Embedding,
    colour: usize,
) -> bool {
    let adj = matrix(
        host.n(),
        host.coloured_edges()
            .iter()
            .filter(|&&(_, _, c)| c == colour)
            .map(|&(u, v, _)| (u, v)),
    );
    valid_in(&adj, pattern, e)
}

fn valid_in(adj: &[Vec<bool>], pattern: &Graph, e: &Embedding) -> bool {
    let n = adj.len();
    let mut image = vec![None; pattern.n()];
    let mut used = vec![false; n];
    for &(x, h) in &e.pairs {
        if x >= pattern.n() || h >= n || used[h] || image[x].is_some() {
            return false;
        }
        used[h] = true;
        image[x] = Some(h);
    }
    for x in 0..pattern.n() {
        if pattern.degree(x) > 0 && image[x].is_none() {
            return false;
        }
    }
    pattern_edges(pattern)
        .into_iter()
        .all(|(a, b)| match (image[a], image[b]) {
            (Some(u), Some(v)) => adj[u][v],
            _ => false,
        })
}

/// Brute-force search for a copy of `pattern` (isolated vertices ignored)
/// in the boolean matrix `adj`.
fn naive_copy(adj: &[Vec<bool>], pattern: &Graph) -> Option<Vec<(usize, usize)>> {
    let active: Vec<usize> = (0..pattern.n())
        .filter(|&x| pattern.degree(x) > 0)
        .collect();
    let n = adj.len();
    let mut image: Vec<usize> = Vec::with_capacity(active.len());
    let mut used = vec![false; n];

    fn go(
        adj: &[Vec<bool>],
        pattern: &Graph,
        active: &[usize],
        image: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let i = image.len();
        if i == active.len() {
            return true;
        }
        let x = active[i];
        for h in 0..adj.len() {
            if used[h] {
                continue;
            }
            let fits = (0..i).all(|j| !pattern.has_edge(x, active[j]) || adj[h][image[j]]);
            if !fits {
                continue;
            }
            used[h] = true;
            image.push(h);
            if go(adj, pattern, active, image, used) {
                return true;
            }
            image.pop();
            used[h] = false;
        }
        false
    }

    if active.len() > n {
        return None;
    }
    go(adj, pattern, &active, &mut image, &mut used)
        .then(|| active.into_iter().zip(image).collect())
}

/// A monochromatic copy found by [`mono_copy_scan`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoCopy {
    pub colour: usize,
    pub embedding: Embedding,
}

/// Scans every colour class of `coloured` for a copy of `pattern`.
/// Exponential; intended for certificates at small scale.
pub fn mono_copy_scan(coloured: &ColouredGraph, pattern: &Graph) -> Option<MonoCopy> {
    (1..=coloured.q()).find_map(|colour| {
        let adj = matrix(
            coloured.n(),
            coloured
                .coloured_edges()
                .iter()
                .filter(|&&(_, _, c)| c == colour)
                .map(|&(u, v, _)| (u, v)),
        );
        naive_copy(&adj, pattern).map(|pairs| MonoCopy {
            colour,
            embedding: Embedding { pairs },
        })
    })
}

/// Brute-force copy search in an uncoloured host.
pub fn naive_contains(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    let adj = matrix(host.n(), host.edges());
    naive_copy(&adj, pattern).map(|pairs| Embedding { pairs })
}
