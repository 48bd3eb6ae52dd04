use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{active_pattern, arrows, is_minimal_ramsey, Budget};
use crate::analysis::next_combination;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::naive_contains;

/// Host orders above this make the permutation-based canonical form too slow.
const MAX_PROBE_ORDER: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeBudget {
    pub max_order: usize,
    /// Cap on distinct candidate hosts passed to the arrowing search.
    pub max_hosts: u64,
    pub arrow: Budget,
}

impl Default for ProbeBudget {
    fn default() -> Self {
        ProbeBudget {
            max_order: 6,
            max_hosts: 100_000,
            arrow: Budget::default(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbeVerdict {
    /// `q(delta(H)-1)+1`.
    pub target_degree: usize,
    pub found: bool,
    /// A minimal q-Ramsey host of minimum degree `target_degree`.
    pub witness: Option<Graph>,
    pub hosts_examined: u64,
    /// Every host up to `max_order` was examined without hitting `max_hosts`.
    pub exhausted: bool,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, left: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.is_empty() {
            out.push(cur.clone());
            return;
        }
        for i in 0..left.len() {
            let x = left.remove(i);
            cur.push(x);
            go(cur, left, out);
            cur.pop();
            left.insert(i, x);
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut (0..n).collect(), &mut out);
    out
}

/// Smallest edge bitmask over all relabellings.
fn canonical(edges: &[(usize, usize)], perms: &[Vec<usize>], index: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u64, |acc, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                acc | 1 << index[a][b]
            })
        })
        .min()
        .unwrap_or(0)
}

/// Searches hosts on at most `max_order` vertices, by order and then edge
/// count, for a minimal `q`-Ramsey graph for `h` whose minimum degree is
/// `q(delta(h)-1)+1`.
pub fn simplicity_probe_tiny(h: &Graph, q: usize, budget: &ProbeBudget) -> Result<ProbeVerdict> {
    let pattern = active_pattern(h)?;
    if q == 0 {
        return Err(Error::invalid("q must be at least 1"));
    }
    if budget.max_order > MAX_PROBE_ORDER {
        return Err(Error::invalid(format!(
            "max_order is capped at {MAX_PROBE_ORDER}"
        )));
    }
    let target = q * (pattern.min_degree() - 1) + 1;
    let mut examined = 0u64;
    for n in pattern.n().max(target + 1)..=budget.max_order {
        let perms = permutations(n);
        let mut index = vec![vec![0usize; n]; n];
        let mut pairs = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                index[u][v] = pairs.len();
                pairs.push((u, v));
            }
        }
        let min_edges = (n * target).div_ceil(2);
        let mut seen = HashSet::new();
        for m in min_edges..=pairs.len().min(budget.arrow.max_edges) {
            let mut combo: Vec<usize> = (0..m).collect();
            loop {
                let edges: Vec<(usize, usize)> = combo.iter().map(|&i| pairs[i]).collect();
                let mut deg = vec![0usize; n];
                for &(u, v) in &edges {
                    deg[u] += 1;
                    deg[v] += 1;
                }
                if deg.iter().min() == Some(&target)
                    && seen.insert(canonical(&edges, &perms, &index))
                {
                    let g = Graph::from_edges(n, &edges)?;
                    if naive_contains(&g, &pattern).is_some() {
                        if examined == budget.max_hosts {
                            return Ok(ProbeVerdict {
                                target_degree: target,
                                found: false,
                                witness: None,
                                hosts_examined: examined,
                                exhausted: false,
                            });
                        }
                        examined += 1;
                        if arrows(&g, &pattern, q, &budget.arrow)?.arrows
                            && is_minimal_ramsey(&g, &pattern, q, &budget.arrow)?.minimal
                        {
                            return Ok(ProbeVerdict {
                                target_degree: target,
                                found: true,
                                witness: Some(g),
                                hosts_examined: examined,
                                exhausted: false,
                            });
                        }
                    }
                }
                if m == 0 || !next_combination(&mut combo, pairs.len()) {
                    break;
                }
            }
        }
    }
    Ok(ProbeVerdict {
        target_degree: target,
        found: false,
        witness: None,
        hosts_examined: examined,
        exhausted: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_finds_star() {
        let v = simplicity_probe_tiny(&Graph::path(3), 2, &ProbeBudget::default()).unwrap();
        assert!(v.found);
        assert_eq!(v.target_degree, 1);
        let w = v.witness.unwrap();
        assert_eq!(w.min_degree(), 1);
        assert_eq!((w.n(), w.m()), (4, 3));
        assert_eq!(w.max_degree(), 3);
    }

    #[test]
    fn triangle_has_no_degree_three_witness() {
        let v = simplicity_probe_tiny(&Graph::complete(3), 2, &ProbeBudget::default()).unwrap();
        assert!(!v.found && v.exhausted);
        assert_eq!(v.target_degree, 3);
        // with one colour K_3 itself is the witness, so simplicity is lost going from q=1 to q=2
        let v = simplicity_probe_tiny(&Graph::complete(3), 1, &ProbeBudget::default()).unwrap();
        assert_eq!(v.witness, Some(Graph::complete(3)));
    }

    #[test]
    fn matching_finds_pendant_witness() {
        let v = simplicity_probe_tiny(&Graph::matching(2), 2, &ProbeBudget::default()).unwrap();
        let w = v.witness.unwrap();
        assert_eq!(w, Graph::matching(3));
        assert_eq!(w.min_degree(), 1);
    }

    #[test]
    fn canonical_form_is_label_free() {
        let perms = permutations(4);
        let mut index = vec![vec![0; 4]; 4];
        let mut k = 0;
        for u in 0..4 {
            for v in u + 1..4 {
                index[u][v] = k;
                k += 1;
            }
        }
        let a = canonical(&[(0, 1), (1, 2)], &perms, &index);
        let b = canonical(&[(2, 3), (0, 3)], &perms, &index);
        let c = canonical(&[(0, 1), (2, 3)], &perms, &index);
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_eq!(permutations(5).len(), 120);
    }
}
