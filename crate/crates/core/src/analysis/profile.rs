use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// The minimum-degree vertex `u` of `H` and the graph `F = H[N(u)]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NeighbourhoodProfile {
    pub u: usize,
    pub unique_min: bool,
    pub delta: usize,
    /// Vertex `i` of `F` is `neighbourhood[i]` in `H`.
    pub neighbourhood: Vec<usize>,
    #[serde(rename = "F")]
    pub f: Graph,
    #[serde(rename = "lambda_F")]
    pub lambda_f: usize,
    #[serde(rename = "Delta_F")]
    pub max_degree_f: usize,
    #[serde(rename = "e_F")]
    pub e_f: usize,
    #[serde(rename = "is_forest_F")]
    pub is_forest_f: bool,
}

/// Profiles the lowest-index vertex of minimum degree.
pub fn neighbourhood_profile(h: &Graph) -> Result<NeighbourhoodProfile> {
    if h.n() == 0 {
        return Err(Error::invalid("profile needs at least one vertex"));
    }
    let degrees = h.degrees();
    let delta = *degrees.iter().min().expect("n >= 1");
    let u = degrees
        .iter()
        .position(|&d| d == delta)
        .expect("minimum exists");
    let unique_min = degrees.iter().filter(|&&d| d == delta).count() == 1;
    let neighbourhood: Vec<usize> = h.neighbours(u).iter().collect();
    let f = h.induced(&neighbourhood);
    Ok(NeighbourhoodProfile {
        u,
        unique_min,
        delta,
        lambda_f: f.largest_component_order(),
        max_degree_f: f.max_degree(),
        e_f: f.m(),
        is_forest_f: f.is_forest(),
        neighbourhood,
        f,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seed::Seed;

    #[test]
    fn pendant_triangle() {
        // triangle {0,1,2} with pendant 3 attached to 0
        let h = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (0, 3)]).unwrap();
        let p = neighbourhood_profile(&h).unwrap();
        assert_eq!((p.u, p.delta, p.unique_min), (3, 1, true));
        assert_eq!((p.f.n(), p.e_f, p.lambda_f, p.max_degree_f), (1, 0, 1, 0));
    }

    #[test]
    fn regular_graph_is_tied() {
        let p = neighbourhood_profile(&Graph::complete(4)).unwrap();
        assert!(!p.unique_min);
        assert_eq!(p.u, 0);
        assert_eq!(p.e_f, 3);
    }

    #[test]
    fn isolated_vertex() {
        let p = neighbourhood_profile(&Graph::empty(3)).unwrap();
        assert_eq!((p.delta, p.lambda_f, p.f.n()), (0, 0, 0));
        assert!(neighbourhood_profile(&Graph::empty(0)).is_err());
    }

    #[test]
    fn matches_naive_recount() {
        let h = crate::gnp::sample_gnp(300, 0.2, Seed(2024)).unwrap();
        let p = neighbourhood_profile(&h).unwrap();
        // naive recount from adjacency lists
        let adj: Vec<Vec<usize>> = (0..300).map(|v| h.neighbours(v).iter().collect()).collect();
        let min = adj.iter().map(Vec::len).min().unwrap();
        assert_eq!(p.delta, min);
        assert_eq!(p.u, adj.iter().position(|a| a.len() == min).unwrap());
        let nu = &adj[p.u];
        let mut e = 0;
        let mut maxd = 0;
        for &a in nu {
            let d = nu.iter().filter(|&&b| adj[a].contains(&b)).count();
            maxd = maxd.max(d);
            e += d;
        }
        assert_eq!(p.e_f, e / 2);
        assert_eq!(p.max_degree_f, maxd);
        // largest component by repeated flood fill over the raw lists
        let mut best = 0;
        let mut seen = vec![false; nu.len()];
        for s in 0..nu.len() {
            if seen[s] {
                continue;
            }
            let mut stack = vec![s];
            seen[s] = true;
            let mut size = 0;
            while let Some(i) = stack.pop() {
                size += 1;
                for j in 0..nu.len() {
                    if !seen[j] && adj[nu[i]].contains(&nu[j]) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            best = best.max(size);
        }
        assert_eq!(p.lambda_f, best);
        if p.e_f > 0 {
            assert!(p.max_degree_f + 1 <= p.lambda_f && p.lambda_f <= p.f.n());
        }
        let avg2 = 2 * h.m();
        assert!(p.delta * 300 <= avg2 && avg2 <= h.max_degree() * 300);
    }
}
