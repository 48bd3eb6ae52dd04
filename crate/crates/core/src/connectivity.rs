//! Vertex connectivity via unit-capacity max flow on the split graph.

use std::collections::VecDeque;

use crate::graph::Graph;

struct FlowNet {
    head: Vec<usize>,
    next: Vec<usize>,
    to: Vec<usize>,
    cap: Vec<u32>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: vec![usize::MAX; nodes],
            next: Vec::new(),
            to: Vec::new(),
            cap: Vec::new(),
        }
    }

    fn arc(&mut self, a: usize, b: usize, c: u32) {
        for (x, y, cc) in [(a, b, c), (b, a, 0)] {
            self.to.push(y);
            self.cap.push(cc);
            self.next.push(self.head[x]);
            self.head[x] = self.to.len() - 1;
        }
    }

    /// BFS over positive-capacity arcs; returns parent arcs.
    fn bfs(&self, s: usize) -> Vec<usize> {
        let mut parent = vec![usize::MAX; self.head.len()];
        let mut seen = vec![false; self.head.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            let mut e = self.head[x];
            while e != usize::MAX {
                let y = self.to[e];
                if self.cap[e] > 0 && !seen[y] {
                    seen[y] = true;
                    parent[y] = e;
                    queue.push_back(y);
                }
                e = self.next[e];
            }
        }
        parent
    }
}

/// Local vertex connectivity between non-adjacent `s` and `t`, capped at
/// `limit`. When the value is below `limit`, also returns a minimum
/// separating vertex set.
fn local_connectivity(g: &Graph, s: usize, t: usize, limit: usize) -> (usize, Option<Vec<usize>>) {
    let n = g.n();
    let inf = (limit + 1) as u32;
    // v_in = 2v, v_out = 2v + 1
    let mut net = FlowNet::new(2 * n);
    for v in 0..n {
        let c = if v == s || v == t { inf } else { 1 };
        net.arc(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.arc(2 * u + 1, 2 * v, inf);
        net.arc(2 * v + 1, 2 * u, inf);
    }
    let source = 2 * s + 1;
    let sink = 2 * t;
    let mut flow = 0;
    while flow < limit {
        let parent = net.bfs(source);
        if parent[sink] == usize::MAX {
            break;
        }
        let mut x = sink;
        while x != source {
            let e = parent[x];
            net.cap[e] -= 1;
            net.cap[e ^ 1] += 1;
            x = net.to[e ^ 1];
        }
        flow += 1;
    }
    if flow >= limit {
        return (flow, None);
    }
    let parent = net.bfs(source);
    let reach = |x: usize| x == source || parent[x] != usize::MAX;
    let cut = (0..n)
        .filter(|&v| v != s && v != t && reach(2 * v) && !reach(2 * v + 1))
        .collect();
    (flow, Some(cut))
}

/// A vertex cut of size `< k`, if one exists (Even's pair scheme: only pairs
/// involving one of the first `k` vertices need checking).
pub fn small_vertex_cut(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    for i in 0..k.min(n) {
        for j in i + 1..n {
            // k common neighbours already give k disjoint paths
            if g.has_edge(i, j) || g.neighbours(i).intersection_count(g.neighbours(j)) >= k {
                continue;
            }
            if let (_, Some(cut)) = local_connectivity(g, i, j, k) {
                return Some(cut);
            }
        }
    }
    None
}

/// True iff `g` has more than `k` vertices and no vertex cut of size `< k`.
pub fn k_connected(g: &Graph, k: usize) -> bool {
    g.n() > k && small_vertex_cut(g, k).is_none()
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::seed::Seed;

    /// Exhaustive oracle: tries every vertex subset of size `< k`.
    pub(crate) fn brute_k_connected(g: &Graph, k: usize) -> bool {
        let n = g.n();
        if n <= k {
            return false;
        }
        for mask in 0u32..(1 << n) {
            if (mask.count_ones() as usize) >= k {
                continue;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 0).collect();
            if g.induced(&rest).components().len() > 1 {
                return false;
            }
        }
        true
    }

    #[test]
    fn named_examples() {
        assert!(k_connected(&Graph::complete(4), 3));
        assert!(!k_connected(&Graph::cycle(5), 3));
        assert!(k_connected(&Graph::petersen(), 3));
        assert!(brute_k_connected(&Graph::petersen(), 3));
        assert!(!k_connected(&Graph::petersen(), 4));
        assert!(!k_connected(&Graph::complete(3), 3));
    }

    #[test]
    fn cut_witness_separates() {
        let g = Graph::cycle(6);
        let cut = small_vertex_cut(&g, 3).unwrap();
        assert!(cut.len() < 3);
        let rest: Vec<usize> = (0..6).filter(|v| !cut.contains(v)).collect();
        assert!(g.induced(&rest).components().len() > 1);
    }

    #[test]
    fn agrees_with_brute_force() {
        for t in 0..150u64 {
            let n = 2 + (t as usize % 9);
            let p = 0.3 + 0.5 * ((t % 7) as f64 / 7.0);
            let g = crate::gnp::sample_gnp(n, p, Seed(900).trial(t)).unwrap();
            for k in 1..=3 {
                assert_eq!(
                    k_connected(&g, k),
                    brute_k_connected(&g, k),
                    "t={t} k={k} {g:?}"
                );
            }
        }
    }
}
