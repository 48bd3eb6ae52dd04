use crate::bitset::BitSet;
use crate::embed::Embedding;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::verify::is_valid_embedding;

/// Tree components of `f` (isolated vertices dropped) largest first, ties by
/// smallest vertex; each as BFS order from its max-degree vertex (ties lowest
/// index) with the parent of every non-root vertex.
fn tree_orders(f: &Graph) -> Vec<Vec<(usize, Option<usize>)>> {
    let mut comps = f.components();
    comps.retain(|c| c.len() > 1);
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
    comps
        .into_iter()
        .map(|comp| {
            let root = *comp
                .iter()
                .max_by(|&&a, &&b| f.degree(a).cmp(&f.degree(b)).then(b.cmp(&a)))
                .expect("non-empty component");
            let mut seen = BitSet::new(f.n());
            seen.insert(root);
            let mut order = vec![(root, None)];
            let mut head = 0;
            while head < order.len() {
                let v = order[head].0;
                head += 1;
                for w in f.neighbours(v).iter() {
                    if !seen.contains(w) {
                        seen.insert(w);
                        order.push((w, Some(v)));
                    }
                }
            }
            order
        })
        .collect()
}

fn check_inputs(class: &Graph, subset: &[usize], f: &Graph) -> Result<BitSet> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    for &v in subset {
        class.check_vertex(v)?;
    }
    Ok(BitSet::from_iter_with_len(
        class.n(),
        subset.iter().copied(),
    ))
}

fn finish(class: &Graph, f: &Graph, mut pairs: Vec<(usize, usize)>) -> Result<Option<Embedding>> {
    pairs.sort_unstable();
    let e = Embedding { pairs };
    if !is_valid_embedding(class, f, &e) {
        return Err(Error::VerificationFailed(
            "greedy forest embedding is not a copy".into(),
        ));
    }
    Ok(Some(e))
}

/// Embeds `f` into `class[subset]` when that graph is a disjoint union of
/// cliques: trees go largest first into the clique with most unused vertices.
pub fn embed_forest_pigeonhole(
    class: &Graph,
    subset: &[usize],
    f: &Graph,
) -> Result<Option<Embedding>> {
    let allowed = check_inputs(class, subset, f)?;
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let mut placed = BitSet::new(class.n());
    for v in allowed.iter() {
        if placed.contains(v) {
            continue;
        }
        let mut clique = class.neighbours(v).clone();
        clique.intersect_with(&allowed);
        clique.insert(v);
        for w in clique.iter() {
            let mut nb = class.neighbours(w).clone();
            nb.intersect_with(&allowed);
            nb.insert(w);
            if nb != clique {
                return Err(Error::precondition(format!(
                    "colour class restricted to the subset is not a disjoint union of cliques (at vertex {w})"
                )));
            }
        }
        placed.union_with(&clique);
        cliques.push(clique.iter().collect());
    }

    let mut next_free = vec![0usize; cliques.len()];
    let mut pairs = Vec::with_capacity(f.n());
    for tree in tree_orders(f) {
        let best = (0..cliques.len()).max_by(|&a, &b| {
            let fa = cliques[a].len() - next_free[a];
            let fb = cliques[b].len() - next_free[b];
            fa.cmp(&fb).then(b.cmp(&a))
        });
        let Some(c) = best else { return Ok(None) };
        if cliques[c].len() - next_free[c] < tree.len() {
            return Ok(None);
        }
        for &(x, _) in &tree {
            pairs.push((x, cliques[c][next_free[c]]));
            next_free[c] += 1;
        }
    }
    finish(class, f, pairs)
}

/// Peels `class[subset]` down to its `threshold`-core (default: half the
/// average degree, rounded up) and then embeds `f` greedily tree by tree,
/// mapping each vertex to the first unused core neighbour of its parent's
/// image and trying roots in increasing order.
///
/// Greedy, so `None` does not prove absence; it is exact whenever the core
/// has minimum degree at least `v(f) - 1`.
pub fn embed_forest_peeling(
    class: &Graph,
    subset: &[usize],
    f: &Graph,
    threshold: Option<usize>,
) -> Result<Option<Embedding>> {
    let allowed = check_inputs(class, subset, f)?;
    let mut core = allowed.clone();
    let mut deg: Vec<usize> = (0..class.n())
        .map(|v| {
            if core.contains(v) {
                class.neighbours(v).intersection_count(&core)
            } else {
                0
            }
        })
        .collect();
    let size = core.count();
    let threshold = threshold.unwrap_or_else(|| {
        if size == 0 {
            0
        } else {
            let sum: usize = deg.iter().sum();
            // ceil(avg / 2) = ceil(sum / (2 size))
            sum.div_ceil(2 * size)
        }
    });
    let mut stack: Vec<usize> = core.iter().filter(|&v| deg[v] < threshold).collect();
    while let Some(v) = stack.pop() {
        if !core.contains(v) {
            continue;
        }
        core.remove(v);
        for w in class.neighbours(v).iter() {
            if core.contains(w) {
                deg[w] -= 1;
                if deg[w] + 1 == threshold {
                    stack.push(w);
                }
            }
        }
    }

    let mut free = core;
    let mut pairs = Vec::with_capacity(f.n());
    for tree in tree_orders(f) {
        let mut placed = None;
        for root in free.iter() {
            let mut image = vec![usize::MAX; f.n()];
            let mut used: Vec<usize> = Vec::with_capacity(tree.len());
            let mut local = free.clone();
            let mut ok = true;
            for &(x, parent) in &tree {
                let h = match parent {
                    None => Some(root),
                    Some(p) => {
                        let mut cand = class.neighbours(image[p]).clone();
                        cand.intersect_with(&local);
                        cand.first()
                    }
                };
                match h {
                    Some(h) => {
                        image[x] = h;
                        local.remove(h);
                        used.push(h);
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                placed = Some((
                    tree.iter().map(|&(x, _)| (x, image[x])).collect::<Vec<_>>(),
                    local,
                ));
                break;
            }
        }
        match placed {
            Some((tp, local)) => {
                pairs.extend(tp);
                free = local;
            }
            None => return Ok(None),
        }
    }
    finish(class, f, pairs)
}
