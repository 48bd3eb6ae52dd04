use ramsey_simple::arrowing::{
    arrows, is_minimal_ramsey, necessity_gamma, simplicity_probe_tiny, triangle_refuter, Budget,
    ProbeBudget,
};
use ramsey_simple::gamma::{build_random_gamma, check_cover_condition, CoverMode};
use ramsey_simple::verify::mono_copy_scan;
use ramsey_simple::{ColouredGraph, Graph, Seed};

#[test]
fn arrowing_examples() {
    let b = Budget::default();
    let k3 = Graph::complete(3);
    assert!(arrows(&Graph::complete(6), &k3, 2, &b).unwrap().arrows);
    let r = arrows(&Graph::complete(5), &k3, 2, &b).unwrap();
    assert!(!r.arrows);
    assert!(mono_copy_scan(&r.witness.unwrap(), &k3).is_none());
    assert!(
        arrows(&Graph::star(3), &Graph::path(3), 2, &b)
            .unwrap()
            .arrows
    );
}

#[test]
fn minimality_examples() {
    let b = Budget::default();
    let k3 = Graph::complete(3);
    let r = is_minimal_ramsey(&Graph::complete(6), &k3, 2, &b).unwrap();
    assert!(r.minimal);
    let r = is_minimal_ramsey(&Graph::star(3), &Graph::path(3), 2, &b).unwrap();
    assert!(r.minimal);
    // the simplicity bound q(delta(P_3) - 1) + 1 = 1 is attained
    assert_eq!(
        Graph::star(3).min_degree(),
        2 * (Graph::path(3).min_degree() - 1) + 1
    );
    let r = is_minimal_ramsey(&Graph::complete(7), &k3, 2, &b).unwrap();
    assert!(r.is_ramsey && !r.minimal);
}

#[test]
fn necessity_examples() {
    let b = Budget::default();
    let k3 = Graph::complete(3);
    // K_4: w has degree 3 = 2(2-1)+1, and G - w = K_3 has a triangle-free colouring
    let r = necessity_gamma(&Graph::complete(4), &k3, 2, 0, None, &b).unwrap();
    assert_eq!(r.gamma.n(), 3);
    assert!(!r.condition_holds && r.violation.is_some());
    let r = necessity_gamma(&Graph::star(3), &Graph::path(3), 2, 1, None, &b);
    if let Ok(r) = r {
        assert!(r.condition_holds);
    }
    assert!(necessity_gamma(&Graph::complete(6), &k3, 2, 0, None, &b).is_err());
}

#[test]
fn necessity_agrees_with_cover_check() {
    for t in 0..30u64 {
        let gamma = build_random_gamma(2, 2, Seed(40).trial(t)).unwrap();
        let exhaustive =
            check_cover_condition(&gamma, &Graph::path(2), 2, CoverMode::Exhaustive).unwrap();
        // host: Gamma's underlying graph plus an apex w joined to all of it
        let n = gamma.n();
        let nbrs: Vec<usize> = (0..n).collect();
        let host = gamma.graph().with_vertex(&nbrs).unwrap();
        let c = ColouredGraph::from_coloured_edges(n + 1, 2, gamma.coloured_edges()).unwrap();
        let h = Graph::complete(3);
        if mono_copy_scan(&c, &h).is_some() {
            continue;
        }
        let r = necessity_gamma(&host, &h, 2, n, Some(&c), &Budget::default()).unwrap();
        assert_eq!(r.condition_holds, exhaustive.cover_ok, "t={t}");
    }
}

#[test]
fn triangle_refuter_examples() {
    // C_4 (K_4 minus a perfect matching) plus w joined to three of its vertices
    let g =
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2)]).unwrap();
    let k3 = Graph::complete(3);
    for mask in 0u32..16 {
        let edges: Vec<(usize, usize, usize)> = [(0, 1), (1, 2), (2, 3), (0, 3)]
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, (mask >> i & 1) as usize + 1))
            .collect();
        let c = ColouredGraph::from_coloured_edges(5, 2, &edges).unwrap();
        let r = triangle_refuter(&g, 4, &k3, &c).unwrap();
        assert!(r.extension.covers(&g).is_ok());
        assert!(mono_copy_scan(&r.extension, &k3).is_none());
    }
    let star = Graph::star(3);
    let empty = ColouredGraph::from_coloured_edges(4, 2, &[]).unwrap();
    let r = triangle_refuter(&star, 0, &k3, &empty).unwrap();
    assert!(mono_copy_scan(&r.extension, &k3).is_none());
    assert!(triangle_refuter(&star, 0, &Graph::path(3), &empty).is_err());
}

#[test]
fn probe_examples() {
    let b = ProbeBudget::default();
    let v = simplicity_probe_tiny(&Graph::path(3), 2, &b).unwrap();
    assert_eq!(v.witness.unwrap().min_degree(), 1);
    let v = simplicity_probe_tiny(&Graph::complete(3), 2, &b).unwrap();
    assert!(!v.found);
    let v = simplicity_probe_tiny(&Graph::matching(2), 2, &b).unwrap();
    assert_eq!(v.witness.unwrap().min_degree(), 1);
}
