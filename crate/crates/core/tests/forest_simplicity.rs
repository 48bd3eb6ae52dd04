use ramsey_simple::embed::contains_forest_copy;
use ramsey_simple::forest::{
    balanced_colouring, colour_g_minus_z, construct_szz, find_mono_forest, min_bipartition,
    random_colouring, ProofCase, DEFAULT_MAX_EDGES,
};
use ramsey_simple::format::{parse_szz, write_szz};
use ramsey_simple::verify::{is_monochromatic_embedding, mono_copy_scan};
use ramsey_simple::{Graph, Seed};

#[test]
fn bipartition_examples() {
    let b = min_bipartition(&Graph::star(3)).unwrap();
    assert_eq!((b.a_side.len(), b.b_side.len()), (1, 3));
    let b = min_bipartition(&Graph::path(4)).unwrap();
    assert_eq!((b.a_side.len(), b.b_side.len(), b.b_ge2.len()), (2, 2, 1));
    assert_eq!(
        min_bipartition(&Graph::matching(2)).unwrap().a_side.len(),
        2
    );
}

#[test]
fn construction_sizes() {
    let g = construct_szz(&Graph::path(4), 2, DEFAULT_MAX_EDGES).unwrap();
    assert_eq!(
        (g.r, g.s, g.t, g.graph.n(), g.graph.m()),
        (2, 32, 128, 162, 192)
    );
    let g = construct_szz(&Graph::path(2), 2, DEFAULT_MAX_EDGES).unwrap();
    assert_eq!((g.a, g.r, g.s, g.t), (1, 0, 4, 8));
    let g = construct_szz(&Graph::star(3), 3, DEFAULT_MAX_EDGES).unwrap();
    assert_eq!((g.a, g.r, g.s, g.t), (1, 0, 12, 108));
}

#[test]
fn szz_file_round_trip() {
    let g = construct_szz(&Graph::path(4), 2, DEFAULT_MAX_EDGES).unwrap();
    let (header, graph) = parse_szz(&write_szz(&g.header(), &g.graph)).unwrap();
    assert_eq!(header, g.header());
    assert_eq!(graph, g.graph);
}

#[test]
fn core_colouring_has_no_monochromatic_forest() {
    for (f, q) in [
        (Graph::path(4), 2),
        (Graph::path(5), 2),
        (Graph::matching(2), 3),
    ] {
        let g = construct_szz(&f, q, DEFAULT_MAX_EDGES).unwrap();
        let c = colour_g_minus_z(&g).unwrap();
        for colour in 1..=q {
            assert!(contains_forest_copy(&c.class(colour), &f)
                .unwrap()
                .is_none());
        }
    }
    // the (P_4, 2) classes are two stars K_{1,32}; the scan shares no code with the matcher
    let g = construct_szz(&Graph::path(4), 2, DEFAULT_MAX_EDGES).unwrap();
    let c = colour_g_minus_z(&g).unwrap();
    let core: Vec<usize> = (0..g.r + g.s).collect();
    assert!(mono_copy_scan(&c.induced(&core), &Graph::path(4)).is_none());
}

#[test]
fn monochromatic_forest_in_every_colouring() {
    let f = Graph::path(4);
    let g = construct_szz(&f, 2, DEFAULT_MAX_EDGES).unwrap();
    for k in 0..200u64 {
        let phi = random_colouring(&g, Seed(11).trial(k));
        let m = find_mono_forest(&g, &phi).unwrap();
        assert!(is_monochromatic_embedding(&phi, &f, &m.embedding, m.colour));
    }
    for k in 0..10u64 {
        let phi = balanced_colouring(&g, Seed(12).trial(k));
        let m = find_mono_forest(&g, &phi).unwrap();
        assert_eq!(m.case, ProofCase::Balanced);
        assert!(is_monochromatic_embedding(&phi, &f, &m.embedding, m.colour));
    }
}

#[test]
fn pendant_vertices_certify_degree_one() {
    for (f, q) in [
        (Graph::path(4), 2),
        (Graph::star(3), 3),
        (Graph::path(2), 2),
    ] {
        let g = construct_szz(&f, q, DEFAULT_MAX_EDGES).unwrap();
        assert_eq!(g.graph.min_degree(), 1);
        assert!(g.bipartition.b_ge2.len() < g.a);
    }
}
