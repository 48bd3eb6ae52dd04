use ramsey_simple::analysis::neighbourhood_profile;
use ramsey_simple::bounds::{
    corollary_curves, kogan_bound_ceiling, kogan_sparse_set, parse_p_grid, qtilde_bounds,
    upper_from_edges, upper_from_max_degree, Bound, BoundsConfig, CurveConfig, KoganConfig, Regime,
};
use ramsey_simple::gnp::sample_gnp;
use ramsey_simple::{Graph, Seed};

#[test]
fn upper_bound_arithmetic() {
    assert_eq!(upper_from_edges(25, 2), Bound::Finite(150));
    assert_eq!(upper_from_max_degree(25, 1), Bound::Finite(24));
    assert_eq!(upper_from_edges(25, 0), Bound::Infinite);
    assert_eq!(upper_from_max_degree(25, 0), Bound::Infinite);
}

#[test]
fn bounds_on_sampled_profiles() {
    let n = 3000;
    let p = (n as f64).powf(-0.6);
    let mut applicable = 0;
    for k in 0..20u64 {
        let h = sample_gnp(n, p, Seed(1).trial(k)).unwrap();
        let profile = neighbourhood_profile(&h).unwrap();
        let Ok(r) = qtilde_bounds(&profile, n, &BoundsConfig::default()) else {
            assert!(!profile.unique_min);
            continue;
        };
        if r.consistency_applies() {
            applicable += 1;
            assert!(r.lower <= r.upper, "{r:?}");
        }
        if r.e_f == 0 {
            assert!(r.simple_for_all_q);
        }
    }
    assert!(applicable > 0);
}

#[test]
fn curves_example_points() {
    let n = 1_000_000u64;
    let rows = corollary_curves(n, &[(n as f64).powf(-0.45)], &CurveConfig::default()).unwrap();
    assert_eq!(rows[0].regime, Regime::D);
    let grid = parse_p_grid("geometric:1e-4:1e-1:50").unwrap();
    let rows = corollary_curves(n, &grid, &CurveConfig::default()).unwrap();
    assert_eq!(rows.len(), 50);
    assert!(rows.iter().any(|r| r.regime == Regime::A));
}

#[test]
fn kogan_examples() {
    let cfg = KoganConfig::default();
    let r = kogan_sparse_set(&Graph::cycle(5), 1, &cfg).unwrap();
    assert!(r.achieved >= 3 && r.max_degree_in_set <= 1);
    let r = kogan_sparse_set(&Graph::complete(4), 1, &cfg).unwrap();
    assert_eq!(kogan_bound_ceiling(&Graph::complete(4), 1), 2);
    assert!(r.achieved >= 2);
    assert_eq!(
        kogan_sparse_set(&Graph::empty(7), 0, &cfg)
            .unwrap()
            .achieved,
        7
    );
}

#[test]
fn kogan_guarantee_at_desk_scale() {
    for t in 0..60u64 {
        let n = 4 + (t % 9) as usize;
        let g = sample_gnp(n, 0.5, Seed(70).trial(t)).unwrap();
        for k in 1..=2 {
            let r = kogan_sparse_set(&g, k, &KoganConfig::default()).unwrap();
            assert!(r.exhaustive && r.attains_bound, "t={t} k={k}");
        }
    }
}
