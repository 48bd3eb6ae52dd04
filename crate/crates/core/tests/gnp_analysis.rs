use ramsey_simple::analysis::{
    chernoff_large, chernoff_tail, dense_subset_edge_check, monte_carlo, neighbourhood_profile,
    well_behaved, wilson_interval, Property, Side, SubsetMode, Verdict, WellBehavedConfig,
};
use ramsey_simple::gnp::sample_gnp;
use ramsey_simple::{Graph, Seed};

#[test]
fn profile_of_pendant_triangle() {
    let h = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (3, 0)]).unwrap();
    let p = neighbourhood_profile(&h).unwrap();
    assert_eq!((p.u, p.delta, p.unique_min), (3, 1, true));
    assert_eq!((p.f.n(), p.e_f, p.lambda_f, p.max_degree_f), (1, 0, 1, 0));
    assert!(
        !neighbourhood_profile(&Graph::complete(4))
            .unwrap()
            .unique_min
    );
}

#[test]
fn profile_matches_naive_recount() {
    let h = sample_gnp(300, 0.2, Seed(1)).unwrap();
    let p = neighbourhood_profile(&h).unwrap();
    let degrees: Vec<usize> = (0..300)
        .map(|v| (0..300).filter(|&w| h.has_edge(v, w)).count())
        .collect();
    let delta = *degrees.iter().min().unwrap();
    assert_eq!(p.delta, delta);
    assert_eq!(degrees[p.u], delta);
    assert_eq!(
        p.unique_min,
        degrees.iter().filter(|&&d| d == delta).count() == 1
    );
    let nbrs: Vec<usize> = (0..300).filter(|&w| h.has_edge(p.u, w)).collect();
    assert_eq!(p.neighbourhood, nbrs);
    let mut e_f = 0;
    let mut max_deg = 0;
    for &a in &nbrs {
        let d = nbrs.iter().filter(|&&b| h.has_edge(a, b)).count();
        max_deg = max_deg.max(d);
        e_f += d;
    }
    assert_eq!(p.e_f, e_f / 2);
    assert_eq!(p.max_degree_f, max_deg);
    // largest component of F by flood fill over the neighbourhood
    let mut seen = vec![false; nbrs.len()];
    let mut largest = 0;
    for s in 0..nbrs.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut stack = vec![s];
        let mut size = 0;
        while let Some(i) = stack.pop() {
            size += 1;
            for j in 0..nbrs.len() {
                if !seen[j] && h.has_edge(nbrs[i], nbrs[j]) {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        largest = largest.max(size);
    }
    assert_eq!(p.lambda_f, largest);
    if p.e_f > 0 {
        assert!(p.max_degree_f < p.lambda_f && p.lambda_f <= p.f.n());
    }
}

#[test]
fn well_behaved_small_examples() {
    let cfg = WellBehavedConfig::default();
    assert!(!well_behaved(&Graph::cycle(5), &cfg).unwrap().w1.ok);
    assert!(
        !well_behaved(&Graph::complete(4).without_edge(0, 1), &cfg)
            .unwrap()
            .w1
            .ok
    );
}

/// G(200, 0.3) is too dense at this size for bounded codegrees: the pinned
/// sample fails exactly at the codegree property, with a genuine witness.
#[test]
fn pinned_gnp_200_codegree_witness() {
    let h = sample_gnp(200, 0.3, Seed(1)).unwrap();
    let r = well_behaved(
        &h,
        &WellBehavedConfig {
            seed: Seed(1),
            ..WellBehavedConfig::default()
        },
    )
    .unwrap();
    assert!(!r.overall);
    assert!(!r.w2.ok);
    let (u, v) = r.w2.pair.unwrap();
    let recount = (0..200)
        .filter(|&w| h.has_edge(u, w) && h.has_edge(v, w))
        .count();
    assert_eq!(Some(recount), r.w2.codegree);
    assert!(2 * recount > h.min_degree());
    assert!(r.w3.ok);
    assert!(r.w4.ok);
    assert_eq!(r.w4.mode, Verdict::Sampled);
}

#[test]
fn forest_estimate_at_half_over_n() {
    let r = monte_carlo(Property::IsForest, 1000, 0.0005, 200, Seed(1)).unwrap();
    assert!(r.estimate >= 0.95, "{r:?}");
}

/// Ten times the trials of the example above; the forest probability here is
/// about exp(-0.034) = 0.966.
#[test]
fn forest_estimate_at_half_over_n_large_sample() {
    let r = monte_carlo(Property::IsForest, 1000, 0.0005, 2000, Seed(1)).unwrap();
    assert!(r.estimate >= 0.95, "{r:?}");
}

#[test]
fn triangle_cover_estimate() {
    let r = monte_carlo(Property::EveryEdgeInTriangle, 500, 0.5, 100, Seed(1)).unwrap();
    assert_eq!(r.estimate, 1.0);
}

#[test]
fn empty_neighbourhood_estimate() {
    let p = 2000f64.powf(-0.75);
    let r = monte_carlo("e(F)=0".parse().unwrap(), 2000, p, 100, Seed(1)).unwrap();
    assert!(r.estimate >= 0.9, "{r:?}");
}

#[test]
fn monte_carlo_is_deterministic() {
    let a = monte_carlo(Property::UniqueMinDegree, 200, 0.1, 40, Seed(5)).unwrap();
    let b = monte_carlo(Property::UniqueMinDegree, 200, 0.1, 40, Seed(5)).unwrap();
    assert_eq!(a, b);
    let (lo, hi) = wilson_interval(a.successes, a.trials);
    assert_eq!((lo, hi), (a.lo, a.hi));
    assert!("no_such_property".parse::<Property>().is_err());
}

#[test]
fn chernoff_examples_and_monotonicity() {
    assert!((chernoff_tail(300.0, 0.1, Side::Lower).unwrap() - (-1.5f64).exp()).abs() < 1e-15);
    assert!((chernoff_tail(300.0, 0.1, Side::Upper).unwrap() - (-1.0f64).exp()).abs() < 1e-15);
    assert_eq!(chernoff_large(1.0, 7.0).unwrap(), (-7.0f64).exp());
    assert!(chernoff_large(1.0, 6.9).is_err());
    for side in [Side::Lower, Side::Upper] {
        for i in 1..20 {
            let mu = i as f64 * 10.0;
            let eps = i as f64 / 25.0;
            assert!(
                chernoff_tail(mu + 10.0, eps, side).unwrap()
                    < chernoff_tail(mu, eps, side).unwrap()
            );
            assert!(
                chernoff_tail(mu, eps + 0.02, side).unwrap()
                    < chernoff_tail(mu, eps, side).unwrap()
            );
        }
    }
}

#[test]
fn dense_subsets() {
    let k = dense_subset_edge_check(&Graph::complete(30), 0.5, 10, Seed(0)).unwrap();
    assert!(k.passed && k.min_ratio >= 0.25);
    let e = dense_subset_edge_check(&Graph::empty(30), 0.5, 10, Seed(0)).unwrap();
    assert!(!e.passed && e.min_ratio == 0.0);
    let h = sample_gnp(500, 0.2, Seed(2)).unwrap();
    let r = dense_subset_edge_check(&h, 0.2, 10_000, Seed(3)).unwrap();
    assert_eq!(r.mode, SubsetMode::FullGraph);
    assert!(r.passed);
}
