mod common;

use common::*;
use proptest::prelude::*;
use qsrgraph::catalog::{build_g1, build_g2, build_h8, complete_bipartite, cycle};
use qsrgraph::qsr::{analyze, check_counting_identities, t_profile, QsrParams};
use qsrgraph::{matches, Graph, VertexSet};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn closed_neighbourhood(g: &Graph, u: usize) -> VertexSet {
    g.row(u) | VertexSet::singleton(u)
}

#[test]
fn witnesses_cut_twelve_edges_at_every_vertex() {
    for g in [build_g1(), build_g2()] {
        for u in 0..g.order() {
            let outside = g.vertices() - closed_neighbourhood(&g, u);
            assert_eq!(g.cut_size(g.row(u), outside).unwrap(), 12);
        }
    }
}

#[test]
fn witnesses_have_diameter_two() {
    for g in [build_g1(), build_g2()] {
        for u in 0..g.order() {
            let reach = g.row(u).iter().fold(closed_neighbourhood(&g, u), |acc, v| acc | g.row(v));
            assert_eq!(reach, g.vertices());
        }
    }
}

#[test]
fn grade_one_means_strongly_regular() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = vec![cycle(5), complete_bipartite(4, 4), complete_bipartite(3, 3)];
    for _ in 0..300 {
        let n = 4 + rand::Rng::gen_range(&mut rng, 0..7);
        let k = rand::Rng::gen_range(&mut rng, 1..n);
        if n * k % 2 == 0 {
            graphs.push(random_regular(&mut rng, n, k));
        }
    }
    for g in graphs {
        let Ok(sig) = analyze(&g) else { continue };
        if sig.grade != 1 {
            continue;
        }
        let (lambda, mu) = (sig.a, sig.c_values[0]);
        for u in 0..g.order() {
            for v in u + 1..g.order() {
                let want = if g.has_edge(u, v) { lambda } else { mu };
                assert_eq!(g.common_neighbours(u, v).unwrap(), want);
            }
        }
    }
}

#[test]
fn h8_has_a_unique_maximum_independent_set() {
    let g = build_h8();
    assert_eq!(g.independence_number().unwrap(), 5);
    let mut best = Vec::new();
    for bits in 0u64..1 << 7 {
        let s = VertexSet::from_bits(bits);
        if g.is_independent(s) && s.len() == 5 {
            best.push(s);
        }
    }
    assert_eq!(best, vec![g.maximum_independent_set().unwrap()]);
}

#[test]
fn g2_profiles_differ_between_vertices() {
    let g = build_g2();
    let profiles: Vec<Vec<usize>> = (0..12).map(|u| t_profile(&g, u, &[3, 2, 1]).unwrap().t_values()).collect();
    assert!(profiles.contains(&vec![1, 3, 3]));
    assert!(profiles.contains(&vec![0, 5, 2]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signature_is_invariant_under_relabelling(seed in any::<u64>(), which in 0usize..4) {
        let g = [build_g1(), build_g2(), cycle(7), complete_bipartite(3, 5)][which].clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = g.permute(&random_permutation(&mut rng, g.order()));
        prop_assert_eq!(analyze(&g), analyze(&h));
    }

    #[test]
    fn witnesses_match_after_relabelling(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for (g, n) in [(build_g1(), 11), (build_g2(), 12)] {
            let h = g.permute(&random_permutation(&mut rng, n));
            prop_assert!(matches(&h, &QsrParams::sqsr_family(n, 4).unwrap(), true));
            prop_assert!(check_counting_identities(&h, &[3, 2, 1]).unwrap().all_hold());
        }
    }

    #[test]
    fn removing_an_edge_breaks_the_witness(idx in 0usize..24) {
        let g = build_g2();
        let edges: Vec<_> = g.edges().enumerate().filter(|&(i, _)| i != idx).map(|(_, e)| e).collect();
        let h = Graph::new(12, &edges).unwrap();
        prop_assert!(!matches(&h, &QsrParams::sqsr_family(12, 4).unwrap(), true));
        prop_assert!(!check_counting_identities(&h, &[3, 2, 1]).unwrap().all_hold());
    }
}
