mod common;

use common::*;
use qsrgraph::canon::{canonical_form, is_isomorphic};
use qsrgraph::catalog::{build_g1, build_g2, complete_bipartite};
use qsrgraph::enumerate::{
    brute_force_enumerate_many, certify, enumerate, enumerate_with, read_census, sidecar_path,
    write_census, CertifyFailure, EnumOptions, EnumReport, EnumSpec,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn subsets(k: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u32..1 << (k + 1)).map(move |m| (0..=k).filter(|&c| m >> c & 1 == 1).collect())
}

fn strip(r: &EnumReport) -> Vec<String> {
    r.classes.iter().map(|c| c.to_string()).collect()
}

#[test]
fn matches_oracle_on_small_orders() {
    let mut specs = Vec::new();
    for n in 3..=7 {
        for k in 2..=3 {
            if n * k % 2 == 1 {
                continue;
            }
            for c in subsets(k) {
                for (proper, strict) in [(false, false), (true, true)] {
                    specs.push(EnumSpec::new(n, k, 0, c.clone(), proper, strict).unwrap());
                }
            }
        }
    }
    let oracle = brute_force_enumerate_many(&specs).unwrap();
    for (spec, expected) in specs.iter().zip(&oracle) {
        let got = enumerate(spec).unwrap();
        assert_eq!(strip(&got), strip(expected), "{spec}");
    }
}

#[test]
fn k44_is_found_for_c_four() {
    let spec = EnumSpec::new(8, 4, 0, [4], false, false).unwrap();
    let r = enumerate(&spec).unwrap();
    assert!(r.classes.contains(&canonical_form(&complete_bipartite(4, 4))));
}

#[test]
fn output_does_not_depend_on_worker_count() {
    let spec = EnumSpec::sqsr_family(12, 4).unwrap();
    let reference = strip(&enumerate(&spec).unwrap());
    for jobs in [1, 2, 4] {
        let opts = EnumOptions { jobs: Some(jobs), ..EnumOptions::default() };
        assert_eq!(strip(&enumerate_with(&spec, &opts).unwrap()), reference);
    }
    let spec = EnumSpec::new(10, 3, 0, [2, 1, 0], false, false).unwrap();
    let one = enumerate_with(&spec, &EnumOptions { jobs: Some(1), ..EnumOptions::default() }).unwrap();
    let four = enumerate_with(&spec, &EnumOptions { jobs: Some(4), ..EnumOptions::default() }).unwrap();
    assert_eq!(strip(&one), strip(&four));
    assert_eq!(one.nodes_explored, four.nodes_explored);
}

#[test]
fn rooted_start_agrees_with_plain_search() {
    let plain = EnumOptions { rooted_start: false, ..EnumOptions::default() };
    let mut specs: Vec<EnumSpec> = (9..=12).map(|n| EnumSpec::sqsr_family(n, 4).unwrap()).collect();
    for n in [8, 10] {
        specs.push(EnumSpec::new(n, 3, 0, [2, 1, 0], false, false).unwrap());
        specs.push(EnumSpec::new(n, 3, 0, [1, 0], false, true).unwrap());
    }
    specs.push(EnumSpec::new(10, 4, 0, [3, 2, 1, 0], false, false).unwrap());
    for spec in specs {
        let rooted = enumerate(&spec).unwrap();
        let unrooted = enumerate_with(&spec, &plain).unwrap();
        assert_eq!(strip(&rooted), strip(&unrooted), "{spec}");
    }
}

#[test]
fn accepted_graphs_pass_every_prefix() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut cases: Vec<(EnumSpec, qsrgraph::Graph)> = vec![
        (EnumSpec::sqsr_family(11, 4).unwrap(), build_g1()),
        (EnumSpec::sqsr_family(12, 4).unwrap(), build_g2()),
    ];
    let spec = EnumSpec::new(10, 3, 0, [2, 1, 0], false, false).unwrap();
    for cf in enumerate(&spec).unwrap().classes {
        cases.push((spec.clone(), cf.to_graph()));
    }
    for (spec, g) in cases {
        for _ in 0..20 {
            let h = g.permute(&random_permutation(&mut rng, g.order()));
            for m in 1..=h.order() {
                assert!(spec.admits_partial(&prefix(&h, m)), "{spec}: prefix {m} of {h}");
            }
        }
    }
}

#[test]
fn uniqueness_at_eleven_and_twelve() {
    for (n, g) in [(11, build_g1()), (12, build_g2())] {
        let r = enumerate(&EnumSpec::sqsr_family(n, 4).unwrap()).unwrap();
        assert_eq!(r.classes.len(), 1);
        assert!(is_isomorphic(&r.classes[0].to_graph(), &g));
        assert_eq!(certify(&r), Ok(()));
    }
}

#[test]
fn census_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cubic10.g6");
    let spec = EnumSpec::new(10, 3, 0, [2, 1, 0], false, false).unwrap();
    let r = enumerate(&spec).unwrap();
    write_census(&r, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), r.classes.len());
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(sidecar_path(&path)).unwrap()).unwrap();
    assert_eq!(meta["count"], r.classes.len());
    assert_eq!(meta["method"], "augmentation");
    let back = read_census(&path).unwrap();
    assert_eq!(strip(&back), strip(&r));
    assert_eq!(back.spec, spec);
    assert_eq!(certify(&back), Ok(()));
}

#[test]
fn certify_reports_injected_faults() {
    let spec = EnumSpec::new(10, 3, 0, [2, 1, 0], false, false).unwrap();
    let good = enumerate(&spec).unwrap();
    assert!(good.classes.len() >= 2);

    let mut dup = good.clone();
    dup.classes.insert(1, dup.classes[0].clone());
    assert_eq!(certify(&dup), Err(CertifyFailure::Duplicate { first: 0, second: 1 }));

    let mut swapped = good.clone();
    swapped.classes.swap(0, 1);
    assert_eq!(certify(&swapped), Err(CertifyFailure::Unsorted { index: 1 }));

    let mut foreign = good.clone();
    foreign.classes.push(canonical_form(&complete_bipartite(5, 5)));
    assert!(matches!(certify(&foreign), Err(CertifyFailure::SpecViolation { .. })));
}
