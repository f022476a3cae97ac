//! Canonical forms, isomorphism tests and automorphism groups.

use qsrgraph::canon::{automorphism_count, canonical_form, canonical_labeling, Partition};
use qsrgraph::catalog::{build_g1, build_g2, build_h8, complete_bipartite, cycle};
use qsrgraph::is_isomorphic;

fn main() {
    let g = build_g2();
    let shuffled = g.permute(&[5, 3, 11, 0, 7, 1, 9, 2, 10, 4, 8, 6]);
    println!("g2        {}  canonical {}", g, canonical_form(&g));
    println!("relabeled {}  canonical {}", shuffled, canonical_form(&shuffled));
    println!("isomorphic: {}", is_isomorphic(&g, &shuffled));
    println!("g1 vs g2: {}", is_isomorphic(&build_g1(), &g));

    for (name, h) in [
        ("C5", cycle(5)),
        ("K4,4", complete_bipartite(4, 4)),
        ("h8", build_h8()),
        ("g1", build_g1()),
        ("g2", build_g2()),
    ] {
        let lab = canonical_labeling(&h, &Partition::unit(h.order())).unwrap();
        let mut reps = lab.orbit_representatives().to_vec();
        reps.sort_unstable();
        reps.dedup();
        println!(
            "{name:>5}: |Aut| = {:>5}, {} orbit(s), {} generator(s)",
            automorphism_count(&h).unwrap(),
            reps.len(),
            lab.generators.len()
        );
    }
}
