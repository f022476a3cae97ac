//! Extracts the parameters of a few graphs and prints per-vertex t-profiles.

use qsrgraph::catalog::{build_g2, complete_bipartite, cycle, path};
use qsrgraph::qsr::{analyze, t_profile};

fn main() {
    let g = build_g2();
    let sig = analyze(&g).unwrap();
    println!("g2: {sig:?}");
    for u in 0..g.order() {
        let prof = t_profile(&g, u, &sig.c_values).unwrap();
        println!("  vertex {u:>2}: (t1, t2, t3) = {:?}", prof.t_values());
    }

    println!("K4,4: {:?}", analyze(&complete_bipartite(4, 4)).unwrap());
    println!("C6: {:?}", analyze(&cycle(6)).unwrap());
    // not regular, so there is nothing to report
    println!("P3: {}", analyze(&path(3)).unwrap_err());
}
