//! Admissible orders for the (k-1, k-2, k-3) family, and the k = 4 census
//! just outside them.

use qsrgraph::enumerate::{enumerate, EnumSpec};
use qsrgraph::qsr::sqsr_bounds;

fn main() {
    for k in 4..=10 {
        let b = sqsr_bounds(k).unwrap();
        println!("k = {k:>2}: {} <= n <= {}", b.lower, b.upper);
    }
    println!("k = 3: {}", sqsr_bounds(3).unwrap_err());

    for n in 9..=13 {
        let r = enumerate(&EnumSpec::sqsr_family(n, 4).unwrap()).unwrap();
        println!("n = {n}: {} graph(s), {} search nodes", r.classes.len(), r.nodes_explored);
    }
}
