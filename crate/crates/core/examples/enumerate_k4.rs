//! Census of proper, strict (n, 4, 0; 3, 2, 1) graphs for n = 11 and 12.
//!
//! Run with `cargo run --release --example enumerate_k4`.

use qsrgraph::enumerate::{certify, enumerate, EnumSpec};

fn main() {
    for n in [11, 12] {
        let spec = EnumSpec::sqsr_family(n, 4).expect("valid spec");
        let report = enumerate(&spec).expect("within budget");
        certify(&report).expect("census certifies");
        println!(
            "{spec}: {} class(es), {} nodes, {:.2}s",
            report.classes.len(),
            report.nodes_explored,
            report.elapsed_secs
        );
        for cf in &report.classes {
            println!("  {cf}");
        }
    }
}
