//! Checks the two catalog witnesses against their parameter sets and shows
//! what a failed check reports.

use qsrgraph::catalog::{build_g1, build_g2, cycle};
use qsrgraph::qsr::{check, QsrParams};

fn main() {
    for (name, g) in [("g1", build_g1()), ("g2", build_g2())] {
        let params = QsrParams::sqsr_family(g.order(), 4).unwrap();
        match check(&g, &params, true) {
            Ok(sig) => println!("{name} = {g}: {params} holds, grade {}", sig.grade),
            Err(why) => println!("{name}: {why}"),
        }
    }

    let wrong = QsrParams::new(5, 3, 0, vec![1]).unwrap();
    if let Err(why) = check(&cycle(5), &wrong, false) {
        println!("C5 against {wrong}: {why}");
    }
}
