//! Compares the augmentation search with brute force on small orders.

use qsrgraph::enumerate::{brute_force_enumerate_many, enumerate, EnumSpec};

fn main() {
    let specs: Vec<EnumSpec> = [(6, 3, vec![3, 1]), (8, 3, vec![2, 1, 0]), (8, 2, vec![1, 0]), (7, 2, vec![1, 0])]
        .into_iter()
        .map(|(n, k, c)| EnumSpec::new(n, k, 0, c, false, false).unwrap())
        .collect();
    let oracle = brute_force_enumerate_many(&specs).unwrap();
    for (spec, slow) in specs.iter().zip(oracle) {
        let fast = enumerate(spec).unwrap();
        let same = fast.classes == slow.classes;
        println!(
            "{spec}: {} class(es); augmentation {} nodes, brute force {} graphs; agree = {same}",
            fast.classes.len(),
            fast.nodes_explored,
            slow.nodes_explored
        );
    }
}
