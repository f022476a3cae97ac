use qsrgraph::catalog::build_h8;

fn main() {
    let g = build_h8();
    let best = g.maximum_independent_set().unwrap();
    println!("h8 = {g}, degrees {:?}", g.degree_sequence());
    println!("independence number {} via {:?}", g.independence_number().unwrap(), best);

    let count = (0u64..1 << g.order())
        .map(qsrgraph::VertexSet::from_bits)
        .filter(|&s| s.len() == best.len() && g.is_independent(s))
        .count();
    println!("independent sets of that size: {count}");
}
