//! Reads graph6 lines from standard input (or uses the catalog when stdin is
//! empty) and prints each graph's order, edges and re-encoding.

use std::io::{self, IsTerminal};

use qsrgraph::catalog::{build_named, NAMES};
use qsrgraph::graph::read_graph6_lines;
use qsrgraph::Graph;

fn main() {
    let stdin = io::stdin();
    let mut graphs: Vec<Graph> = if stdin.is_terminal() {
        Vec::new()
    } else {
        read_graph6_lines(stdin.lock()).expect("valid graph6 input")
    };
    if graphs.is_empty() {
        graphs = NAMES.iter().map(|n| build_named(n).unwrap()).collect();
    }
    for g in graphs {
        let line = g.to_graph6();
        let back = Graph::decode_graph6(line.as_bytes()).unwrap();
        assert_eq!(back, g);
        println!("{line}\tn = {}\tm = {}\t{:?}", g.order(), g.edge_count(), g.edges().collect::<Vec<_>>());
    }
}
