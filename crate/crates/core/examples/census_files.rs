//! Writes a census with its metadata sidecar, reads it back and certifies it.
//!
//! `cargo run --example census_files -- out.g6` (defaults to a temp path).

use std::path::PathBuf;

use qsrgraph::enumerate::{certify, enumerate, read_census, sidecar_path, write_census, EnumSpec};

fn main() {
    let path = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("cubic-triangle-free-10.g6"));
    let spec = EnumSpec::new(10, 3, 0, [2, 1, 0], false, false).unwrap();
    let report = enumerate(&spec).unwrap();
    write_census(&report, &path).unwrap();
    println!("wrote {} graphs to {}", report.classes.len(), path.display());
    println!("{}", std::fs::read_to_string(sidecar_path(&path)).unwrap());

    let back = read_census(&path).unwrap();
    println!("read back {} graphs, certify: {:?}", back.classes.len(), certify(&back));
}
