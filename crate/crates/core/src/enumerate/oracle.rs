//! Brute-force census over every labelled graph.
//!
//! Walks all `2^(n(n-1)/2)` edge sets in Gray-code order (one edge toggled per
//! step), keeps the `k`-regular ones, collapses them by canonical form and
//! filters the classes through [`EnumSpec::accepts`]. Nothing here is shared
//! with the augmentation search.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use super::{EnumError, EnumReport, EnumSpec, Method};
use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::{Graph, VertexSet};

/// Largest order the oracle accepts.
pub const ORACLE_LIMIT: usize = 8;

/// Census of `spec` by exhaustive labelled enumeration (`n <= 8`).
pub fn brute_force_enumerate(spec: &EnumSpec) -> Result<EnumReport, EnumError> {
    Ok(brute_force_enumerate_many(std::slice::from_ref(spec))?
        .pop()
        .expect("one report per spec"))
}

/// Runs the oracle for several specs, walking the labelled graphs once per
/// distinct `(n, k)`.
pub fn brute_force_enumerate_many(specs: &[EnumSpec]) -> Result<Vec<EnumReport>, EnumError> {
    for spec in specs {
        spec.validate()?;
        if spec.n > ORACLE_LIMIT {
            return Err(EnumError::TooLargeForOracle { n: spec.n, limit: ORACLE_LIMIT });
        }
    }
    let mut walks: BTreeMap<(usize, usize), (BTreeSet<CanonicalForm>, u64, f64)> = BTreeMap::new();
    for spec in specs {
        walks.entry((spec.n, spec.k)).or_insert_with(|| {
            let start = Instant::now();
            let (classes, visited) = regular_classes(spec.n, spec.k);
            (classes, visited, start.elapsed().as_secs_f64())
        });
    }
    Ok(specs
        .iter()
        .map(|spec| {
            let start = Instant::now();
            let (regular, visited, walk_secs) = &walks[&(spec.n, spec.k)];
            let classes: Vec<CanonicalForm> = regular
                .iter()
                .filter(|cf| spec.accepts(&cf.to_graph()))
                .cloned()
                .collect();
            EnumReport {
                spec: spec.clone(),
                classes,
                nodes_explored: *visited,
                complete: true,
                elapsed_secs: walk_secs + start.elapsed().as_secs_f64(),
                method: Method::BruteForce,
            }
        })
        .collect())
}

/// Canonical forms of all `k`-regular graphs on `n` labelled vertices, and
/// the number of labelled graphs visited.
fn regular_classes(n: usize, k: usize) -> (BTreeSet<CanonicalForm>, u64) {
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let total: u64 = 1 << pairs.len();
    let mut adj = [VertexSet::EMPTY; 8];
    let mut deg = [0usize; 8];
    // vertices whose degree is currently k
    let mut at_k = if k == 0 { n } else { 0 };
    let mut classes = BTreeSet::new();
    let mut record = |adj: &[VertexSet]| {
        let g = Graph::from_rows(&adj[..n]).expect("rows are symmetric");
        classes.insert(canonical_form(&g));
    };
    if at_k == n {
        record(&adj);
    }
    for step in 1..total {
        let (u, v) = pairs[step.trailing_zeros() as usize];
        let adding = !adj[u].contains(v);
        for (x, y) in [(u, v), (v, u)] {
            if deg[x] == k {
                at_k -= 1;
            }
            if adding {
                adj[x].insert(y);
                deg[x] += 1;
            } else {
                adj[x].remove(y);
                deg[x] -= 1;
            }
            if deg[x] == k {
                at_k += 1;
            }
        }
        if at_k == n {
            record(&adj);
        }
    }
    (classes, total)
}
