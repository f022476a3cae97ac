//! Isomorph-free census of regular graphs with prescribed common-neighbour
//! counts, plus an independent brute-force oracle and a certifier.

mod augment;
mod census;
mod oracle;
mod spec;

use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canon::{canonical_form, CanonicalForm};
use crate::graph::Graph;

pub use census::{read_census, sidecar_path, write_census, CensusMetadata};
pub use oracle::{brute_force_enumerate, brute_force_enumerate_many, ORACLE_LIMIT};
pub use spec::EnumSpec;

/// Default soft limit on `n` for [`enumerate`].
pub const DEFAULT_ORDER_BUDGET: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("n = {n} is above the order budget of {limit}; pass the override to run anyway")]
    BudgetExceeded { n: usize, limit: usize },
    #[error("n = {n} is too large for the brute-force oracle (limit {limit})")]
    TooLargeForOracle { n: usize, limit: usize },
    #[error("census i/o: {0}")]
    Io(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumOptions {
    /// Start from vertex 0 with neighbourhood `{1..k}` (only used when
    /// `a = 0` and `n > k`).
    pub rooted_start: bool,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    pub order_budget: usize,
    pub override_budget: bool,
    /// Stop after this many search nodes; the report is then incomplete.
    pub node_limit: Option<u64>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            rooted_start: true,
            jobs: None,
            order_budget: DEFAULT_ORDER_BUDGET,
            override_budget: false,
            node_limit: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Augmentation,
    BruteForce,
}

/// Result of a census.
#[derive(Debug, Clone, Serialize)]
pub struct EnumReport {
    pub spec: EnumSpec,
    /// Canonical forms, sorted and pairwise distinct.
    pub classes: Vec<CanonicalForm>,
    pub nodes_explored: u64,
    /// `true` when the search ran to the end, so `classes` is exhaustive.
    pub complete: bool,
    pub elapsed_secs: f64,
    pub method: Method,
}

/// Census of `spec` with default options.
pub fn enumerate(spec: &EnumSpec) -> Result<EnumReport, EnumError> {
    enumerate_with(spec, &EnumOptions::default())
}

pub fn enumerate_with(spec: &EnumSpec, opts: &EnumOptions) -> Result<EnumReport, EnumError> {
    spec.validate()?;
    if spec.n > opts.order_budget && !opts.override_budget {
        return Err(EnumError::BudgetExceeded { n: spec.n, limit: opts.order_budget });
    }
    let start = Instant::now();
    let rooted = opts.rooted_start && spec.a == 0 && spec.k >= 1 && spec.n > spec.k;
    let run = || augment::Augmenter::new(spec, rooted, opts.node_limit).run();
    let outcome = match opts.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .map_err(|e| EnumError::InvalidSpec(format!("thread pool: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(EnumReport {
        spec: spec.clone(),
        classes: outcome.classes.into_iter().collect(),
        nodes_explored: outcome.nodes,
        complete: outcome.complete,
        elapsed_secs: start.elapsed().as_secs_f64(),
        method: Method::Augmentation,
    })
}

/// Why a report failed certification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertifyFailure {
    SpecViolation { index: usize, graph6: String, reason: String },
    IdentityFailure { index: usize, graph6: String, vertex: usize },
    NotCanonical { index: usize, graph6: String },
    Duplicate { first: usize, second: usize },
    Unsorted { index: usize },
}

/// Re-checks every class of a report from scratch: decodes it, re-runs the
/// spec check (and the counting identities for the `(k-1, k-2, k-3)`
/// family), recomputes its canonical form and confirms the classes are
/// pairwise non-isomorphic and sorted.
pub fn certify(report: &EnumReport) -> Result<(), CertifyFailure> {
    let spec = &report.spec;
    let mut seen: HashMap<CanonicalForm, usize> = HashMap::new();
    for (index, cf) in report.classes.iter().enumerate() {
        let g: Graph = cf.to_graph();
        let graph6 = cf.to_string();
        if let Some(reason) = spec.violation(&g) {
            return Err(CertifyFailure::SpecViolation { index, graph6, reason });
        }
        if let Some(vertex) = spec.identity_violation(&g) {
            return Err(CertifyFailure::IdentityFailure { index, graph6, vertex });
        }
        let recomputed = canonical_form(&g);
        if let Some(&first) = seen.get(&recomputed) {
            return Err(CertifyFailure::Duplicate { first, second: index });
        }
        if &recomputed != cf {
            return Err(CertifyFailure::NotCanonical { index, graph6 });
        }
        seen.insert(recomputed, index);
    }
    if let Some(i) = report.classes.windows(2).position(|w| w[0] >= w[1]) {
        return Err(CertifyFailure::Unsorted { index: i + 1 });
    }
    Ok(())
}
