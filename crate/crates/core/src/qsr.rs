//! Quasi-strongly regular structure of a graph.
//!
//! A `k`-regular graph on `n` vertices is quasi-strongly regular with
//! parameters `(n, k, a; c_1, ..., c_p)` when every adjacent pair has exactly
//! `a` common neighbours and every non-adjacent pair has some `c_i`. The
//! grade is the number of `c` values actually realised, a declaration is
//! proper when all declared values are realised, and strict when `a` and the
//! `c_i` are pairwise distinct.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QsrError {
    #[error("graph has {0} vertex; at least two are needed")]
    TooSmall(usize),
    #[error("not regular")]
    NotRegular,
    #[error(
        "adjacent pairs disagree: {0:?} share {1} common neighbours but {2:?} share {3}"
    )]
    AdjacentCountNotConstant((VertexId, VertexId), usize, (VertexId, VertexId), usize),
    #[error("complete graph: there are no non-adjacent pairs")]
    CompleteGraph,
    #[error("edgeless graph: there are no adjacent pairs")]
    EdgelessGraph,
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("vertices {0} and {1} share {2} common neighbours, which is not a declared c-value")]
    UnrealizedCount(VertexId, VertexId, usize),
    #[error("parameter mismatch: {0}")]
    ParameterMismatch(String),
    #[error("k must be at least 4, got {0}")]
    DegreeTooSmall(usize),
    #[error("invalid c-list: {0}")]
    InvalidCList(String),
}

/// Parameters extracted from a graph by [`analyze`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QsrSignature {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    /// Realised non-adjacent counts, strictly descending.
    pub c_values: Vec<usize>,
    pub grade: usize,
    /// Set only when the signature was checked against a declared c-list.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub proper: Option<bool>,
    pub strict: bool,
}

/// Extracts `(n, k, a; c_1 > ... > c_p)` from a regular graph.
pub fn analyze(g: &Graph) -> Result<QsrSignature, QsrError> {
    let n = g.order();
    if n < 2 {
        return Err(QsrError::TooSmall(n));
    }
    let k = g.is_regular().ok_or(QsrError::NotRegular)?;
    if k == 0 {
        return Err(QsrError::EdgelessGraph);
    }
    if k == n - 1 {
        return Err(QsrError::CompleteGraph);
    }
    let mut a: Option<((VertexId, VertexId), usize)> = None;
    // bit c set when some non-adjacent pair has c common neighbours (c <= k < 64)
    let mut realized = 0u64;
    for u in 0..n {
        let row = g.row(u);
        for v in u + 1..n {
            let c = g.common(u, v);
            if row.contains(v) {
                match a {
                    None => a = Some(((u, v), c)),
                    Some((first, a0)) if a0 != c => {
                        return Err(QsrError::AdjacentCountNotConstant(first, a0, (u, v), c))
                    }
                    _ => {}
                }
            } else {
                realized |= 1 << c;
            }
        }
    }
    let a = a.expect("k >= 1 gives an edge").1;
    let mut c_values: Vec<usize> = VertexSet::from_bits(realized).iter().collect();
    c_values.reverse();
    Ok(QsrSignature {
        n,
        k,
        a,
        grade: c_values.len(),
        strict: !c_values.contains(&a),
        c_values,
        proper: None,
    })
}

/// A declared parameter set `(n, k, a; c_1 > ... > c_p)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QsrParams {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    pub c_values: Vec<usize>,
}

impl QsrParams {
    /// Validates that `c_values` is non-empty and strictly descending.
    pub fn new(n: usize, k: usize, a: usize, c_values: Vec<usize>) -> Result<Self, QsrError> {
        check_c_list(&c_values)?;
        Ok(QsrParams { n, k, a, c_values })
    }

    /// `(n, k, 0; k - 1, k - 2, k - 3)`.
    pub fn sqsr_family(n: usize, k: usize) -> Result<Self, QsrError> {
        if k < 4 {
            return Err(QsrError::DegreeTooSmall(k));
        }
        Ok(QsrParams { n, k, a: 0, c_values: vec![k - 1, k - 2, k - 3] })
    }
}

impl fmt::Display for QsrParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.c_values.iter().map(|c| c.to_string()).collect();
        write!(f, "({}, {}, {}; {})", self.n, self.k, self.a, cs.join(", "))
    }
}

fn check_c_list(c_values: &[usize]) -> Result<(), QsrError> {
    if c_values.is_empty() {
        return Err(QsrError::InvalidCList("empty".into()));
    }
    if c_values.windows(2).any(|w| w[0] <= w[1]) {
        return Err(QsrError::InvalidCList(format!(
            "{c_values:?} is not strictly descending"
        )));
    }
    Ok(())
}

/// First condition that fails when checking a graph against [`QsrParams`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Mismatch {
    Order { found: usize, expected: usize },
    NotRegular { expected: usize },
    WrongDegree { found: usize, expected: usize },
    Analysis(QsrError),
    AdjacentCount { found: usize, expected: usize },
    UndeclaredCount { pair: (VertexId, VertexId), count: usize },
    Unrealized { c: usize },
    NotStrict { a: usize },
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mismatch::Order { found, expected } => {
                write!(f, "order is {found}, expected {expected}")
            }
            Mismatch::NotRegular { expected } => {
                write!(f, "not {expected}-regular (degrees differ)")
            }
            Mismatch::WrongDegree { found, expected } => {
                write!(f, "not {expected}-regular (graph is {found}-regular)")
            }
            Mismatch::Analysis(e) => write!(f, "{e}"),
            Mismatch::AdjacentCount { found, expected } => write!(
                f,
                "adjacent pairs share {found} common neighbours, expected {expected}"
            ),
            Mismatch::UndeclaredCount { pair, count } => write!(
                f,
                "non-adjacent pair {pair:?} shares {count} common neighbours, not a declared c-value"
            ),
            Mismatch::Unrealized { c } => {
                write!(f, "not proper: declared c-value {c} is never realized")
            }
            Mismatch::NotStrict { a } => {
                write!(f, "not strict: a = {a} is also a c-value")
            }
        }
    }
}

/// Checks `g` against `params`, returning the signature (with `proper` set)
/// or the first failing condition. Properness is always required.
pub fn check(g: &Graph, params: &QsrParams, require_strict: bool) -> Result<QsrSignature, Mismatch> {
    if g.order() != params.n {
        return Err(Mismatch::Order { found: g.order(), expected: params.n });
    }
    match g.is_regular() {
        None => return Err(Mismatch::NotRegular { expected: params.k }),
        Some(k) if k != params.k => {
            return Err(Mismatch::WrongDegree { found: k, expected: params.k })
        }
        _ => {}
    }
    let mut sig = analyze(g).map_err(Mismatch::Analysis)?;
    if sig.a != params.a {
        return Err(Mismatch::AdjacentCount { found: sig.a, expected: params.a });
    }
    if let Some(&c) = sig.c_values.iter().find(|c| !params.c_values.contains(c)) {
        let pair = first_pair_with_count(g, c).expect("realized count has a witness");
        return Err(Mismatch::UndeclaredCount { pair, count: c });
    }
    if let Some(&c) = params.c_values.iter().find(|c| !sig.c_values.contains(c)) {
        return Err(Mismatch::Unrealized { c });
    }
    if require_strict && !sig.strict {
        return Err(Mismatch::NotStrict { a: sig.a });
    }
    sig.proper = Some(true);
    Ok(sig)
}

fn first_pair_with_count(g: &Graph, c: usize) -> Option<(VertexId, VertexId)> {
    let n = g.order();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .find(|&(u, v)| !g.has_edge(u, v) && g.common(u, v) == c)
}

/// Whether `g` is a proper QSR graph with exactly these parameters (and
/// strict, if asked).
pub fn matches(g: &Graph, params: &QsrParams, require_strict: bool) -> bool {
    check(g, params, require_strict).is_ok()
}

/// Per-vertex counts `t_i(u)`: non-neighbours of `u` sharing `c_i` common
/// neighbours with it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TProfile {
    pub vertex: VertexId,
    /// `(c_i, t_i)` in the order of the c-list.
    pub counts: Vec<(usize, usize)>,
}

impl TProfile {
    pub fn t_values(&self) -> Vec<usize> {
        self.counts.iter().map(|&(_, t)| t).collect()
    }

    /// `Σ t_i`.
    pub fn total(&self) -> usize {
        self.counts.iter().map(|&(_, t)| t).sum()
    }

    /// `Σ c_i t_i`.
    pub fn weighted(&self) -> usize {
        self.counts.iter().map(|&(c, t)| c * t).sum()
    }
}

pub fn t_profile(g: &Graph, u: VertexId, c_list: &[usize]) -> Result<TProfile, QsrError> {
    if u >= g.order() {
        return Err(QsrError::VertexOutOfRange { vertex: u, order: g.order() });
    }
    check_c_list(c_list)?;
    let mut counts: Vec<(usize, usize)> = c_list.iter().map(|&c| (c, 0)).collect();
    for w in non_neighbours(g, u) {
        let c = g.common(u, w);
        let slot = counts
            .iter_mut()
            .find(|(ci, _)| *ci == c)
            .ok_or(QsrError::UnrealizedCount(u, w, c))?;
        slot.1 += 1;
    }
    Ok(TProfile { vertex: u, counts })
}

fn non_neighbours(g: &Graph, u: VertexId) -> VertexSet {
    g.vertices() - g.row(u) - VertexSet::singleton(u)
}

/// One side of a counting identity evaluated at a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub holds: bool,
}

impl IdentityCheck {
    fn new(lhs: usize, rhs: usize) -> Self {
        IdentityCheck { lhs, rhs, holds: lhs == rhs }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VertexIdentities {
    pub vertex: VertexId,
    /// `(t_1, t_2, t_3)`.
    pub t: [usize; 3],
    /// Non-neighbours whose count is none of `k - 1, k - 2, k - 3`.
    pub unmatched: usize,
    /// `t_1 + t_2 + t_3 = n - k - 1`
    pub vertex_count: IdentityCheck,
    /// `(k-1) t_1 + (k-2) t_2 + (k-3) t_3 = k (k - 1)`
    pub edge_count: IdentityCheck,
    /// `t_1 + 2 t_2 + 3 t_3 = k (n - 2k)`; the difference of the two above.
    pub combined: IdentityCheck,
}

impl VertexIdentities {
    pub fn all_hold(&self) -> bool {
        self.unmatched == 0 && self.vertex_count.holds && self.edge_count.holds && self.combined.holds
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub n: usize,
    pub k: usize,
    pub vertices: Vec<VertexIdentities>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.vertices.iter().all(VertexIdentities::all_hold)
    }

    pub fn first_failure(&self) -> Option<&VertexIdentities> {
        self.vertices.iter().find(|v| !v.all_hold())
    }
}

/// Evaluates the vertex-count and edge-count identities for the
/// `(n, k, 0; k - 1, k - 2, k - 3)` family at every vertex.
///
/// `k` is read from the c-list, so a graph that is not actually `k`-regular
/// shows up as per-vertex failures rather than an error.
pub fn check_counting_identities(g: &Graph, c_list: &[usize]) -> Result<IdentityReport, QsrError> {
    let k = match c_list {
        &[c1, c2, c3] if c1 >= 3 && c2 + 1 == c1 && c3 + 1 == c2 => c1 + 1,
        _ => {
            return Err(QsrError::ParameterMismatch(format!(
                "c-list {c_list:?} is not of the form [k-1, k-2, k-3] with k >= 4"
            )))
        }
    };
    let n = g.order();
    let vertices = (0..n)
        .map(|u| {
            let mut t = [0usize; 3];
            let mut unmatched = 0;
            for w in non_neighbours(g, u) {
                match c_list.iter().position(|&c| c == g.common(u, w)) {
                    Some(i) => t[i] += 1,
                    None => unmatched += 1,
                }
            }
            let total = t[0] + t[1] + t[2];
            let weighted = c_list.iter().zip(t).map(|(c, ti)| c * ti).sum();
            VertexIdentities {
                vertex: u,
                t,
                unmatched,
                vertex_count: IdentityCheck::new(total, n.saturating_sub(k + 1)),
                edge_count: IdentityCheck::new(weighted, k * (k - 1)),
                combined: IdentityCheck::new(t[0] + 2 * t[1] + 3 * t[2], (k * n).saturating_sub(2 * k * k)),
            }
        })
        .collect();
    Ok(IdentityReport { n, k, vertices })
}

/// Admissible orders for `(n, k, 0; k - 1, k - 2, k - 3)` graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub k: usize,
    pub lower: usize,
    pub upper: usize,
}

impl Bounds {
    pub fn contains(&self, n: usize) -> bool {
        (self.lower..=self.upper).contains(&n)
    }
}

/// `[11, 12]` for `k = 4`, and `[2k + 4, k² - 5]` for `k >= 5`.
pub fn sqsr_bounds(k: usize) -> Result<Bounds, QsrError> {
    match k {
        0..=3 => Err(QsrError::DegreeTooSmall(k)),
        4 => Ok(Bounds { k, lower: 2 * k + 3, upper: k * k - 4 }),
        _ => Ok(Bounds { k, lower: 2 * k + 4, upper: k * k - 5 }),
    }
}
