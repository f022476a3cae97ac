use std::fmt;

use serde::{Deserialize, Serialize};

use super::EnumError;
use crate::graph::{Graph, MAX_ORDER};
use crate::qsr::{analyze, check_counting_identities};

/// Constraints on the graphs a census collects.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EnumSpec {
    pub n: usize,
    pub k: usize,
    pub a: usize,
    /// Permitted non-adjacent counts, strictly descending.
    pub c_allowed: Vec<usize>,
    /// Every permitted count must be realised (properness).
    pub require_all_realized: bool,
    /// `a` must differ from every realised count.
    pub require_strict: bool,
}

impl EnumSpec {
    pub fn new(
        n: usize,
        k: usize,
        a: usize,
        c_allowed: impl IntoIterator<Item = usize>,
        require_all_realized: bool,
        require_strict: bool,
    ) -> Result<Self, EnumError> {
        let mut c: Vec<usize> = c_allowed.into_iter().collect();
        c.sort_unstable_by(|x, y| y.cmp(x));
        c.dedup();
        let spec = EnumSpec { n, k, a, c_allowed: c, require_all_realized, require_strict };
        spec.validate()?;
        Ok(spec)
    }

    /// Proper, strict `(n, k, 0; k - 1, k - 2, k - 3)`.
    pub fn sqsr_family(n: usize, k: usize) -> Result<Self, EnumError> {
        if k < 4 {
            return Err(EnumError::InvalidSpec(format!("k must be at least 4, got {k}")));
        }
        EnumSpec::new(n, k, 0, [k - 1, k - 2, k - 3], true, true)
    }

    pub fn validate(&self) -> Result<(), EnumError> {
        let invalid = |m: String| Err(EnumError::InvalidSpec(m));
        if self.n == 0 || self.n > MAX_ORDER {
            return invalid(format!("n must be in 1..={MAX_ORDER}, got {}", self.n));
        }
        if self.n * self.k % 2 != 0 {
            return invalid(format!("n·k = {}·{} is odd", self.n, self.k));
        }
        if self.c_allowed.is_empty() {
            return invalid("c_allowed is empty".into());
        }
        if let Some(&c) = self.c_allowed.iter().find(|&&c| c > self.k) {
            return invalid(format!("c-value {c} exceeds k = {}", self.k));
        }
        if self.c_allowed.windows(2).any(|w| w[0] <= w[1]) {
            return invalid("c_allowed must be strictly descending".into());
        }
        Ok(())
    }

    pub(crate) fn c_mask(&self) -> u64 {
        self.c_allowed.iter().fold(0, |m, &c| m | 1 << c)
    }

    /// Whether the c-list is `[k - 1, k - 2, k - 3]` with `a = 0` and `k >= 4`.
    pub fn is_sqsr_family(&self) -> bool {
        self.k >= 4 && self.a == 0 && self.c_allowed == [self.k - 1, self.k - 2, self.k - 3]
    }

    /// First reason `g` is rejected, or `None` if it satisfies the spec.
    pub fn violation(&self, g: &Graph) -> Option<String> {
        if g.order() != self.n {
            return Some(format!("order is {}, expected {}", g.order(), self.n));
        }
        let sig = match analyze(g) {
            Ok(s) => s,
            Err(e) => return Some(e.to_string()),
        };
        if sig.k != self.k {
            return Some(format!("not {}-regular (graph is {}-regular)", self.k, sig.k));
        }
        if sig.a != self.a {
            return Some(format!(
                "adjacent pairs share {} common neighbours, expected {}",
                sig.a, self.a
            ));
        }
        if let Some(c) = sig.c_values.iter().find(|c| !self.c_allowed.contains(c)) {
            return Some(format!("realized c-value {c} is not permitted"));
        }
        if self.require_all_realized {
            if let Some(c) = self.c_allowed.iter().find(|c| !sig.c_values.contains(c)) {
                return Some(format!("not proper: c-value {c} is never realized"));
            }
        }
        if self.require_strict && !sig.strict {
            return Some(format!("not strict: a = {} is also a c-value", sig.a));
        }
        None
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.violation(g).is_none()
    }

    /// Necessary conditions for `g` to be an induced subgraph of some graph
    /// satisfying the spec. Every rule is monotone: it holds for all induced
    /// subgraphs of a valid graph, in any vertex order.
    ///
    /// - degrees at most `k`, and the degree still missing at each vertex
    ///   fits in the vertices yet to come;
    /// - the total missing degree `D` satisfies `D <= k·r`, `D ≡ k·r (mod 2)`
    ///   and `k·r - D <= r(r - 1)` for `r` vertices still to come;
    /// - each pair's common-neighbour count can still reach an admissible
    ///   value (`a` when adjacent, a permitted `c` otherwise), where the count
    ///   can grow by at most `min(missing(u), missing(v), r)`. A pair with a
    ///   saturated endpoint is therefore final.
    pub fn admits_partial(&self, g: &Graph) -> bool {
        let m = g.order();
        if m > self.n {
            return false;
        }
        let (k, r) = (self.k, self.n - m);
        let mut missing = [0usize; MAX_ORDER];
        let mut total = 0;
        for v in 0..m {
            let d = g.row(v).len();
            if d > k || k - d > r {
                return false;
            }
            missing[v] = k - d;
            total += k - d;
        }
        if total > k * r || (k * r - total) % 2 != 0 || k * r - total > r * r.saturating_sub(1) {
            return false;
        }
        let c_mask = self.c_mask();
        for u in 0..m {
            let row = g.row(u);
            for v in u + 1..m {
                let c = g.common(u, v);
                let slack = missing[u].min(missing[v]).min(r);
                if row.contains(v) {
                    if c > self.a || c + slack < self.a {
                        return false;
                    }
                } else {
                    let hi = c + slack;
                    let upto = if hi >= 63 { u64::MAX } else { (1u64 << (hi + 1)) - 1 };
                    if c_mask & upto & (u64::MAX << c) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Extra per-graph certification for the `(k-1, k-2, k-3)` family.
    pub(crate) fn identity_violation(&self, g: &Graph) -> Option<usize> {
        if !self.is_sqsr_family() {
            return None;
        }
        let report = check_counting_identities(g, &self.c_allowed).ok()?;
        report.first_failure().map(|v| v.vertex)
    }
}

impl fmt::Display for EnumSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.c_allowed.iter().map(|c| c.to_string()).collect();
        write!(f, "(n={}, k={}, a={}; c in {{{}}}", self.n, self.k, self.a, cs.join(","))?;
        if self.require_all_realized {
            f.write_str(", proper")?;
        }
        if self.require_strict {
            f.write_str(", strict")?;
        }
        f.write_str(")")
    }
}
