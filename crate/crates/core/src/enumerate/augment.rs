//! Vertex-by-vertex canonical augmentation.
//!
//! A child (parent + new vertex `w`) is kept only when `w` lies in the
//! automorphism orbit of the vertex receiving the last canonical label, so
//! each isomorphism class has exactly one accepted parent. Children of one
//! parent that are isomorphic to each other are collapsed by their canonical
//! key. Together these make every level isomorph-free.
//!
//! With the rooted start, vertex 0 and its neighbourhood `{1..k}` are fixed
//! and coloured apart from the rest; augmentation only ever adds uncoloured
//! vertices. A graph can then appear once per orbit of choices of root, so
//! finished graphs are deduplicated by their uncoloured canonical form.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::EnumSpec;
use crate::canon::{canonical_form, label_from_refined, refine_cells, CanonicalForm};
use crate::graph::{Graph, GraphBuilder, VertexSet};

/// Levels expanded serially before the subtrees are handed to workers.
const SPLIT_DEPTH: usize = 2;

pub(crate) struct Augmenter<'a> {
    spec: &'a EnumSpec,
    rooted: bool,
    nodes: AtomicU64,
    node_limit: Option<u64>,
    aborted: AtomicBool,
}

pub(crate) struct Outcome {
    pub classes: BTreeSet<CanonicalForm>,
    pub nodes: u64,
    pub complete: bool,
}

impl<'a> Augmenter<'a> {
    pub fn new(spec: &'a EnumSpec, rooted: bool, node_limit: Option<u64>) -> Self {
        Augmenter {
            spec,
            rooted,
            nodes: AtomicU64::new(0),
            node_limit,
            aborted: AtomicBool::new(false),
        }
    }

    fn seed(&self) -> Graph {
        if self.rooted {
            let k = self.spec.k;
            let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            Graph::new(k + 1, &edges).expect("star fits")
        } else {
            Graph::empty(1).expect("one vertex")
        }
    }

    pub fn run(&self) -> Outcome {
        let mut classes = BTreeSet::new();
        let seed = self.seed();
        self.count_node();
        let mut frontier = vec![seed];
        for _ in 0..SPLIT_DEPTH {
            let mut next = Vec::new();
            for g in frontier {
                if g.order() == self.spec.n {
                    self.finish(&g, &mut classes);
                } else if self.spec.admits_partial(&g) {
                    next.extend(self.children(&g));
                }
            }
            frontier = next;
        }
        let found: Vec<BTreeSet<CanonicalForm>> = frontier
            .into_par_iter()
            .map(|g| {
                let mut local = BTreeSet::new();
                self.descend(g, &mut local);
                local
            })
            .collect();
        for set in found {
            classes.extend(set);
        }
        Outcome {
            classes,
            nodes: self.nodes.load(Ordering::Relaxed),
            complete: !self.aborted.load(Ordering::Relaxed),
        }
    }

    fn count_node(&self) -> bool {
        let seen = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if self.node_limit.is_some_and(|limit| seen > limit) {
            self.aborted.store(true, Ordering::Relaxed);
        }
        !self.aborted.load(Ordering::Relaxed)
    }

    fn descend(&self, g: Graph, out: &mut BTreeSet<CanonicalForm>) {
        if self.aborted.load(Ordering::Relaxed) {
            return;
        }
        if g.order() == self.spec.n {
            self.finish(&g, out);
            return;
        }
        for child in self.children(&g) {
            self.descend(child, out);
        }
    }

    fn finish(&self, g: &Graph, out: &mut BTreeSet<CanonicalForm>) {
        if self.spec.accepts(g) {
            out.insert(canonical_form(g));
        }
    }

    fn colouring(&self, m: usize) -> Vec<VertexSet> {
        if !self.rooted {
            return vec![VertexSet::prefix(m)];
        }
        let k = self.spec.k;
        let mut cells = vec![VertexSet::singleton(0), VertexSet::prefix(k + 1) - VertexSet::singleton(0)];
        if m > k + 1 {
            cells.push(VertexSet::prefix(m) - VertexSet::prefix(k + 1));
        }
        cells
    }

    /// Viable, canonically accepted, pairwise non-isomorphic children.
    pub fn children(&self, parent: &Graph) -> Vec<Graph> {
        let spec = self.spec;
        let m = parent.order();
        let remaining_after = spec.n - m - 1;
        let lo = spec.k.saturating_sub(remaining_after);
        let hi = spec.k.min(m);
        let open: VertexSet = (0..m).filter(|&v| parent.row(v).len() < spec.k).collect();
        let mut out = Vec::new();
        let mut seen: HashSet<Vec<u64>> = HashSet::new();
        let last_level = m + 1 == spec.n;
        for_each_subset(parent, open, lo, hi, spec.a == 0, &mut |s| {
            if self.aborted.load(Ordering::Relaxed) {
                return;
            }
            let mut b = GraphBuilder::from_graph(parent);
            let w = b.push_vertex(s).expect("order below capacity");
            let child = b.build();
            if !spec.admits_partial(&child) {
                return;
            }
            if last_level {
                // finished graphs are deduplicated globally
                if self.count_node() {
                    out.push(child);
                }
                return;
            }
            let mut cells = self.colouring(m + 1);
            refine_cells(&child, &mut cells);
            let lab = label_from_refined(&child, cells);
            if !lab.same_orbit(lab.last_vertex(), w) {
                return;
            }
            if seen.insert(lab.key.clone()) && self.count_node() {
                out.push(child);
            }
        });
        out
    }
}

/// Calls `f` on every subset of `open` with size in `lo..=hi`; independent
/// subsets only when `independent` is set.
fn for_each_subset(
    g: &Graph,
    open: VertexSet,
    lo: usize,
    hi: usize,
    independent: bool,
    f: &mut dyn FnMut(VertexSet),
) {
    fn rec(
        g: &Graph,
        cand: VertexSet,
        chosen: VertexSet,
        lo: usize,
        hi: usize,
        independent: bool,
        f: &mut dyn FnMut(VertexSet),
    ) {
        if chosen.len() >= lo {
            f(chosen);
        }
        if chosen.len() == hi || chosen.len() + cand.len() < lo {
            return;
        }
        let mut rest = cand;
        while let Some(v) = rest.first() {
            rest.remove(v);
            if chosen.len() + 1 + rest.len() < lo {
                break;
            }
            let mut next_chosen = chosen;
            next_chosen.insert(v);
            let next_cand = if independent { rest - g.row(v) } else { rest };
            rec(g, next_cand, next_chosen, lo, hi, independent, f);
        }
    }
    if lo <= hi {
        rec(g, open, VertexSet::EMPTY, lo, hi, independent, f);
    }
}
