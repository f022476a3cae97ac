//! Canonical labelling by individualisation and refinement.
//!
//! The search tree starts from the refined input partition. At each
//! non-discrete node the first largest cell is chosen and each of its
//! vertices is individualised in turn, followed by refinement. Every discrete
//! leaf defines a relabelling; the canonical one is the leaf whose relabelled
//! graph has the lexicographically smallest graph6 encoding.
//!
//! Two leaves with equal relabelled graphs give an automorphism. These prune
//! the search in two ways: siblings in the same orbit of the automorphisms
//! found so far (restricted to those fixing the current path) are skipped, and
//! a subtree that is an automorphic image of an explored one is abandoned as
//! soon as the equivalence is detected. The group order is the product of the
//! orbit sizes along the first path.

mod partition;

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, Graph6Error, VertexId, VertexSet};

pub use partition::{refine, Partition, PartitionError};
pub(crate) use partition::refine_cells;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CanonError {
    #[error(transparent)]
    InvalidPartition(#[from] PartitionError),
    #[error("automorphism group order does not fit in 128 bits")]
    GroupOrderOverflow,
}

/// graph6 bytes of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }

    /// Decodes back to the canonical representative.
    pub fn to_graph(&self) -> Graph {
        Graph::decode_graph6(&self.0).expect("canonical forms are valid graph6")
    }

    /// Wraps graph6 bytes read from elsewhere (e.g. a census file). The bytes
    /// are validated as graph6 but not checked for canonicity.
    pub fn from_graph6(bytes: &[u8]) -> Result<Self, Graph6Error> {
        Graph::decode_graph6(bytes)?;
        Ok(CanonicalForm(bytes.to_vec()))
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.as_str())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Result of a canonical labelling search.
#[derive(Debug, Clone)]
pub struct Labeling {
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<usize>,
    /// Automorphisms found during the search; they generate the full group
    /// (of colour-preserving automorphisms, when started from a coloured partition).
    pub generators: Vec<Vec<VertexId>>,
    /// `None` if the order overflows `u128`.
    pub group_order: Option<u128>,
    pub(crate) key: Vec<u64>,
    orbit_rep: Vec<VertexId>,
}

impl Labeling {
    pub fn canonical_graph(&self, g: &Graph) -> Graph {
        g.permute(&self.label)
    }

    pub fn canonical_form(&self, g: &Graph) -> CanonicalForm {
        CanonicalForm(self.canonical_graph(g).encode_graph6())
    }

    /// Smallest vertex of each vertex's orbit under the automorphism group.
    pub fn orbit_representatives(&self) -> &[VertexId] {
        &self.orbit_rep
    }

    pub fn same_orbit(&self, u: VertexId, v: VertexId) -> bool {
        self.orbit_rep[u] == self.orbit_rep[v]
    }

    /// The vertex that receives the last canonical label.
    pub fn last_vertex(&self) -> VertexId {
        let n = self.label.len();
        self.label.iter().position(|&l| l == n - 1).expect("label is a permutation")
    }
}

/// Canonical labelling of `g`, respecting the ordered colour classes of
/// `initial` (vertices only map to vertices of the same cell).
pub fn canonical_labeling(g: &Graph, initial: &Partition) -> Result<Labeling, CanonError> {
    let start = refine(g, initial)?;
    Ok(label_from_refined(g, start.into_cells()))
}

pub(crate) fn label_from_refined(g: &Graph, cells: Vec<VertexSet>) -> Labeling {
    let n = g.order();
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        generators: Vec::new(),
        orbit_sizes: Vec::new(),
    };
    let mut path = Vec::new();
    search.descend(cells, &mut path);
    let best = search.best.expect("search reaches at least one leaf");
    let group_order = search
        .orbit_sizes
        .iter()
        .try_fold(1u128, |acc, &s| acc.checked_mul(s as u128));
    let orbit_rep = orbit_representatives(n, search.generators.iter());
    Labeling {
        label: best.label,
        generators: search.generators,
        group_order,
        key: best.key,
        orbit_rep,
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let mut cells = vec![g.vertices()];
    refine_cells(g, &mut cells);
    label_from_refined(g, cells).canonical_form(g)
}

/// Order of the automorphism group.
pub fn automorphism_count(g: &Graph) -> Result<u128, CanonError> {
    canonical_labeling(g, &Partition::unit(g.order()))?
        .group_order
        .ok_or(CanonError::GroupOrderOverflow)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.degree_sequence() == h.degree_sequence()
        && canonical_form(g) == canonical_form(h)
}

struct Leaf {
    path: Vec<VertexId>,
    label: Vec<usize>,
    key: Vec<u64>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<VertexId>>,
    orbit_sizes: Vec<usize>,
}

impl Search<'_> {
    /// Explores the subtree below `cells`. `Some(level)` asks every node
    /// deeper than `level` to return immediately.
    fn descend(&mut self, cells: Vec<VertexSet>, path: &mut Vec<VertexId>) -> Option<usize> {
        if cells.len() == self.n {
            return self.leaf(&cells, path);
        }
        let level = path.len();
        let (target_idx, target) = cells
            .iter()
            .copied()
            .enumerate()
            .max_by(|(i, a), (j, b)| a.len().cmp(&b.len()).then(j.cmp(i)))
            .expect("non-discrete partition has cells");
        let mut explored = VertexSet::EMPTY;
        for v in target {
            if !explored.is_empty() && self.equivalent_to_explored(path, v, explored) {
                continue;
            }
            explored.insert(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target_idx]);
            child.push(VertexSet::singleton(v));
            child.push(target - VertexSet::singleton(v));
            child.extend_from_slice(&cells[target_idx + 1..]);
            refine_cells(self.g, &mut child);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            if let Some(to) = jump {
                if to < level {
                    return jump;
                }
            }
        }
        let first = self.first.as_ref().expect("a leaf was reached");
        if first.path[..level] == path[..] {
            let v0 = first.path[level];
            let reps = orbit_representatives(self.n, self.fixing(path));
            let size = (0..self.n).filter(|&w| reps[w] == reps[v0]).count();
            if self.orbit_sizes.len() <= level {
                self.orbit_sizes.resize(level + 1, 1);
            }
            self.orbit_sizes[level] = size;
        }
        None
    }

    fn fixing<'s>(&'s self, path: &'s [VertexId]) -> impl Iterator<Item = &'s Vec<VertexId>> + 's {
        self.generators
            .iter()
            .filter(move |g| path.iter().all(|&p| g[p] == p))
    }

    fn equivalent_to_explored(&self, path: &[VertexId], v: VertexId, explored: VertexSet) -> bool {
        let reps = orbit_representatives(self.n, self.fixing(path));
        explored.iter().any(|u| reps[u] == reps[v])
    }

    fn leaf(&mut self, cells: &[VertexSet], path: &[VertexId]) -> Option<usize> {
        let mut label = vec![0usize; self.n];
        for (i, c) in cells.iter().enumerate() {
            label[c.first().expect("discrete")] = i;
        }
        let key = leaf_key(self.g, cells);
        let Some(first) = &self.first else {
            let leaf = Leaf { path: path.to_vec(), label, key };
            self.best = Some(Leaf { path: leaf.path.clone(), label: leaf.label.clone(), key: leaf.key.clone() });
            self.first = Some(leaf);
            return None;
        };
        if key == first.key {
            let aut = compose_inverse(&first.label, &label);
            let to = common_prefix(path, &first.path);
            self.push_generator(aut);
            return Some(to);
        }
        let best = self.best.as_ref().expect("set with first");
        match key.cmp(&best.key) {
            Ordering::Less => {
                self.best = Some(Leaf { path: path.to_vec(), label, key });
                None
            }
            Ordering::Equal => {
                let aut = compose_inverse(&best.label, &label);
                let to = common_prefix(path, &best.path);
                self.push_generator(aut);
                Some(to)
            }
            Ordering::Greater => None,
        }
    }

    fn push_generator(&mut self, aut: Vec<VertexId>) {
        debug_assert!(self.g.is_automorphism(&aut));
        if aut.iter().enumerate().any(|(i, &j)| i != j) {
            self.generators.push(aut);
        }
    }
}

/// `γ(v) = λ1⁻¹(λ2(v))`: maps a vertex to the one holding the same label
/// under `lambda1` as `v` holds under `lambda2`.
fn compose_inverse(lambda1: &[usize], lambda2: &[usize]) -> Vec<VertexId> {
    let mut inv = vec![0; lambda1.len()];
    for (v, &l) in lambda1.iter().enumerate() {
        inv[l] = v;
    }
    lambda2.iter().map(|&l| inv[l]).collect()
}

fn common_prefix(a: &[VertexId], b: &[VertexId]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Upper triangle of the relabelled adjacency matrix, one word per column
/// `j`, bit `63 - i` set for an edge `(i, j)` with `i < j`. Comparing these
/// slices orders graphs exactly as their graph6 encodings.
fn leaf_key(g: &Graph, cells: &[VertexSet]) -> Vec<u64> {
    let order: Vec<VertexId> = cells.iter().map(|c| c.first().expect("discrete")).collect();
    let mut key = Vec::with_capacity(order.len());
    for (j, &vj) in order.iter().enumerate() {
        let row = g.row(vj);
        let mut col = 0u64;
        for (i, &vi) in order[..j].iter().enumerate() {
            if row.contains(vi) {
                col |= 1u64 << (63 - i);
            }
        }
        key.push(col);
    }
    key
}

fn orbit_representatives<'a>(n: usize, gens: impl Iterator<Item = &'a Vec<VertexId>>) -> Vec<VertexId> {
    let mut parent: Vec<VertexId> = (0..n).collect();
    fn find(parent: &mut [VertexId], mut x: VertexId) -> VertexId {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for (v, &w) in g.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                // keep the smaller vertex as root
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
