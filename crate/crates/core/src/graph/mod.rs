//! Compact undirected simple graphs on at most 64 vertices.
//!
//! Adjacency is stored as one [`VertexSet`] row per vertex, so neighbourhood
//! intersections and common-neighbour counts are a single `AND` + popcount.
//! A [`Graph`] is immutable once built; incremental construction goes through
//! [`GraphBuilder`].

mod graph6;
mod independent;
mod vertex_set;

use std::fmt;

use thiserror::Error;

pub use graph6::{read_graph6_lines, Graph6Error};
pub use independent::INDEPENDENCE_LIMIT;
pub use vertex_set::{Iter as VertexSetIter, VertexId, VertexSet, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("self loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("order {0} exceeds the capacity of {MAX_ORDER} vertices")]
    CapacityExceeded(usize),
    #[error("a graph needs at least one vertex")]
    Empty,
    #[error("expected two distinct vertices, got {0} twice")]
    SameVertex(VertexId),
    #[error("order {order} is above the limit of {limit} for this operation")]
    TooLarge { order: usize, limit: usize },
    #[error("row {0} lists {1} but row {1} does not list {0}")]
    Asymmetric(VertexId, VertexId),
    #[error("vertex sets overlap")]
    OverlappingSets,
}

/// Undirected simple graph with `1 <= n <= 64` vertices.
///
/// Invariants (checked at construction): rows are symmetric, no vertex is its
/// own neighbour and no row mentions a vertex `>= n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: [VertexSet; MAX_ORDER],
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    /// Builds a graph straight from adjacency rows, validating every invariant.
    pub fn from_rows(rows: &[VertexSet]) -> Result<Graph, GraphError> {
        let n = rows.len();
        check_order(n)?;
        let mut adj = [VertexSet::EMPTY; MAX_ORDER];
        for (u, &row) in rows.iter().enumerate() {
            if let Some(v) = (row - VertexSet::prefix(n)).first() {
                return Err(GraphError::VertexOutOfRange { vertex: v, order: n });
            }
            if row.contains(u) {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u] = row;
        }
        for u in 0..n {
            if let Some(v) = adj[u].iter().find(|&v| !adj[v].contains(u)) {
                return Err(GraphError::Asymmetric(u, v));
            }
        }
        Ok(Graph { n, adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Adjacency rows, one per vertex.
    #[inline]
    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.n]
    }

    /// Neighbourhood row of `v`.
    ///
    /// # Panics
    /// When `v >= order`, like slice indexing. Use [`Graph::neighbours`] for a
    /// checked lookup.
    #[inline]
    pub fn row(&self, v: VertexId) -> VertexSet {
        self.rows()[v]
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn neighbours(&self, v: VertexId) -> Result<VertexSet, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    /// `|N(u) ∩ N(v)|` for two distinct vertices.
    pub fn common_neighbours(&self, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        Ok(self.common(u, v))
    }

    #[inline]
    pub(crate) fn common(&self, u: VertexId, v: VertexId) -> usize {
        (self.adj[u] & self.adj[v]).len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.rows().iter().map(|r| r.len()).collect()
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The common degree `k` when every vertex has degree `k`.
    pub fn is_regular(&self) -> Option<usize> {
        let k = self.adj[0].len();
        self.rows().iter().all(|r| r.len() == k).then_some(k)
    }

    pub fn is_triangle_free(&self) -> bool {
        self.edges().all(|(u, v)| self.adj[u].is_disjoint(self.adj[v]))
    }

    /// Whether no two members of `s` are adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            frontier = next - seen;
            seen |= next;
        }
        seen == self.vertices()
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.n).flat_map(move |u| {
            (self.adj[u] - VertexSet::prefix(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Number of edges with one end in `a` and the other in `b`.
    pub fn cut_size(&self, a: VertexSet, b: VertexSet) -> Result<usize, GraphError> {
        let outside = (a | b) - self.vertices();
        if let Some(v) = outside.first() {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: self.n });
        }
        if !a.is_disjoint(b) {
            return Err(GraphError::OverlappingSets);
        }
        Ok(a.iter().map(|v| (self.adj[v] & b).len()).sum())
    }

    /// Relabels the graph: vertex `v` becomes `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..order`.
    pub fn permute(&self, perm: &[VertexId]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut seen = VertexSet::EMPTY;
        for &p in perm {
            assert!(p < self.n && !seen.contains(p), "not a permutation");
            seen.insert(p);
        }
        let mut adj = [VertexSet::EMPTY; MAX_ORDER];
        for u in 0..self.n {
            adj[perm[u]] = self.adj[u].iter().map(|v| perm[v]).collect();
        }
        Graph { n: self.n, adj }
    }

    /// Whether `perm` maps the edge set onto itself.
    pub fn is_automorphism(&self, perm: &[VertexId]) -> bool {
        perm.len() == self.n
            && (0..self.n).all(|u| {
                let image: VertexSet = self.adj[u].iter().map(|v| perm[v]).collect();
                image == self.adj[perm[u]]
            })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_graph6())
    }
}

fn check_order(n: usize) -> Result<(), GraphError> {
    match n {
        0 => Err(GraphError::Empty),
        n if n > MAX_ORDER => Err(GraphError::CapacityExceeded(n)),
        _ => Ok(()),
    }
}

/// Mutable construction buffer for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    adj: [VertexSet; MAX_ORDER],
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        check_order(n)?;
        Ok(GraphBuilder { n, adj: [VertexSet::EMPTY; MAX_ORDER] })
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { n: g.n, adj: g.adj }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange { vertex: w, order: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Appends a new vertex adjacent to `neighbours` and returns its id.
    pub fn push_vertex(&mut self, neighbours: VertexSet) -> Result<VertexId, GraphError> {
        let w = self.n;
        if w == MAX_ORDER {
            return Err(GraphError::CapacityExceeded(w + 1));
        }
        if let Some(v) = (neighbours - VertexSet::prefix(w)).first() {
            return Err(GraphError::VertexOutOfRange { vertex: v, order: w });
        }
        self.n += 1;
        self.adj[w] = neighbours;
        for v in neighbours {
            self.adj[v].insert(w);
        }
        Ok(w)
    }

    pub fn build(self) -> Graph {
        Graph { n: self.n, adj: self.adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn k44() -> Graph {
        let edges: Vec<_> = (0..4).flat_map(|u| (4..8).map(move |v| (u, v))).collect();
        Graph::new(8, &edges).unwrap()
    }

    #[test]
    fn make_graph_errors() {
        assert_eq!(Graph::new(2, &[(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
        assert_eq!(Graph::new(65, &[]), Err(GraphError::CapacityExceeded(65)));
        assert_eq!(Graph::new(0, &[]), Err(GraphError::Empty));
    }

    #[test]
    fn duplicates_collapse() {
        let g = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn cycle_basics() {
        let g = c5();
        assert_eq!(g.degree(0), Ok(2));
        assert_eq!(g.neighbours(0).unwrap().iter().collect::<Vec<_>>(), vec![1, 4]);
        assert_eq!(g.common_neighbours(0, 2), Ok(1));
        assert_eq!(g.common_neighbours(0, 0), Err(GraphError::SameVertex(0)));
        assert!(g.degree(5).is_err());
        assert_eq!(g.is_regular(), Some(2));
        assert!(g.is_triangle_free());
        assert!(g.is_connected());
    }

    #[test]
    fn small_cases() {
        let single = Graph::empty(1).unwrap();
        assert_eq!(single.degree(0), Ok(0));
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.neighbours(1).unwrap().iter().collect::<Vec<_>>(), vec![0]);
        let p3 = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.is_regular(), None);
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!k3.is_triangle_free());
    }

    #[test]
    fn bipartite_common_neighbours() {
        assert_eq!(k44().common_neighbours(0, 1), Ok(4));
    }

    #[test]
    fn cut_sizes() {
        let g = c5();
        let s = |v: &[usize]| v.iter().copied().collect::<VertexSet>();
        assert_eq!(g.cut_size(s(&[0]), s(&[2, 3])), Ok(0));
        assert_eq!(g.cut_size(s(&[0]), s(&[0, 1])), Err(GraphError::OverlappingSets));
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.cut_size(s(&[0]), s(&[1])), Ok(1));
    }

    #[test]
    fn permute_and_automorphism() {
        let g = c5();
        let rot = [2, 3, 4, 0, 1];
        assert_eq!(g.permute(&rot), g);
        assert!(g.is_automorphism(&rot));
        assert!(!g.is_automorphism(&[1, 0, 2, 3, 4]));
    }

    #[test]
    fn builder_push_vertex() {
        let mut b = GraphBuilder::new(1).unwrap();
        b.push_vertex(VertexSet::singleton(0)).unwrap();
        let w = b.push_vertex([0, 1].into_iter().collect()).unwrap();
        assert_eq!(w, 2);
        let g = b.build();
        assert_eq!(g.edge_count(), 3);
        let mut b = GraphBuilder::new(2).unwrap();
        assert!(b.push_vertex(VertexSet::singleton(2)).is_err());
    }

    #[test]
    fn from_rows_validates() {
        let rows = [VertexSet::singleton(1), VertexSet::singleton(0)];
        let g = Graph::from_rows(&rows).unwrap();
        assert!(g.has_edge(1, 0));
        assert_eq!(
            Graph::from_rows(&[VertexSet::singleton(1), VertexSet::EMPTY]),
            Err(GraphError::Asymmetric(0, 1))
        );
        assert_eq!(
            Graph::from_rows(&[VertexSet::singleton(0)]),
            Err(GraphError::SelfLoop(0))
        );
    }
}
