//! Exact maximum independent set by branch and bound.

use super::{Graph, GraphError, VertexSet};

/// Largest order accepted by [`Graph::independence_number`].
pub const INDEPENDENCE_LIMIT: usize = 40;

impl Graph {
    /// Independence number `α(G)`.
    ///
    /// Errors with [`GraphError::TooLarge`] above [`INDEPENDENCE_LIMIT`] vertices.
    pub fn independence_number(&self) -> Result<usize, GraphError> {
        Ok(self.maximum_independent_set()?.len())
    }

    /// One maximum independent set (the first one found by the search).
    pub fn maximum_independent_set(&self) -> Result<VertexSet, GraphError> {
        if self.order() > INDEPENDENCE_LIMIT {
            return Err(GraphError::TooLarge {
                order: self.order(),
                limit: INDEPENDENCE_LIMIT,
            });
        }
        let mut search = Search { g: self, best: VertexSet::EMPTY };
        search.expand(VertexSet::EMPTY, self.vertices());
        Ok(search.best)
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl Search<'_> {
    fn expand(&mut self, mut chosen: VertexSet, mut cand: VertexSet) {
        // isolated candidates belong to some maximum extension
        let isolated: VertexSet = cand
            .iter()
            .filter(|&v| self.g.row(v).is_disjoint(cand))
            .collect();
        chosen |= isolated;
        cand = cand - isolated;
        if cand.is_empty() {
            if chosen.len() > self.best.len() {
                self.best = chosen;
            }
            return;
        }
        if chosen.len() + clique_cover_bound(self.g, cand) <= self.best.len() {
            return;
        }
        let v = cand
            .iter()
            .max_by_key(|&v| (self.g.row(v) & cand).len())
            .expect("non-empty");
        let mut with_v = chosen;
        with_v.insert(v);
        self.expand(with_v, cand - self.g.row(v) - VertexSet::singleton(v));
        let mut without = cand;
        without.remove(v);
        self.expand(chosen, without);
    }
}

/// Greedy partition of `cand` into cliques; an independent set meets each
/// clique at most once.
fn clique_cover_bound(g: &Graph, mut cand: VertexSet) -> usize {
    let mut cliques = 0;
    while let Some(v) = cand.first() {
        cand.remove(v);
        let mut common = g.row(v) & cand;
        while let Some(w) = common.first() {
            cand.remove(w);
            common &= g.row(w);
        }
        cliques += 1;
    }
    cliques
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn brute_force_alpha(g: &Graph) -> usize {
        let n = g.order();
        (0u64..1 << n)
            .map(VertexSet::from_bits)
            .filter(|&s| g.is_independent(s))
            .map(|s| s.len())
            .max()
            .unwrap()
    }

    #[test]
    fn known_values() {
        let c5 = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(c5.independence_number(), Ok(2));
        let edges: Vec<_> = (0..4).flat_map(|u| (4..8).map(move |v| (u, v))).collect();
        let k44 = Graph::new(8, &edges).unwrap();
        assert_eq!(k44.independence_number(), Ok(4));
        assert_eq!(Graph::empty(40).unwrap().independence_number(), Ok(40));
        assert_eq!(
            Graph::empty(41).unwrap().independence_number(),
            Err(GraphError::TooLarge { order: 41, limit: 40 })
        );
    }

    #[test]
    fn result_is_independent() {
        let edges: Vec<_> = (0..30).map(|i| (i, (i + 1) % 30)).collect();
        let cycle = Graph::new(30, &edges).unwrap();
        let s = cycle.maximum_independent_set().unwrap();
        assert!(cycle.is_independent(s));
        assert_eq!(s.len(), 15);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut it = bits.into_iter();
                for j in 1..n {
                    for i in 0..j {
                        if it.next().unwrap() {
                            edges.push((i, j));
                        }
                    }
                }
                Graph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_subset_enumeration(g in arb_graph(16)) {
            prop_assert_eq!(g.independence_number().unwrap(), brute_force_alpha(&g));
        }
    }
}
