//! Named reference graphs.
//!
//! `g1` and `g2` are the two 4-regular triangle-free graphs with
//! non-adjacent common-neighbour counts exactly `{3, 2, 1}` (orders 11 and 12).
//! `h8` is the 7-vertex double star with degree sequence `3, 3, 2, 1, 1, 1, 1`.

use thiserror::Error;

use crate::graph::Graph;

/// Keys accepted by [`build_named`].
pub const NAMES: [&str; 5] = ["g1", "g2", "h8", "c5", "k44"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown catalog graph {0:?} (known: g1, g2, h8, c5, k44)")]
pub struct UnknownName(pub String);

// Vertex labels follow the drawing coordinates:
// (-6,-2) (-4,1) (-4,-1) (-4,-3) (-4,-5) (-2,3) (0,2) (-2,-7) (0,-6) (2,1) (2,-5)
const G1_EDGES: [(usize, usize); 22] = [
    (0, 1), (0, 2), (0, 3), (0, 4),
    (1, 5), (2, 5), (3, 5),
    (1, 6), (2, 6),
    (2, 7), (1, 9), (3, 10), (3, 7), (4, 7), (7, 9),
    (4, 8), (4, 10), (5, 8), (6, 8), (6, 10),
    (8, 9), (9, 10),
];

// (-1,4) (1,4) (-2,2) (0,2) (2,2) (-4,2) (4,2) (-6,0) (-4,-2) (0,-2) (4,-2) (6,0)
// 5-6 is the arc over the top of the drawing.
const G2_EDGES: [(usize, usize); 24] = [
    (0, 5), (0, 2), (0, 3), (0, 4),
    (1, 2), (1, 3), (1, 4), (1, 6),
    (5, 6), (5, 7),
    (7, 2), (7, 11), (7, 10),
    (8, 5), (8, 3), (8, 11), (8, 9),
    (9, 2), (9, 4), (9, 10),
    (10, 6), (10, 3),
    (11, 6), (11, 4),
];

// 0 = first centre, 1 = x, 2 = y, 3 = z, 4 = second centre, 5 = w, 6 = s
const H8_EDGES: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)];

fn from_table(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("catalog tables are valid")
}

/// The order-11 graph.
pub fn build_g1() -> Graph {
    from_table(11, &G1_EDGES)
}

/// The order-12 graph.
pub fn build_g2() -> Graph {
    from_table(12, &G2_EDGES)
}

pub fn build_h8() -> Graph {
    from_table(7, &H8_EDGES)
}

/// Cycle on `n >= 3` vertices, `i ~ i + 1 (mod n)`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs three vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    from_table(n, &edges)
}

/// Path on `n` vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    from_table(n, &edges)
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    from_table(n, &edges)
}

/// `K_{p,q}` with parts `0..p` and `p..p+q`.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let edges: Vec<_> = (0..p).flat_map(|i| (p..p + q).map(move |j| (i, j))).collect();
    from_table(p + q, &edges)
}

pub fn build_named(name: &str) -> Result<Graph, UnknownName> {
    match name {
        "g1" => Ok(build_g1()),
        "g2" => Ok(build_g2()),
        "h8" => Ok(build_h8()),
        "c5" => Ok(cycle(5)),
        "k44" => Ok(complete_bipartite(4, 4)),
        other => Err(UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g1_shape() {
        let g = build_g1();
        assert_eq!(g.order(), 11);
        assert_eq!(g.edge_count(), 22);
        assert_eq!(g.is_regular(), Some(4));
        assert!(g.is_triangle_free());
        assert_eq!(g.neighbours(0).unwrap().iter().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn g2_shape() {
        let g = build_g2();
        assert_eq!(g.edge_count(), 24);
        assert_eq!(g.is_regular(), Some(4));
        assert!(g.is_triangle_free());
    }

    #[test]
    fn h8_shape() {
        let h = build_h8();
        assert_eq!(h.degree_sequence(), vec![3, 3, 2, 1, 1, 1, 1]);
        assert_eq!(h.edge_count(), 6);
        assert!(h.is_connected());
        assert_eq!(h.independence_number(), Ok(5));
    }

    #[test]
    fn named_dispatch() {
        assert_eq!(build_named("c5").unwrap(), cycle(5));
        assert_eq!(build_named("g2").unwrap(), build_g2());
        assert_eq!(build_named("k44").unwrap().edge_count(), 16);
        assert_eq!(build_named("petersen"), Err(UnknownName("petersen".into())));
        for name in NAMES {
            assert_eq!(build_named(name).unwrap(), build_named(name).unwrap());
        }
    }
}
