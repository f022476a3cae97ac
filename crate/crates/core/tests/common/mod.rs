#![allow(dead_code)]

use qsrgraph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random `k`-regular graph by the pairing model with restarts. Dense
/// degrees are built as complements of sparse ones.
pub fn random_regular<R: Rng>(rng: &mut R, n: usize, k: usize) -> Graph {
    assert!(n * k % 2 == 0 && k < n);
    if 2 * k > n - 1 {
        let h = random_regular(rng, n, n - 1 - k);
        let edges: Vec<_> = (1..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|&(i, j)| !h.has_edge(i, j))
            .collect();
        return Graph::new(n, &edges).unwrap();
    }
    'retry: loop {
        let mut points: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        points.shuffle(rng);
        let mut edges = Vec::new();
        for pair in points.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || edges.contains(&(u, v)) {
                continue 'retry;
            }
            edges.push((u, v));
        }
        return Graph::new(n, &edges).unwrap();
    }
}

/// Calls `f` on every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize]) -> bool) {
    let mut p: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    if !f(&p) {
        return;
    }
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            if !f(&p) {
                return;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut found = false;
    for_each_permutation(g.order(), |p| {
        found = g.permute(p) == *h;
        !found
    });
    found
}

/// Automorphism count by trying every permutation.
pub fn brute_automorphisms(g: &Graph) -> u128 {
    let mut count = 0;
    for_each_permutation(g.order(), |p| {
        if g.is_automorphism(p) {
            count += 1;
        }
        true
    });
    count
}

/// Graph on the first `m` vertices of `g`.
pub fn prefix(g: &Graph, m: usize) -> Graph {
    let edges: Vec<_> = g.edges().filter(|&(_, v)| v < m).collect();
    Graph::new(m, &edges).unwrap()
}
