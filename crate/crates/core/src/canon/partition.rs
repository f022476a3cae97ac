use thiserror::Error;

use crate::graph::{Graph, VertexId, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("cell {0} is empty")]
    EmptyCell(usize),
    #[error("vertex {0} appears in more than one cell")]
    Overlap(VertexId),
    #[error("cells do not cover the vertex set (missing {0:?})")]
    NotCovering(VertexSet),
    #[error("vertex {0} is not a vertex of the graph")]
    OutOfRange(VertexId),
}

/// Ordered partition of the vertex set into non-empty cells.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    cells: Vec<VertexSet>,
}

impl Partition {
    /// Single cell holding all `n` vertices.
    pub fn unit(n: usize) -> Self {
        Partition { cells: vec![VertexSet::prefix(n)] }
    }

    /// Validates `cells` as an ordered partition of `0..n`.
    pub fn new(cells: Vec<VertexSet>, n: usize) -> Result<Self, PartitionError> {
        let all = VertexSet::prefix(n);
        let mut seen = VertexSet::EMPTY;
        for (i, &c) in cells.iter().enumerate() {
            if c.is_empty() {
                return Err(PartitionError::EmptyCell(i));
            }
            if let Some(v) = (c - all).first() {
                return Err(PartitionError::OutOfRange(v));
            }
            if let Some(v) = (c & seen).first() {
                return Err(PartitionError::Overlap(v));
            }
            seen |= c;
        }
        if seen != all {
            return Err(PartitionError::NotCovering(all - seen));
        }
        Ok(Partition { cells })
    }

    pub fn cells(&self) -> &[VertexSet] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells.iter().all(|c| c.len() == 1)
    }

    /// Every vertex of a cell has the same number of neighbours in each cell.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        self.cells.iter().all(|&cell| {
            self.cells.iter().all(|&other| {
                let mut counts = cell.iter().map(|v| (g.row(v) & other).len());
                let first = counts.next();
                counts.all(|c| Some(c) == first)
            })
        })
    }

    pub(crate) fn into_cells(self) -> Vec<VertexSet> {
        self.cells
    }

    pub(crate) fn from_cells_unchecked(cells: Vec<VertexSet>) -> Self {
        Partition { cells }
    }
}

/// Coarsest equitable partition at least as fine as `p`.
///
/// Each pass splits every cell by the vector of neighbour counts into the
/// cells present at the start of the pass; the pieces of a cell stay at its
/// position, ordered by ascending count vector.
pub fn refine(g: &Graph, p: &Partition) -> Result<Partition, PartitionError> {
    let p = Partition::new(p.cells.clone(), g.order())?;
    let mut cells = p.into_cells();
    refine_cells(g, &mut cells);
    Ok(Partition::from_cells_unchecked(cells))
}

pub(crate) fn refine_cells(g: &Graph, cells: &mut Vec<VertexSet>) {
    let n = g.order();
    let mut next: Vec<VertexSet> = Vec::with_capacity(n);
    let mut sig = vec![0u8; n * n];
    let mut members: Vec<VertexId> = Vec::with_capacity(n);
    loop {
        if cells.len() == n {
            return;
        }
        let m = cells.len();
        for v in 0..n {
            let row = g.row(v);
            for (j, &c) in cells.iter().enumerate() {
                sig[v * m + j] = (row & c).len() as u8;
            }
        }
        let key = |v: VertexId| &sig[v * m..v * m + m];
        next.clear();
        for &cell in cells.iter() {
            if cell.len() == 1 {
                next.push(cell);
                continue;
            }
            members.clear();
            members.extend(cell.iter());
            members.sort_by(|&a, &b| key(a).cmp(key(b)));
            let mut piece = VertexSet::singleton(members[0]);
            for w in members.windows(2) {
                if key(w[0]) != key(w[1]) {
                    next.push(piece);
                    piece = VertexSet::EMPTY;
                }
                piece.insert(w[1]);
            }
            next.push(piece);
        }
        if next.len() == m {
            return;
        }
        std::mem::swap(cells, &mut next);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{build_h8, cycle, path};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn cycle_is_already_equitable() {
        let g = cycle(5);
        assert_eq!(refine(&g, &Partition::unit(5)).unwrap(), Partition::unit(5));
    }

    #[test]
    fn path_splits_by_degree() {
        let g = path(3);
        let r = refine(&g, &Partition::unit(3)).unwrap();
        assert_eq!(r.cells(), &[set(&[0, 2]), set(&[1])]);
    }

    #[test]
    fn h8_refinement() {
        // hand computation: degrees split {1,2,5,6} < {3} < {0,4}; then the
        // centres stay together and z is alone, leaves keep one cell
        let r = refine(&build_h8(), &Partition::unit(7)).unwrap();
        assert_eq!(r.cells(), &[set(&[1, 2, 5, 6]), set(&[3]), set(&[0, 4])]);
        assert!(r.is_equitable(&build_h8()));
    }

    #[test]
    fn rejects_bad_partitions() {
        let g = cycle(5);
        let bad = Partition { cells: vec![set(&[0, 1]), set(&[1, 2, 3, 4])] };
        assert_eq!(refine(&g, &bad), Err(PartitionError::Overlap(1)));
        let bad = Partition { cells: vec![set(&[0, 1])] };
        assert!(matches!(refine(&g, &bad), Err(PartitionError::NotCovering(_))));
        assert_eq!(Partition::new(vec![VertexSet::EMPTY], 0), Err(PartitionError::EmptyCell(0)));
        assert_eq!(Partition::new(vec![set(&[7])], 5), Err(PartitionError::OutOfRange(7)));
    }
}
