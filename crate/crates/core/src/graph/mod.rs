//! Immutable simple graphs over bit-packed adjacency rows.

mod families;
mod graph6;

pub use families::{
    complete, cycle, empty, generalized_book, join, make_multipartite, path, star, turan,
    turan_parts, u_graph, union, y_graph, FamilySpec, YGraphLabels,
};
pub use graph6::{graph6_decode, graph6_encode};

use crate::error::{Error, Result};

pub(crate) const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// Iterate over the indices of set bits in a packed word slice.
pub fn iter_bits(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(wi, &w)| {
        let mut rest = w;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            }
        })
    })
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> usize {
    words.iter().map(|w| w.count_ones() as usize).sum()
}

/// A simple undirected graph on vertices `0..n`.
///
/// Row `i` stores the neighbourhood of `i` as `words_per_row` machine words.
/// Values are immutable; every edit returns a new graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, g6={})", self.n, self.edge_count(), graph6_encode(self))
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let stride = words_for(n);
        Graph {
            n,
            stride,
            rows: vec![0; n * stride],
        }
    }

    /// Builds a graph from an edge list. Loops and out-of-range endpoints are rejected;
    /// repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({a},{b}) out of range for order {n}"
                )));
            }
            if a == b {
                return Err(Error::InvalidInput(format!("loop at vertex {a}")));
            }
            g.set_edge(a, b, true);
        }
        Ok(g)
    }

    /// Builds a graph by evaluating `adjacent(i, j)` for every pair `i < j`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if adjacent(i, j) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    pub(crate) fn set_edge(&mut self, a: usize, b: usize, on: bool) {
        debug_assert!(a != b && a < self.n && b < self.n);
        let (ra, rb) = (a * self.stride, b * self.stride);
        let (wa, ma) = (b / WORD, 1u64 << (b % WORD));
        let (wb, mb) = (a / WORD, 1u64 << (a % WORD));
        if on {
            self.rows[ra + wa] |= ma;
            self.rows[rb + wb] |= mb;
        } else {
            self.rows[ra + wa] &= !ma;
            self.rows[rb + wb] &= !mb;
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.stride
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.rows[a * self.stride + b / WORD] >> (b % WORD) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(self.row(v))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        popcount(&self.rows) / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    /// Edges `(i, j)` with `i < j`, ordered by `i` then `j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 0..self.n {
            for j in self.neighbors(i) {
                if j > i {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Number of common neighbours of `a` and `b`.
    pub fn common_neighbors(&self, a: usize, b: usize) -> usize {
        self.row(a)
            .iter()
            .zip(self.row(b))
            .map(|(x, y)| (x & y).count_ones() as usize)
            .sum()
    }

    pub fn with_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_pair(a, b)?;
        let mut g = self.clone();
        g.set_edge(a, b, true);
        Ok(g)
    }

    pub fn without_edge(&self, a: usize, b: usize) -> Result<Graph> {
        self.check_pair(a, b)?;
        let mut g = self.clone();
        g.set_edge(a, b, false);
        Ok(g)
    }

    /// Applies removals first, then additions.
    pub fn edited(&self, remove: &[(usize, usize)], add: &[(usize, usize)]) -> Result<Graph> {
        let mut g = self.clone();
        for &(a, b) in remove {
            self.check_pair(a, b)?;
            g.set_edge(a, b, false);
        }
        for &(a, b) in add {
            self.check_pair(a, b)?;
            g.set_edge(a, b, true);
        }
        Ok(g)
    }

    fn check_pair(&self, a: usize, b: usize) -> Result<()> {
        if a >= self.n || b >= self.n || a == b {
            return Err(Error::InvalidInput(format!(
                "vertex pair ({a},{b}) invalid for order {}",
                self.n
            )));
        }
        Ok(())
    }

    /// Induced subgraph on `vertices`, relabelled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (j, &b) in vertices.iter().enumerate() {
            for (i, &a) in vertices[..j].iter().enumerate() {
                if self.has_edge(a, b) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// The graph with vertex `v` deleted; higher labels shift down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&x| x != v).collect();
        self.induced(&keep)
    }

    /// Relabels so that new vertex `k` is old vertex `order[k]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if order.len() != self.n {
            return Err(Error::InvalidInput("relabelling has wrong length".into()));
        }
        for &v in order {
            if v >= self.n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidInput("relabelling is not a permutation".into()));
            }
        }
        Ok(self.induced(order))
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |i, j| !self.has_edge(i, j))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut head = 0;
            while head < members.len() {
                let v = members[head];
                head += 1;
                for w in self.neighbors(v) {
                    if comp[w] == usize::MAX {
                        comp[w] = id;
                        members.push(w);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Checks symmetry, absence of loops and clean padding bits.
    pub fn check_invariants(&self) -> bool {
        let tail = self.n % WORD;
        for i in 0..self.n {
            if self.has_edge(i, i) {
                return false;
            }
            if tail != 0 && self.row(i)[self.stride - 1] >> tail != 0 {
                return false;
            }
            for j in self.neighbors(i) {
                if !self.has_edge(j, i) {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_edge_bookkeeping() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (1, 0)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degrees(), vec![1, 2, 2, 1]);
        assert!(g.check_invariants());
        assert_eq!(g.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn edits_do_not_touch_the_original() {
        let g = path(4);
        let h = g.with_edge(0, 3).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(h.edge_count(), 4);
        assert_eq!(h.without_edge(0, 3).unwrap(), g);
    }

    #[test]
    fn large_order_spans_several_words() {
        let g = complete(130);
        assert_eq!(g.words_per_row(), 3);
        assert_eq!(g.edge_count(), 130 * 129 / 2);
        assert!(g.check_invariants());
        assert_eq!(g.common_neighbors(0, 129), 128);
    }

    #[test]
    fn components_and_induced() {
        let g = union(&path(3), &complete(2));
        assert_eq!(g.components(), vec![vec![0, 1, 2], vec![3, 4]]);
        assert!(!g.is_connected());
        let h = g.induced(&[2, 1, 0]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.remove_vertex(1).edge_count(), 1);
    }
}
