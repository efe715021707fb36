//! Constructors for the graph families used throughout the crate.
//!
//! Labelling is fixed: blocks of a multipartite graph occupy consecutive
//! index ranges in declaration order, and a join places the left operand first.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

pub fn empty(n: usize) -> Graph {
    Graph::empty(n)
}

pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |i, j| j == i + 1)
}

/// Cycle `0-1-…-(n-1)-0`; requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!("cycle needs n >= 3, got {n}")));
    }
    Ok(Graph::from_fn(n, |i, j| j == i + 1 || (i == 0 && j == n - 1)))
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Graph {
    Graph::from_fn(leaves + 1, |i, _| i == 0)
}

fn block_of(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(b, &size)| std::iter::repeat_n(b, size))
        .collect()
}

/// Complete multipartite graph with the given part sizes.
pub fn make_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() {
        return Err(Error::InvalidSpec("multipartite graph needs at least one part".into()));
    }
    if let Some(i) = parts.iter().position(|&p| p == 0) {
        return Err(Error::InvalidSpec(format!("part {i} has size 0")));
    }
    let block = block_of(parts);
    Ok(Graph::from_fn(block.len(), |i, j| block[i] != block[j]))
}

/// Part sizes of `T_r(n)`: the `n mod r` larger parts come first.
pub fn turan_parts(r: usize, n: usize) -> Result<Vec<usize>> {
    if r < 1 || r > n {
        return Err(Error::InvalidSpec(format!("turan graph needs 1 <= r <= n, got r={r}, n={n}")));
    }
    let (q, s) = (n / r, n % r);
    Ok((0..r).map(|i| if i < s { q + 1 } else { q }).collect())
}

pub fn turan(r: usize, n: usize) -> Result<Graph> {
    make_multipartite(&turan_parts(r, n)?)
}

/// Join: disjoint union of `g` (first) and `h` plus every cross edge.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let a = g.order();
    Graph::from_fn(a + h.order(), |i, j| {
        if j < a {
            g.has_edge(i, j)
        } else if i >= a {
            h.has_edge(i - a, j - a)
        } else {
            true
        }
    })
}

pub fn union(g: &Graph, h: &Graph) -> Graph {
    let a = g.order();
    Graph::from_fn(a + h.order(), |i, j| {
        if j < a {
            g.has_edge(i, j)
        } else if i >= a {
            h.has_edge(i - a, j - a)
        } else {
            false
        }
    })
}

/// `B_{r,k}`: the clique occupies `0..r`, the pages `r..r+k`.
pub fn generalized_book(r: usize, k: usize) -> Result<Graph> {
    if r < 2 || k < 1 {
        return Err(Error::InvalidSpec(format!("book needs r >= 2 and k >= 1, got r={r}, k={k}")));
    }
    Ok(join(&complete(r), &empty(k)))
}

/// Where the distinguished vertices of `Y_r(n)` live.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct YGraphLabels {
    pub parts: Vec<usize>,
    /// Index into `parts` of the smaller part `T_1`.
    pub t1: usize,
    /// Index into `parts` of the larger part `T_2` holding the new edge.
    pub t2: usize,
    /// `T_1`'s first vertex, the only `T_1` neighbour of `u`.
    pub v: usize,
    pub u: usize,
    pub w: usize,
}

impl YGraphLabels {
    pub fn new(r: usize, n: usize) -> Result<Self> {
        if r < 2 || n < 2 * r {
            return Err(Error::InvalidSpec(format!("Y graph needs r >= 2 and n >= 2r, got r={r}, n={n}")));
        }
        let parts = turan_parts(r, n)?;
        let s = n % r;
        let (t1, t2) = if s == 0 { (0, 1) } else { (s, 0) };
        let start = |b: usize| parts[..b].iter().sum::<usize>();
        let v = start(t1);
        let u = start(t2);
        Ok(YGraphLabels { parts, t1, t2, v, u, w: u + 1 })
    }

    pub fn block_range(&self, b: usize) -> std::ops::Range<usize> {
        let s = self.parts[..b].iter().sum::<usize>();
        s..s + self.parts[b]
    }
}

/// `Y_r(n)`: `T_r(n)` plus an edge `uw` inside `T_2`, with `u` keeping a single
/// `T_1` neighbour `v` and `w` losing exactly `v`.
pub fn y_graph(r: usize, n: usize) -> Result<Graph> {
    let labels = YGraphLabels::new(r, n)?;
    let mut g = make_multipartite(&labels.parts)?;
    g.set_edge(labels.u, labels.w, true);
    for z in labels.block_range(labels.t1) {
        if z != labels.v {
            g.set_edge(labels.u, z, false);
        }
    }
    g.set_edge(labels.w, labels.v, false);
    Ok(g)
}

/// Triangle on `{0,1,2}` with `m - 3` pendant vertices hanging off vertex 0.
pub fn u_graph(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::InvalidSpec(format!("U graph needs m >= 3, got {m}")));
    }
    Ok(Graph::from_fn(m, |i, j| i == 0 || j <= 2))
}

/// A named family member, as accepted by the command line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum FamilySpec {
    Complete { n: usize },
    Multipartite { parts: Vec<usize> },
    Turan { r: usize, n: usize },
    Book { r: usize, k: usize },
    Ygraph { r: usize, n: usize },
    Ugraph { m: usize },
    Join { left: Box<FamilySpec>, right: Box<FamilySpec> },
    Union { left: Box<FamilySpec>, right: Box<FamilySpec> },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Complete { n } => Ok(complete(*n)),
            FamilySpec::Multipartite { parts } => make_multipartite(parts),
            FamilySpec::Turan { r, n } => turan(*r, *n),
            FamilySpec::Book { r, k } => generalized_book(*r, *k),
            FamilySpec::Ygraph { r, n } => y_graph(*r, *n),
            FamilySpec::Ugraph { m } => u_graph(*m),
            FamilySpec::Join { left, right } => Ok(join(&left.build()?, &right.build()?)),
            FamilySpec::Union { left, right } => Ok(union(&left.build()?, &right.build()?)),
        }
    }
}
