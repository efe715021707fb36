//! Canonical labelling by maximal graph6 bit string.
//!
//! A labelling is scored by its upper-triangle bits in graph6 column order
//! `(0,1),(0,2),(1,2),(0,3),…`; the canonical form is the labelling with the
//! lexicographically largest string. Labellings are built one position at a
//! time, so column `k` depends only on the first `k + 1` choices and every
//! prefix can be compared immediately. Unplaced twins (vertices with equal
//! neighbourhoods up to each other) are interchangeable and only one of them
//! is tried at each level.

use crate::error::{Error, Result};
use crate::graph::{graph6_encode, Graph};

pub const MAX_CANON_ORDER: usize = 64;

struct Canon {
    n: usize,
    adj: Vec<u64>,
    twin: Vec<usize>,
}

impl Canon {
    fn new(g: &Graph) -> Result<Self> {
        let n = g.order();
        if n > MAX_CANON_ORDER {
            return Err(Error::Feasibility(format!(
                "canonical labelling supports n <= {MAX_CANON_ORDER}, got {n}"
            )));
        }
        let adj: Vec<u64> = (0..n).map(|v| if n == 0 { 0 } else { g.row(v)[0] }).collect();
        let twin = (0..n)
            .map(|a| {
                (0..a)
                    .find(|&b| adj[a] & !(1 << b) == adj[b] & !(1 << a))
                    .unwrap_or(a)
            })
            .collect();
        Ok(Canon { n, adj, twin })
    }

    #[inline]
    fn edge(&self, a: usize, b: usize) -> u64 {
        self.adj[a] >> b & 1
    }

    /// Columns of the identity labelling.
    fn own_columns(&self) -> Vec<u64> {
        (0..self.n)
            .map(|k| (0..k).fold(0u64, |acc, i| (acc << 1) | self.edge(i, k)))
            .collect()
    }

    /// Candidates at the current level, one per twin class.
    fn candidates(&self, used: u64) -> Vec<usize> {
        let mut tried_class = 0u64;
        let mut out = Vec::new();
        for c in 0..self.n {
            if used >> c & 1 == 1 {
                continue;
            }
            let class = self.twin[c];
            if tried_class >> class & 1 == 1 {
                continue;
            }
            tried_class |= 1 << class;
            out.push(c);
        }
        out
    }

    fn advance(&self, cols: &[u64], used: u64, placed: usize) -> Vec<u64> {
        let mut next = cols.to_vec();
        for (x, col) in next.iter_mut().enumerate() {
            if used >> x & 1 == 0 {
                *col = (*col << 1) | self.edge(placed, x);
            }
        }
        next
    }

    /// True if some labelling beats `own` lexicographically.
    fn beaten(&self, own: &[u64], k: usize, used: u64, cols: &[u64]) -> bool {
        if k == self.n {
            return false;
        }
        let target = own[k];
        let cands = self.candidates(used);
        if cands.iter().any(|&c| cols[c] > target) {
            return true;
        }
        for c in cands {
            if cols[c] == target {
                let used2 = used | 1 << c;
                if self.beaten(own, k + 1, used2, &self.advance(cols, used2, c)) {
                    return true;
                }
            }
        }
        false
    }

    fn maximise(
        &self,
        k: usize,
        used: u64,
        cols: &[u64],
        cur: &mut Vec<u64>,
        order: &mut Vec<usize>,
        best: &mut Option<(Vec<u64>, Vec<usize>)>,
    ) {
        if k == self.n {
            if best.as_ref().is_none_or(|(b, _)| cur.as_slice() > b.as_slice()) {
                *best = Some((cur.clone(), order.clone()));
            }
            return;
        }
        let cands = self.candidates(used);
        let top = cands.iter().map(|&c| cols[c]).max().expect("unplaced vertices remain");
        if let Some((b, _)) = best.as_ref() {
            let mine = cur.iter().chain(std::iter::once(&top));
            if mine.cmp(b[..=k].iter()) == std::cmp::Ordering::Less {
                return;
            }
        }
        for c in cands {
            if cols[c] != top {
                continue;
            }
            let used2 = used | 1 << c;
            let next = self.advance(cols, used2, c);
            cur.push(top);
            order.push(c);
            self.maximise(k + 1, used2, &next, cur, order, best);
            cur.pop();
            order.pop();
        }
    }
}

/// Whether `g` already carries its canonical labelling.
pub fn is_canonical(g: &Graph) -> Result<bool> {
    let c = Canon::new(g)?;
    let own = c.own_columns();
    Ok(!c.beaten(&own, 0, 0, &vec![0; c.n]))
}

/// Canonical labelling: entry `k` is the original vertex placed at position `k`.
pub fn canonical_labelling(g: &Graph) -> Result<Vec<usize>> {
    let c = Canon::new(g)?;
    if c.n == 0 {
        return Ok(Vec::new());
    }
    let mut best = None;
    c.maximise(0, 0, &vec![0; c.n], &mut Vec::new(), &mut Vec::new(), &mut best);
    Ok(best.expect("a labelling exists").1)
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let order = canonical_labelling(g)?;
    g.relabel(&order)
}

/// graph6 string of the canonical form.
pub fn canonical_graph6(g: &Graph) -> Result<String> {
    Ok(graph6_encode(&canonical_form(g)?))
}

fn degree_profile(g: &Graph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    if a.order() != b.order() || a.edge_count() != b.edge_count() || degree_profile(a) != degree_profile(b) {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
