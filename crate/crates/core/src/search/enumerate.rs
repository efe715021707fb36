//! Orderly generation of all graphs of a given order up to isomorphism.
//!
//! Every canonical graph with at least one edge has a canonical parent,
//! obtained by deleting the edge at its last set position, so a depth-first
//! walk that only adds edges past the last set position and keeps canonical
//! children reaches each isomorphism class exactly once.

use rayon::prelude::*;

use super::canon::is_canonical;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by exhaustive enumeration.
pub const MAX_ENUM_ORDER: usize = 10;

/// Subtrees rooted at this many edges are handed to the thread pool.
const SPLIT_DEPTH: usize = 5;

#[derive(Clone, Copy, Debug, Default)]
pub struct EnumOptions {
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
}

fn positions(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

struct Walker<'a, P> {
    pairs: Vec<(usize, usize)>,
    prune: &'a P,
}

impl<P: Fn(&Graph) -> bool + Sync> Walker<'_, P> {
    /// Canonical children of `g`, whose last set position is `last`.
    fn children(&self, g: &Graph, last: Option<usize>) -> Vec<(Graph, usize)> {
        let start = last.map_or(0, |p| p + 1);
        let mut out = Vec::new();
        for p in start..self.pairs.len() {
            let (i, j) = self.pairs[p];
            let mut h = g.clone();
            h.set_edge(i, j, true);
            if is_canonical(&h).expect("order checked") && !(self.prune)(&h) {
                out.push((h, p));
            }
        }
        out
    }

    fn walk<T>(&self, g: &Graph, last: Option<usize>, acc: T, fold: &impl Fn(T, &Graph) -> T) -> T {
        let mut acc = fold(acc, g);
        for (h, p) in self.children(g, last) {
            acc = self.walk(&h, Some(p), acc, fold);
        }
        acc
    }

    /// Visits the tree above `SPLIT_DEPTH` in preorder, collecting the roots
    /// of deeper subtrees in the order they would have been visited.
    fn frontier(&self, g: &Graph, last: Option<usize>, depth: usize, out: &mut Vec<Task>) {
        if depth == SPLIT_DEPTH {
            out.push(Task::Subtree(g.clone(), last));
            return;
        }
        out.push(Task::Single(g.clone()));
        for (h, p) in self.children(g, last) {
            self.frontier(&h, Some(p), depth + 1, out);
        }
    }
}

enum Task {
    Single(Graph),
    Subtree(Graph, Option<usize>),
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ENUM_ORDER {
        return Err(Error::Feasibility(format!(
            "exhaustive enumeration supports n <= {MAX_ENUM_ORDER}, got {n}"
        )));
    }
    Ok(())
}

/// Folds over every graph of order `n` in a fixed preorder.
///
/// `prune` must be monotone under edge addition: when it returns true the
/// graph and all of its descendants are skipped. The per-subtree results are
/// combined left to right with `reduce`, so the outcome does not depend on
/// the number of threads as long as `reduce` is associative.
pub fn fold_graphs<T, ID, FO, RE, P>(
    n: usize,
    opts: &EnumOptions,
    prune: &P,
    identity: ID,
    fold: FO,
    reduce: RE,
) -> Result<T>
where
    T: Send,
    ID: Fn() -> T + Sync,
    FO: Fn(T, &Graph) -> T + Sync,
    RE: Fn(T, T) -> T + Sync,
    P: Fn(&Graph) -> bool + Sync,
{
    check_order(n)?;
    let walker = Walker { pairs: positions(n), prune };
    let root = Graph::empty(n);
    if prune(&root) {
        return Ok(identity());
    }
    let mut tasks = Vec::new();
    walker.frontier(&root, None, 0, &mut tasks);
    let run = |t: &Task| match t {
        Task::Single(g) => fold(identity(), g),
        Task::Subtree(g, last) => walker.walk(g, *last, identity(), &fold),
    };
    let parts: Vec<T> = if opts.jobs == 1 {
        tasks.iter().map(run).collect()
    } else {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if opts.jobs > 0 {
            builder = builder.num_threads(opts.jobs);
        }
        let pool = builder
            .build()
            .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
        pool.install(|| tasks.par_iter().map(run).collect())
    };
    Ok(parts.into_iter().fold(identity(), reduce))
}

/// All graphs of order `n`, one per isomorphism class, in canonical form.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_filtered(n, &EnumOptions::default(), &|_: &Graph| false)
}

pub fn enumerate_filtered<P>(n: usize, opts: &EnumOptions, prune: &P) -> Result<Vec<Graph>>
where
    P: Fn(&Graph) -> bool + Sync,
{
    fold_graphs(
        n,
        opts,
        prune,
        Vec::new,
        |mut v, g| {
            v.push(g.clone());
            v
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    )
}

pub fn count_graphs(n: usize, opts: &EnumOptions) -> Result<u64> {
    fold_graphs(n, opts, &|_: &Graph| false, || 0u64, |c, _| c + 1, |a, b| a + b)
}
