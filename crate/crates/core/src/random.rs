//! Seeded random graphs and vectors for property suites.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

use crate::graph::Graph;

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp(rng: &mut Rng64, n: usize, p: f64) -> Graph {
    Graph::from_fn(n, |_, _| rng.gen_bool(p))
}

/// Random `r`-partite graph: each vertex gets a uniform part, cross pairs
/// are edges with probability `p`. Returns the part assignment as well.
pub fn r_partite(rng: &mut Rng64, n: usize, r: usize, p: f64) -> (Graph, Vec<usize>) {
    let part: Vec<usize> = (0..n).map(|_| rng.gen_range(0..r)).collect();
    let g = Graph::from_fn(n, |i, j| part[i] != part[j] && rng.gen_bool(p));
    (g, part)
}

/// Connected graph: a random recursive tree plus `G(n, p)` extra edges.
pub fn connected(rng: &mut Rng64, n: usize, p: f64) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut tree = vec![Vec::new(); n];
    for k in 1..n {
        let parent = labels[rng.gen_range(0..k)];
        tree[labels[k]].push(parent);
    }
    Graph::from_fn(n, |i, j| tree[i].contains(&j) || tree[j].contains(&i) || rng.gen_bool(p))
}

/// Vector with entries uniform in `[-1, 1)`.
pub fn vector(rng: &mut Rng64, n: usize) -> Vec<f64> {
    (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect()
}
