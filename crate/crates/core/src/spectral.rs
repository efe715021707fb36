//! Spectral radius, Perron vectors and the classical spectral inequalities.
//!
//! The eigensolver is power iteration on `A + I`. The unit shift makes the
//! Perron root strictly dominant in modulus even for bipartite graphs, whose
//! adjacency spectrum is symmetric about zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{iter_bits, Graph};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const HIGH_PRECISION_TOL: f64 = 1e-13;
pub const DEFAULT_MAX_ITER: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralOptions {
    /// Stop once `max |A x - ρ x| <= tol` with `max x = 1`.
    pub tol: f64,
    pub max_iter: usize,
    /// Seeds the perturbation of the all-ones start vector.
    pub seed: u64,
    /// Compensated (Neumaier) summation in products and dot products.
    pub compensated: bool,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        SpectralOptions {
            tol: DEFAULT_TOL,
            max_iter: DEFAULT_MAX_ITER,
            seed: 0,
            compensated: false,
        }
    }
}

impl SpectralOptions {
    pub fn with_tol(tol: f64) -> Self {
        SpectralOptions {
            tol,
            ..Default::default()
        }
    }

    /// Settings used to separate near-ties during extremal search.
    pub fn high_precision() -> Self {
        SpectralOptions {
            tol: HIGH_PRECISION_TOL,
            compensated: true,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralResult {
    pub rho: f64,
    /// Perron vector scaled to max entry 1; zero off the winning component.
    pub vector: Vec<f64>,
    pub residual: f64,
    pub iterations: usize,
    pub disconnected: bool,
}

#[derive(Default)]
struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    #[inline]
    fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

fn matvec(g: &Graph, x: &[f64], y: &mut [f64], compensated: bool) {
    for (i, yi) in y.iter_mut().enumerate() {
        if compensated {
            let mut acc = Neumaier::default();
            for j in iter_bits(g.row(i)) {
                acc.add(x[j]);
            }
            *yi = acc.value();
        } else {
            *yi = iter_bits(g.row(i)).map(|j| x[j]).sum();
        }
    }
}

fn dot(a: &[f64], b: &[f64], compensated: bool) -> f64 {
    if compensated {
        let mut acc = Neumaier::default();
        for (x, y) in a.iter().zip(b) {
            acc.add(x * y);
        }
        acc.value()
    } else {
        a.iter().zip(b).map(|(x, y)| x * y).sum()
    }
}

struct Component {
    rho: f64,
    vector: Vec<f64>,
    residual: f64,
    iterations: usize,
}

fn power_iteration(g: &Graph, opts: &SpectralOptions) -> Result<Component> {
    let n = g.order();
    if g.edge_count() == 0 {
        return Ok(Component {
            rho: 0.0,
            vector: vec![1.0; n],
            residual: 0.0,
            iterations: 0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut x: Vec<f64> = (0..n).map(|_| 1.0 + 1e-3 * rng.gen::<f64>()).collect();
    let scale = x.iter().cloned().fold(0.0, f64::max);
    x.iter_mut().for_each(|v| *v /= scale);
    let mut y = vec![0.0; n];
    let mut residual = f64::INFINITY;
    for it in 0..opts.max_iter {
        matvec(g, &x, &mut y, opts.compensated);
        let rho = dot(&x, &y, opts.compensated) / dot(&x, &x, opts.compensated);
        residual = x
            .iter()
            .zip(&y)
            .map(|(xi, yi)| (yi - rho * xi).abs())
            .fold(0.0, f64::max);
        if residual <= opts.tol {
            return Ok(Component {
                rho,
                vector: x,
                residual,
                iterations: it + 1,
            });
        }
        let mut top = 0.0f64;
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi += yi;
            top = top.max(*xi);
        }
        x.iter_mut().for_each(|v| *v /= top);
    }
    Err(Error::Convergence {
        iterations: opts.max_iter,
        residual,
    })
}

/// Spectral radius with default settings and the given tolerance.
pub fn spectral_radius(g: &Graph, tol: f64) -> Result<SpectralResult> {
    spectral_radius_with(g, &SpectralOptions::with_tol(tol))
}

/// Computes `ρ(G)` component by component and returns the largest.
pub fn spectral_radius_with(g: &Graph, opts: &SpectralOptions) -> Result<SpectralResult> {
    if g.order() == 0 {
        return Err(Error::InvalidInput("spectral radius of the null graph".into()));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {}", opts.tol)));
    }
    let comps = g.components();
    let disconnected = comps.len() > 1;
    let mut best: Option<(Vec<usize>, Component)> = None;
    let mut iterations = 0;
    for comp in comps {
        let sub = if disconnected { g.induced(&comp) } else { g.clone() };
        let c = power_iteration(&sub, opts)?;
        iterations += c.iterations;
        if best.as_ref().is_none_or(|(_, b)| c.rho > b.rho) {
            best = Some((comp, c));
        }
    }
    let (comp, c) = best.expect("at least one component");
    let mut vector = vec![0.0; g.order()];
    for (&v, &x) in comp.iter().zip(&c.vector) {
        vector[v] = x;
    }
    Ok(SpectralResult {
        rho: c.rho,
        vector,
        residual: c.residual,
        iterations,
        disconnected,
    })
}

/// `ρ(G)` at the default tolerance.
pub fn rho(g: &Graph) -> Result<f64> {
    Ok(spectral_radius(g, DEFAULT_TOL)?.rho)
}

/// `2 Σ_{uv ∈ E} x_u x_v / Σ x_v²`.
pub fn rayleigh_quotient(g: &Graph, x: &[f64]) -> Result<f64> {
    if x.len() != g.order() {
        return Err(Error::InvalidInput(format!(
            "vector length {} does not match order {}",
            x.len(),
            g.order()
        )));
    }
    let norm: f64 = x.iter().map(|v| v * v).sum();
    if norm == 0.0 {
        return Err(Error::InvalidInput("Rayleigh quotient of the zero vector".into()));
    }
    let num: f64 = g.edges().iter().map(|&(a, b)| x[a] * x[b]).sum();
    Ok(2.0 * num / norm)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WilfReport {
    pub r: usize,
    pub n: usize,
    pub bound: f64,
    pub rho: f64,
    pub holds: bool,
}

/// Compares `ρ(G)` with `(1 - 1/r) n`. The caller is responsible for
/// `G` being `K_{r+1}`-free; the report is meaningless otherwise.
pub fn check_wilf(g: &Graph, r: usize, tol: f64) -> Result<WilfReport> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be at least 1".into()));
    }
    let n = g.order();
    let rho = spectral_radius(g, tol)?.rho;
    let bound = (1.0 - 1.0 / r as f64) * n as f64;
    Ok(WilfReport {
        r,
        n,
        bound,
        rho,
        holds: rho <= bound + tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DeletionReport {
    pub vertex: usize,
    pub degree: usize,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub equality: bool,
}

/// `ρ(G) <= sqrt(ρ(G - v)² + 2 d(v) - 1)`.
pub fn deletion_bound(g: &Graph, v: usize, tol: f64) -> Result<DeletionReport> {
    if v >= g.order() {
        return Err(Error::InvalidInput(format!("vertex {v} out of range")));
    }
    let d = g.degree(v);
    if d == 0 {
        return Err(Error::Precondition(format!("vertex {v} is isolated")));
    }
    let opts = SpectralOptions {
        tol,
        compensated: true,
        ..Default::default()
    };
    let lhs = spectral_radius_with(g, &opts)?.rho;
    let minus = spectral_radius_with(&g.remove_vertex(v), &opts)?.rho;
    let rhs = (minus * minus + 2.0 * d as f64 - 1.0).sqrt();
    Ok(DeletionReport {
        vertex: v,
        degree: d,
        lhs,
        rhs,
        holds: lhs <= rhs + tol,
        equality: (lhs - rhs).abs() <= tol,
    })
}

/// `G - {vw : w ∈ S} + {uw : w ∈ S}` for `S ⊆ N(v) \ N[u]`, `S` non-empty.
pub fn rotate_edges(g: &Graph, u: usize, v: usize, s: &[usize]) -> Result<Graph> {
    let n = g.order();
    if u >= n || v >= n || u == v {
        return Err(Error::InvalidInput(format!("rotation needs distinct vertices, got u={u}, v={v}")));
    }
    if s.is_empty() {
        return Err(Error::InvalidInput("rotation set S is empty".into()));
    }
    let mut remove = Vec::with_capacity(s.len());
    let mut add = Vec::with_capacity(s.len());
    for &w in s {
        if w >= n || w == u || !g.has_edge(v, w) || g.has_edge(u, w) {
            return Err(Error::InvalidInput(format!("vertex {w} is not in N(v) \\ N[u]")));
        }
        remove.push((v, w));
        add.push((u, w));
    }
    g.edited(&remove, &add)
}
