//! Sweeps that back the `verify` command.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{graph6_encode, turan, y_graph};
use crate::random;
use crate::spectral::{check_wilf, rotate_edges, spectral_radius_with, SpectralOptions};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCountRow {
    pub n: usize,
    pub edges_y: usize,
    pub edges_turan: usize,
    /// `e(Y) = e(T) - floor(n/r) + 1`.
    pub identity: bool,
    /// `e(Y) >= (1 - 1/r) n²/2 - n/r - r/8 + 1`, compared exactly.
    pub lower_bound: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCountReport {
    pub r: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub rows: Vec<EdgeCountRow>,
    pub passed: bool,
}

/// Edge count of `Y_r(n)` against the Turán graph, for `n` in `[2r, n_max]`.
pub fn verify_edge_count(r: usize, n_max: usize) -> Result<EdgeCountReport> {
    if r < 2 || n_max < 2 * r {
        return Err(Error::InvalidSpec(format!("need r >= 2 and n_max >= 2r, got r={r}, n_max={n_max}")));
    }
    let mut rows = Vec::new();
    for n in 2 * r..=n_max {
        let edges_y = y_graph(r, n)?.edge_count();
        let edges_turan = turan(r, n)?.edge_count();
        let (ri, ni, ey) = (r as i128, n as i128, edges_y as i128);
        rows.push(EdgeCountRow {
            n,
            edges_y,
            edges_turan,
            identity: ey == edges_turan as i128 - ni / ri + 1,
            lower_bound: 8 * ri * ey >= 4 * (ri - 1) * ni * ni - 8 * ni - ri * ri + 8 * ri,
        });
    }
    let passed = rows.iter().all(|row| row.identity && row.lower_bound);
    Ok(EdgeCountReport { r, n_min: 2 * r, n_max, rows, passed })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepFailure {
    pub graph6: String,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct WilfSweepReport {
    pub r: usize,
    pub n_max: usize,
    pub trials: usize,
    pub seed: u64,
    /// Largest `ρ / ((1 - 1/r) n)` seen.
    pub max_ratio: f64,
    pub failures: Vec<SweepFailure>,
    pub passed: bool,
}

/// Random `r`-partite graphs of order at most `n_max` against `ρ <= (1 - 1/r) n`.
pub fn verify_wilf_random(r: usize, n_max: usize, trials: usize, seed: u64, tol: f64) -> Result<WilfSweepReport> {
    if r < 1 || n_max < 1 {
        return Err(Error::InvalidSpec(format!("need r >= 1 and n_max >= 1, got r={r}, n_max={n_max}")));
    }
    let mut rng = random::rng(seed);
    let mut failures = Vec::new();
    let mut max_ratio: f64 = 0.0;
    for _ in 0..trials {
        let n = rng.gen_range(1..=n_max);
        let p = rng.gen_range(0.05..1.0);
        let (g, _) = random::r_partite(&mut rng, n, r, p);
        let rep = check_wilf(&g, r, tol)?;
        if rep.bound > 0.0 {
            max_ratio = max_ratio.max(rep.rho / rep.bound);
        }
        if !rep.holds {
            failures.push(SweepFailure { graph6: graph6_encode(&g), lhs: rep.rho, rhs: rep.bound });
        }
    }
    Ok(WilfSweepReport { r, n_max, trials, seed, max_ratio, passed: failures.is_empty(), failures })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RotationSweepReport {
    pub trials: usize,
    pub seed: u64,
    pub min_gain: f64,
    pub failures: Vec<SweepFailure>,
    pub passed: bool,
}

/// Random rotations `S ⊆ N(v) \ N[u]` with `x_u >= x_v` on connected graphs;
/// each must raise ρ by more than `margin`.
pub fn verify_rotation_random(trials: usize, seed: u64, margin: f64) -> Result<RotationSweepReport> {
    let mut rng = random::rng(seed);
    let opts = SpectralOptions::with_tol(1e-12);
    let mut failures = Vec::new();
    let mut min_gain = f64::INFINITY;
    let mut done = 0;
    while done < trials {
        let n = rng.gen_range(5..=30);
        let p = rng.gen_range(0.0..0.5);
        let g = random::connected(&mut rng, n, p);
        let base = spectral_radius_with(&g, &opts)?;
        let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if u == v || base.vector[u] < base.vector[v] {
            continue;
        }
        let pool: Vec<usize> = g.neighbors(v).filter(|&w| w != u && !g.has_edge(u, w)).collect();
        if pool.is_empty() {
            continue;
        }
        let size = rng.gen_range(1..=pool.len());
        let mut s: Vec<usize> = pool.choose_multiple(&mut rng, size).copied().collect();
        s.sort_unstable();
        let after = spectral_radius_with(&rotate_edges(&g, u, v, &s)?, &opts)?.rho;
        let gain = after - base.rho;
        min_gain = min_gain.min(gain);
        if gain <= margin {
            failures.push(SweepFailure { graph6: graph6_encode(&g), lhs: base.rho, rhs: after });
        }
        done += 1;
    }
    Ok(RotationSweepReport { trials, seed, min_gain, passed: failures.is_empty(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_pass_on_small_inputs() {
        assert!(verify_edge_count(3, 30).unwrap().passed);
        assert!(verify_edge_count(2, 3).is_err());
        let w = verify_wilf_random(3, 40, 50, 1, 1e-9).unwrap();
        assert!(w.passed && w.max_ratio <= 1.0 + 1e-9);
        let rot = verify_rotation_random(50, 2, 1e-9).unwrap();
        assert!(rot.passed && rot.min_gain > 0.0);
        assert_eq!(verify_rotation_random(20, 7, 1e-9).unwrap(), verify_rotation_random(20, 7, 1e-9).unwrap());
    }
}
