//! Exhaustive checks of edge-count spectral bounds on small graphs.

use std::collections::BTreeMap;

use serde::Serialize;

use super::canon::are_isomorphic;
use super::enumerate::{enumerate_filtered, EnumOptions};
use crate::error::{Error, Result};
use crate::graph::{graph6_encode, u_graph, Graph};
use crate::spectral::{spectral_radius_with, SpectralOptions};
use crate::structure::{contains_generalized_book, is_bipartite, is_complete_bipartite};

/// Violation and equality window.
pub const SCAN_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ConjectureKind {
    /// `B_{2,k}`-free graphs with `m >= 1`; bound `√m`.
    NosalBook { k: usize },
    /// Non-bipartite `B_{2,k}`-free graphs; bound `ρ(U_m)`.
    LiuMiaoU { k: usize },
    /// `B_{r,k}`-free graphs with `m >= 1`; bound `√((1 - 1/r) 2m)`.
    Sqrt2mBound { r: usize, k: usize },
}

impl ConjectureKind {
    fn book(&self) -> (usize, usize) {
        match *self {
            ConjectureKind::NosalBook { k } | ConjectureKind::LiuMiaoU { k } => (2, k),
            ConjectureKind::Sqrt2mBound { r, k } => (r, k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScanRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub rho: f64,
    pub bound: f64,
}

/// Per-edge-count summary for the `U_m` comparison.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MCensus {
    pub m: usize,
    pub graphs: u64,
    pub champion_rho: f64,
    pub champions: Vec<String>,
    pub u_rho: f64,
    /// Some champion is `U_m` plus isolated vertices.
    pub champion_is_u: bool,
    pub exceeds_u: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub kind: ConjectureKind,
    pub max_n: usize,
    pub tol: f64,
    pub scanned: u64,
    pub violations: Vec<ScanRecord>,
    pub equality_witnesses: Vec<ScanRecord>,
    /// Every equality witness is complete bipartite once isolated vertices are dropped.
    pub equality_all_complete_bipartite: bool,
    pub per_m: Vec<MCensus>,
}

fn strip_isolated(g: &Graph) -> Graph {
    let keep: Vec<usize> = (0..g.order()).filter(|&v| g.degree(v) > 0).collect();
    g.induced(&keep)
}

pub fn conjecture_scan(kind: ConjectureKind, max_n: usize, jobs: usize) -> Result<ConjectureReport> {
    let (r, k) = kind.book();
    if r < 2 || k < 1 {
        return Err(Error::InvalidSpec(format!("scan needs r >= 2 and k >= 1, got r={r}, k={k}")));
    }
    if max_n > super::MAX_ENUM_ORDER {
        return Err(Error::Feasibility(format!(
            "scan supports max_n <= {}, got {max_n}",
            super::MAX_ENUM_ORDER
        )));
    }
    let opts = SpectralOptions::with_tol(1e-12);
    let prune = |g: &Graph| contains_generalized_book(g, r, k).expect("validated").is_some();
    let mut scanned = 0u64;
    let mut violations = Vec::new();
    let mut equality = Vec::new();
    let mut by_m: BTreeMap<usize, (u64, f64, Vec<Graph>)> = BTreeMap::new();
    let mut u_cache: BTreeMap<usize, (f64, Graph)> = BTreeMap::new();

    for n in 1..=max_n {
        for g in enumerate_filtered(n, &EnumOptions { jobs }, &prune)? {
            let m = g.edge_count();
            if m == 0 {
                continue;
            }
            if matches!(kind, ConjectureKind::LiuMiaoU { .. }) && is_bipartite(&g) {
                continue;
            }
            scanned += 1;
            let rho = spectral_radius_with(&g, &opts)?.rho;
            let bound = match kind {
                ConjectureKind::NosalBook { .. } => (m as f64).sqrt(),
                ConjectureKind::Sqrt2mBound { r, .. } => ((1.0 - 1.0 / r as f64) * 2.0 * m as f64).sqrt(),
                ConjectureKind::LiuMiaoU { .. } => {
                    if let std::collections::btree_map::Entry::Vacant(slot) = u_cache.entry(m) {
                        let u = u_graph(m)?;
                        let ur = spectral_radius_with(&u, &opts)?.rho;
                        slot.insert((ur, u));
                    }
                    let entry = by_m.entry(m).or_insert((0, f64::NEG_INFINITY, Vec::new()));
                    entry.0 += 1;
                    if rho > entry.1 + SCAN_TOL {
                        entry.1 = rho;
                        entry.2 = vec![g.clone()];
                    } else if rho >= entry.1 - SCAN_TOL {
                        entry.1 = entry.1.max(rho);
                        entry.2.push(g.clone());
                    }
                    u_cache[&m].0
                }
            };
            let record = || ScanRecord { graph6: graph6_encode(&g), n, m, rho, bound };
            if rho > bound + SCAN_TOL {
                violations.push(record());
            } else if rho >= bound - SCAN_TOL {
                equality.push(record());
            }
        }
    }

    let equality_all_complete_bipartite = equality.iter().all(|rec| {
        let g = crate::graph::graph6_decode(&rec.graph6).expect("encoded above");
        is_complete_bipartite(&g)
    });

    let mut per_m = Vec::new();
    for (m, (graphs, best, champs)) in by_m {
        let (u_rho, u) = &u_cache[&m];
        let mut champion_is_u = false;
        for c in &champs {
            let core = strip_isolated(c);
            if core.order() == u.order() && are_isomorphic(&core, u)? {
                champion_is_u = true;
            }
        }
        per_m.push(MCensus {
            m,
            graphs,
            champion_rho: best,
            champions: champs.iter().map(graph6_encode).collect(),
            u_rho: *u_rho,
            champion_is_u,
            exceeds_u: best > u_rho + SCAN_TOL,
        });
    }

    Ok(ConjectureReport {
        kind,
        max_n,
        tol: SCAN_TOL,
        scanned,
        violations,
        equality_witnesses: equality,
        equality_all_complete_bipartite,
        per_m,
    })
}
