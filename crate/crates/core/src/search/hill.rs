//! Steepest-ascent local search on the spectral radius.

use rayon::prelude::*;
use serde::Serialize;

use super::PredicateSpec;
use crate::error::{Error, Result};
use crate::graph::{graph6_encode, Graph};
use crate::spectral::{rotate_edges, spectral_radius_with, SpectralOptions};

/// Minimum accepted increase of ρ per move.
pub const DEFAULT_CLIMB_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Move {
    AddEdge { a: usize, b: usize },
    RemoveEdge { a: usize, b: usize },
    /// Moves the edges `vw`, `w ∈ s`, over to `uw`.
    Rotate { u: usize, v: usize, s: Vec<usize> },
}

impl Move {
    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        match self {
            Move::AddEdge { a, b } => g.with_edge(*a, *b),
            Move::RemoveEdge { a, b } => g.without_edge(*a, *b),
            Move::Rotate { u, v, s } => rotate_edges(g, *u, *v, s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TraceStep {
    pub step: usize,
    #[serde(rename = "move")]
    pub mv: Move,
    pub rho: f64,
    pub graph6: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct HillClimbReport {
    pub start_rho: f64,
    pub final_graph6: String,
    pub final_rho: f64,
    pub trace: Vec<TraceStep>,
    /// No improving predicate-preserving move exists at the final graph.
    pub local_max: bool,
    pub moves_evaluated: u64,
    #[serde(skip)]
    pub graph: Graph,
}

fn climb_opts() -> SpectralOptions {
    SpectralOptions::with_tol(1e-12)
}

fn candidate_moves(g: &Graph) -> Vec<Move> {
    let n = g.order();
    let mut moves = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                moves.push(Move::RemoveEdge { a, b });
            } else {
                moves.push(Move::AddEdge { a, b });
            }
        }
    }
    for u in 0..n {
        for v in 0..n {
            if u == v {
                continue;
            }
            let s: Vec<usize> = g.neighbors(v).filter(|&w| w != u && !g.has_edge(u, w)).collect();
            if s.is_empty() {
                continue;
            }
            if s.len() > 1 {
                for &w in &s {
                    moves.push(Move::Rotate { u, v, s: vec![w] });
                }
            }
            moves.push(Move::Rotate { u, v, s });
        }
    }
    moves
}

/// Repeatedly applies the predicate-preserving move with the largest ρ gain
/// above `tol`, for at most `budget` moves.
pub fn hill_climb(g0: &Graph, pred: &PredicateSpec, budget: usize, tol: f64) -> Result<HillClimbReport> {
    if !pred.is_unconstrained() {
        pred.validate()?;
    }
    if !(tol >= 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be non-negative, got {tol}")));
    }
    if !pred.check(g0) {
        return Err(Error::InvalidInput(format!("start graph violates predicate ({})", pred.describe())));
    }
    let opts = climb_opts();
    let start_rho = spectral_radius_with(g0, &opts)?.rho;
    let mut g = g0.clone();
    let mut rho = start_rho;
    let mut trace = Vec::new();
    let mut evaluated = 0u64;
    let mut local_max = false;
    while trace.len() < budget {
        let moves = candidate_moves(&g);
        evaluated += moves.len() as u64;
        let scored: Vec<(f64, Graph, Move)> = moves
            .into_par_iter()
            .map(|mv| {
                let h = mv.apply(&g)?;
                let r = spectral_radius_with(&h, &opts)?.rho;
                Ok((r, h, mv))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut improving: Vec<_> = scored.into_iter().filter(|t| t.0 > rho + tol).collect();
        improving.sort_by(|a, b| b.0.total_cmp(&a.0));
        match improving.into_iter().find(|t| pred.check(&t.1)) {
            Some((r, h, mv)) => {
                g = h;
                rho = r;
                trace.push(TraceStep { step: trace.len() + 1, mv, rho: r, graph6: graph6_encode(&g) });
            }
            None => {
                local_max = true;
                break;
            }
        }
    }
    Ok(HillClimbReport {
        start_rho,
        final_graph6: graph6_encode(&g),
        final_rho: rho,
        trace,
        local_max,
        moves_evaluated: evaluated,
        graph: g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::cycle;
    use crate::spectral::rho as dense_rho;

    #[test]
    fn climbs_from_pentagon() {
        let pred = PredicateSpec { forbid_clique: Some(3), ..Default::default() };
        let rep = hill_climb(&cycle(5).unwrap(), &pred, 50, DEFAULT_CLIMB_TOL).unwrap();
        assert!(!rep.trace.is_empty());
        let mut prev = rep.start_rho;
        for step in &rep.trace {
            assert!(step.rho > prev + DEFAULT_CLIMB_TOL);
            let g = crate::graph::graph6_decode(&step.graph6).unwrap();
            assert!(pred.check(&g));
            assert!((dense_rho(&g).unwrap() - step.rho).abs() < 1e-8);
            prev = step.rho;
        }
        assert!(rep.local_max);
        // Triangle-free maximum on 5 vertices.
        assert!((rep.final_rho - 6f64.sqrt()).abs() < 1e-8);
    }

    #[test]
    fn rejects_infeasible_start() {
        let pred = PredicateSpec { forbid_clique: Some(3), ..Default::default() };
        assert!(hill_climb(&crate::graph::complete(3), &pred, 5, DEFAULT_CLIMB_TOL).is_err());
    }
}
