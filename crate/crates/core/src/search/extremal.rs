//! Exhaustive SPEX and EX searches.

use serde::Serialize;

use super::enumerate::{fold_graphs, EnumOptions};
use super::PredicateSpec;
use crate::error::Result;
use crate::graph::{graph6_encode, Graph};
use crate::spectral::{spectral_radius, spectral_radius_with, SpectralOptions, DEFAULT_TOL};

/// Tie window at scan precision.
pub const SCAN_TIE_TOL: f64 = 1e-8;
/// Tie window after high-precision re-evaluation.
pub const HP_TIE_TOL: f64 = 1e-11;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Rho,
    Edges,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Champion {
    pub graph6: String,
    pub value: f64,
    pub edges: usize,
    pub rho: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub predicate: PredicateSpec,
    pub predicate_text: String,
    pub objective: Objective,
    pub champions: Vec<Champion>,
    /// Best value minus the best value outside the champion set.
    pub gap_to_runner_up: Option<f64>,
    pub exhaustive: bool,
    pub graphs_scanned: u64,
    pub feasible: u64,
    /// Scan-level near ties that separated from the champions at high precision.
    pub ties_within_tol: Vec<Champion>,
}

impl SearchReport {
    pub fn unique_champion(&self) -> Option<&Champion> {
        match self.champions.as_slice() {
            [c] => Some(c),
            _ => None,
        }
    }
}

/// Graphs within `tie` of the running maximum, plus the best value below.
struct Acc {
    top: Vec<(f64, Graph)>,
    below: Option<f64>,
    scanned: u64,
    feasible: u64,
}

fn max_opt(a: Option<f64>, b: Option<f64>) -> Option<f64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

impl Acc {
    fn new() -> Self {
        Acc { top: Vec::new(), below: None, scanned: 0, feasible: 0 }
    }

    fn normalise(&mut self, tie: f64) {
        let Some(best) = self.top.iter().map(|t| t.0).reduce(f64::max) else {
            return;
        };
        let (keep, drop): (Vec<_>, Vec<_>) =
            std::mem::take(&mut self.top).into_iter().partition(|t| t.0 >= best - tie);
        self.top = keep;
        for (v, _) in drop {
            self.below = max_opt(self.below, Some(v));
        }
    }

    fn push(&mut self, value: f64, g: &Graph, tie: f64) {
        let best = self.top.iter().map(|t| t.0).reduce(f64::max);
        if matches!(best, Some(b) if value < b - tie) {
            self.below = max_opt(self.below, Some(value));
            return;
        }
        self.top.push((value, g.clone()));
        if matches!(best, Some(b) if value > b) {
            self.normalise(tie);
        }
    }

    fn merge(mut self, other: Acc, tie: f64) -> Acc {
        self.top.extend(other.top);
        self.below = max_opt(self.below, other.below);
        self.scanned += other.scanned;
        self.feasible += other.feasible;
        self.normalise(tie);
        self
    }
}

fn hp_rho(g: &Graph) -> Result<f64> {
    Ok(spectral_radius_with(g, &SpectralOptions::high_precision())?.rho)
}

fn champion(g: &Graph, value: f64, rho: f64) -> Champion {
    Champion { graph6: graph6_encode(g), value, edges: g.edge_count(), rho }
}

/// Exhaustive search over all graphs of order `n` satisfying `pred`.
pub fn search(n: usize, pred: &PredicateSpec, objective: Objective, jobs: usize) -> Result<SearchReport> {
    pred.validate()?;
    let tie = match objective {
        Objective::Rho => SCAN_TIE_TOL,
        Objective::Edges => 0.5,
    };
    let prune = |g: &Graph| pred.contains_forbidden(g);
    let acc = fold_graphs(
        n,
        &EnumOptions { jobs },
        &prune,
        Acc::new,
        |mut acc, g| {
            acc.scanned += 1;
            if pred.check(g) {
                acc.feasible += 1;
                let value = match objective {
                    Objective::Rho => spectral_radius(g, DEFAULT_TOL).expect("default tolerance converges").rho,
                    Objective::Edges => g.edge_count() as f64,
                };
                acc.push(value, g, tie);
            }
            acc
        },
        |a, b| a.merge(b, tie),
    )?;

    let mut champions = Vec::new();
    let mut ties = Vec::new();
    let mut runner_up = acc.below;
    match objective {
        Objective::Edges => {
            for (v, g) in &acc.top {
                champions.push(champion(g, *v, hp_rho(g)?));
            }
        }
        Objective::Rho => {
            let mut evaluated = Vec::with_capacity(acc.top.len());
            for (_, g) in &acc.top {
                evaluated.push((hp_rho(g)?, g));
            }
            if let Some(best) = evaluated.iter().map(|t| t.0).reduce(f64::max) {
                for (v, g) in evaluated {
                    if v >= best - HP_TIE_TOL {
                        champions.push(champion(g, v, v));
                    } else {
                        runner_up = max_opt(runner_up, Some(v));
                        ties.push(champion(g, v, v));
                    }
                }
            }
        }
    }
    champions.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    ties.sort_by(|a, b| a.graph6.cmp(&b.graph6));
    let best = champions.iter().map(|c| c.value).reduce(f64::max);
    let gap_to_runner_up = match (best, runner_up) {
        (Some(b), Some(r)) => Some(b - r),
        _ => None,
    };
    Ok(SearchReport {
        n,
        predicate: pred.clone(),
        predicate_text: pred.describe(),
        objective,
        champions,
        gap_to_runner_up,
        exhaustive: true,
        graphs_scanned: acc.scanned,
        feasible: acc.feasible,
        ties_within_tol: ties,
    })
}

pub fn spex_search(n: usize, pred: &PredicateSpec, jobs: usize) -> Result<SearchReport> {
    search(n, pred, Objective::Rho, jobs)
}

pub fn ex_search(n: usize, pred: &PredicateSpec, jobs: usize) -> Result<SearchReport> {
    search(n, pred, Objective::Edges, jobs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_multipartite, turan};
    use crate::search::canonical_graph6;

    fn clique_free(q: usize) -> PredicateSpec {
        PredicateSpec { forbid_clique: Some(q), ..Default::default() }
    }

    #[test]
    fn mantel_at_five() {
        let spex = spex_search(5, &clique_free(3), 0).unwrap();
        let k23 = canonical_graph6(&make_multipartite(&[2, 3]).unwrap()).unwrap();
        let c = spex.unique_champion().unwrap();
        assert_eq!(c.graph6, k23);
        assert!((c.rho - 6f64.sqrt()).abs() < 1e-12);
        let ex = ex_search(5, &clique_free(3), 0).unwrap();
        assert_eq!(ex.unique_champion().unwrap().edges, 6);
        assert_eq!(ex.gap_to_runner_up, Some(1.0));
    }

    #[test]
    fn turan_champion_at_six() {
        let ex = ex_search(6, &clique_free(4), 1).unwrap();
        let t = canonical_graph6(&turan(3, 6).unwrap()).unwrap();
        assert_eq!(ex.unique_champion().unwrap().graph6, t);
        assert_eq!(ex.unique_champion().unwrap().value, 12.0);
    }

    #[test]
    fn empty_feasible_set() {
        let pred = PredicateSpec {
            forbid_clique: Some(3),
            require_non_r_partite: Some(2),
            ..Default::default()
        };
        let rep = spex_search(4, &pred, 1).unwrap();
        assert!(rep.champions.is_empty());
        assert_eq!(rep.feasible, 0);
        assert!(rep.exhaustive);
    }
}
