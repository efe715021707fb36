//! Exhaustive and local searches over small graphs.

mod canon;
mod conjecture;
mod enumerate;
mod extremal;
mod hill;
mod lemma27;

pub use canon::{
    are_isomorphic, canonical_form, canonical_graph6, canonical_labelling, is_canonical,
    MAX_CANON_ORDER,
};
pub use conjecture::{
    conjecture_scan, ConjectureKind, ConjectureReport, MCensus, ScanRecord, SCAN_TOL,
};
pub use enumerate::{
    count_graphs, enumerate_filtered, enumerate_graphs, fold_graphs, EnumOptions, MAX_ENUM_ORDER,
};
pub use extremal::{
    ex_search, search, spex_search, Champion, Objective, SearchReport, HP_TIE_TOL, SCAN_TIE_TOL,
};
pub use hill::{hill_climb, HillClimbReport, Move, TraceStep, DEFAULT_CLIMB_TOL};
pub use lemma27::{lemma27_config, lemma27_scan, Lemma27Report, LEMMA27_UNIQUE_TOL};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{contains_clique, contains_generalized_book, is_r_colorable};

/// Constraints defining a feasible family of graphs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateSpec {
    pub forbid_book: Option<(usize, usize)>,
    pub require_non_r_partite: Option<usize>,
    #[serde(default)]
    pub require_connected: bool,
    /// Forbids `K_q` for the stored `q`.
    pub forbid_clique: Option<usize>,
}

impl PredicateSpec {
    pub fn is_unconstrained(&self) -> bool {
        self.forbid_book.is_none()
            && self.require_non_r_partite.is_none()
            && !self.require_connected
            && self.forbid_clique.is_none()
    }

    pub fn validate(&self) -> Result<()> {
        if self.is_unconstrained() {
            return Err(Error::InvalidSpec("predicate has no constraint".into()));
        }
        if let Some((r, k)) = self.forbid_book {
            if r < 2 || k < 1 {
                return Err(Error::InvalidSpec(format!("book B_{{{r},{k}}} needs r >= 2 and k >= 1")));
            }
        }
        if self.require_non_r_partite == Some(0) {
            return Err(Error::InvalidSpec("non-r-partite needs r >= 1".into()));
        }
        if matches!(self.forbid_clique, Some(q) if q < 2) {
            return Err(Error::InvalidSpec("forbidden clique needs order >= 2".into()));
        }
        Ok(())
    }

    /// The monotone part: true when `g` contains a forbidden subgraph, which
    /// then holds for every supergraph as well.
    pub fn contains_forbidden(&self, g: &Graph) -> bool {
        if let Some(q) = self.forbid_clique {
            if contains_clique(g, q) {
                return true;
            }
        }
        if let Some((r, k)) = self.forbid_book {
            if contains_generalized_book(g, r, k).expect("validated").is_some() {
                return true;
            }
        }
        false
    }

    pub fn check(&self, g: &Graph) -> bool {
        if self.require_connected && !g.is_connected() {
            return false;
        }
        if self.contains_forbidden(g) {
            return false;
        }
        match self.require_non_r_partite {
            Some(r) => is_r_colorable(g, r).is_none(),
            None => true,
        }
    }

    pub fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(q) = self.forbid_clique {
            parts.push(format!("K_{q}-free"));
        }
        if let Some((r, k)) = self.forbid_book {
            parts.push(format!("B_{{{r},{k}}}-free"));
        }
        if let Some(r) = self.require_non_r_partite {
            parts.push(format!("non-{r}-partite"));
        }
        if self.require_connected {
            parts.push("connected".into());
        }
        if parts.is_empty() {
            "unconstrained".into()
        } else {
            parts.join(", ")
        }
    }
}
