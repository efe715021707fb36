//! Spectral extremal problems for graphs without generalized books.
//!
//! The crate is organised around five areas:
//!
//! * [`graph`]: immutable bit-packed graphs, the extremal families
//!   (`T_r(n)`, `B_{r,k}`, `Y_r(n)`, `U`) and graph6 I/O.
//! * [`spectral`]: spectral radius by shifted power iteration, Rayleigh
//!   quotients and executable forms of the classical spectral bounds.
//! * [`structure`]: colourability, chromatic number, book and clique
//!   detection, colour-criticality and maximum cross-edge partitions.
//! * [`quotient`]: equitable partitions, exact integer characteristic
//!   polynomials and the quotient-matrix verification of `ρ(Y_3(n))`.
//! * [`search`]: isomorph-free enumeration and exhaustive / local extremal
//!   searches.

pub mod error;
pub mod graph;
pub mod quotient;
pub mod random;
pub mod search;
pub mod spectral;
pub mod structure;
pub mod verify;

pub use error::{Error, Result};
pub use graph::Graph;
