use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid family specification: {0}")]
    InvalidSpec(String),

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    Convergence { iterations: usize, residual: f64 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("request is infeasible: {0}")]
    Feasibility(String),

    #[error(
        "partition is not equitable: cells {cell_i} -> {cell_j}, vertex {vertex_a} has {count_a} \
         neighbours but vertex {vertex_b} has {count_b}"
    )]
    NotEquitable {
        cell_i: usize,
        cell_j: usize,
        vertex_a: usize,
        count_a: usize,
        vertex_b: usize,
        count_b: usize,
    },

    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
