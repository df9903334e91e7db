use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("eigenvalues outside Q(i); unfactored polynomial {polynomial}")]
    NumericFallback { polynomial: String },
    #[error("algebra is not left-symmetric: {0}")]
    NotLeftSymmetric(String),
    #[error("algebra is not complete: {0}")]
    NotComplete(String),
    #[error("Lie algebra is not solvable")]
    NotSolvable,
    #[error("no regular element found near the seed")]
    SeedNotRegular,
    #[error("not a Cartan subalgebra: {0}")]
    NotCartan(String),
    #[error("decomposition is not canonical")]
    NotCanonical,
    #[error("root space of dimension {dim} for root {root}")]
    NotOneDimensional { root: String, dim: usize },
    #[error("iteration limit of {0} reached")]
    MaxIterations(usize),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("solver left unresolved branches: {0}")]
    SolverIncomplete(String),
    #[error("vertex templates cannot cover dimension {0}")]
    TemplateExhausted(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
