use thiserror::Error;

/// Errors raised while analysing two-qubit gates.
#[derive(Debug, Error)]
pub enum Error {
    #[error("expected a {expected}x{expected} matrix, got {rows}x{cols}")]
    Shape {
        expected: usize,
        rows: usize,
        cols: usize,
    },

    #[error("matrix contains a non-finite entry")]
    NonFinite,

    #[error(
        "matrix is not unitary (max |U^dag U - I| = {deviation:.3e}, tolerance {tolerance:.1e})"
    )]
    NonUnitary { deviation: f64, tolerance: f64 },

    #[error("matrix is not symmetric (max |M - M^T| = {deviation:.3e})")]
    NotSymmetric { deviation: f64 },

    #[error("no Weyl chamber point reproduces the local invariants (residual {residual:.3e})")]
    CoordinateRecoveryFailed { residual: f64 },

    #[error("exactly three Schmidt coefficients exceed {eps:.1e}; spectrum {spectrum:?}")]
    DegenerateCount { eps: f64, spectrum: [f64; 4] },

    #[error("operator concurrence needs Schmidt number <= 2, got {schmidt_number}")]
    NotSchmidtRank2 { schmidt_number: usize },

    #[error("{what} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        what: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("sample {index} at {point} is not a perfect entangler")]
    NotPerfectEntangler { index: usize, point: String },

    #[error("unknown edge '{0}'")]
    UnknownEdge(String),

    #[error("unknown gate '{0}'")]
    UnknownGate(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
