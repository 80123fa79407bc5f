use thiserror::Error;

/// Errors raised by operator construction, the inequality checkers and campaigns.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max asymmetry {max_asymmetry:e} exceeds {tolerance:e}")]
    NotHermitian { max_asymmetry: f64, tolerance: f64 },

    #[error("eigenvector matrix is not unitary (residual {residual:e})")]
    NotUnitary { residual: f64 },

    #[error("eigendecomposition failed: {0}")]
    Decomposition(String),

    #[error("dimension mismatch: {left} vs {right}")]
    DimMismatch { left: usize, right: usize },

    #[error("block ({row}, {col}) has shape {got:?}, expected {expected:?}")]
    BlockShape {
        row: i64,
        col: i64,
        got: (usize, usize),
        expected: (usize, usize),
    },

    #[error("function is undefined at eigenvalue {eigenvalue}")]
    FunctionUndefinedAtSpectrum { eigenvalue: f64 },

    #[error("grid length must be positive and finite, got {0}")]
    InvalidGrid(f64),

    #[error("inequality constants assume unit grid length, got {0}")]
    UnsupportedGrid(f64),

    #[error("invalid Hölder bound (alpha={alpha}, A={a}, B={b})")]
    InvalidHolderBound { alpha: f64, a: f64, b: f64 },

    #[error("row-norm series diverges: n={n} is not greater than alpha + 1/2 = {threshold}")]
    BoundInapplicable { n: u32, threshold: f64 },

    #[error("function `{0}` carries no Hölder bound")]
    MissingHolderBound(String),

    #[error("Hölder bound violated at (s, t) = ({s}, {t}): |g(s) - g(t)| exceeds bound by {excess:e}")]
    HolderBoundViolated { s: f64, t: f64, excess: f64 },

    #[error("function `{0}` is not absolutely continuous with a known derivative")]
    NotAbsContinuous(String),

    #[error("derivative is not integrable: {0}")]
    NonIntegrable(String),

    #[error("exponent p = {0} outside [1, 2)")]
    POutOfRange(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("operator has a negative eigenvalue {0}")]
    NotPositive(f64),

    #[error("operator has no positive spectrum")]
    NoPositiveSpectrum,

    #[error("operator is not invertible (kernel dimension {0})")]
    NonInvertible(usize),

    #[error("kernel detected numerically {numeric:?} disagrees with construction {declared:?}")]
    AmbiguousKernel {
        numeric: Vec<usize>,
        declared: Vec<usize>,
    },

    #[error("empty index window")]
    EmptyWindow,

    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
