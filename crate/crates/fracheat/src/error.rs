//! Error type shared by all modules of the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Grid dimension must be 1 or 2.
    InvalidDimension(usize),
    /// Points per axis must be a power of two >= 8.
    NonPowerOfTwo(usize),
    /// Half-width L must be strictly positive.
    NonPositiveHalfWidth(f64),
    /// Two operands live on different grids.
    GridMismatch,
    /// A spectral multiplier had the wrong length for the grid.
    MultiplierLength { expected: usize, got: usize },
    /// Inverse transform left an imaginary residue above tolerance,
    /// which signals a non-symmetric multiplier bug.
    ImagResidue { residue: f64, tolerance: f64 },
    /// Stability index must lie in the open interval (0, 2).
    AlphaOutOfRange(f64),
    /// Effective kernel time must be nonnegative.
    NegativeTau(f64),
    /// The identity kernel (tau = 0) has no real-space representation.
    DeltaKernel,
    /// lp_norm requires p >= 1.
    InvalidNormOrder(f64),
    /// A field contained NaN or infinite values.
    NonFinite(&'static str),
    /// Invalid coefficient-function parameters.
    BadCoefficient(String),
    /// Invalid nonlinearity parameters (e.g. power exponent <= 1).
    BadNonlinearity(String),
    /// Quadrature bounds out of order (s > t, or r >= R).
    BadInterval { lo: f64, hi: f64 },
    /// Picard iteration did not reach tolerance within the iteration cap.
    PicardNoConvergence { step: usize, iters: usize, last_diff: f64 },
    /// Solver configuration rejected.
    BadSolverConfig(String),
    /// Run rejected because hypothesis validation failed and no override was given.
    HypothesesRejected(String),
    /// Problem data rejected (negative initial datum in theorem mode, etc.).
    BadProblem(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDimension(d) => write!(f, "grid dimension must be 1 or 2, got {d}"),
            Error::NonPowerOfTwo(n) => {
                write!(f, "points per axis must be a power of two >= 8, got {n}")
            }
            Error::NonPositiveHalfWidth(l) => write!(f, "half-width must be positive, got {l}"),
            Error::GridMismatch => write!(f, "operands live on different grids"),
            Error::MultiplierLength { expected, got } => {
                write!(f, "multiplier length {got} does not match grid size {expected}")
            }
            Error::ImagResidue { residue, tolerance } => write!(
                f,
                "imaginary residue {residue:.3e} exceeds tolerance {tolerance:.3e} after inverse transform"
            ),
            Error::AlphaOutOfRange(a) => write!(f, "stability index must be in (0, 2), got {a}"),
            Error::NegativeTau(t) => write!(f, "kernel time must be >= 0, got {t}"),
            Error::DeltaKernel => {
                write!(f, "tau = 0 kernel is the identity; it has no real-space field")
            }
            Error::InvalidNormOrder(p) => write!(f, "norm order must be >= 1, got {p}"),
            Error::NonFinite(what) => write!(f, "non-finite values in {what}"),
            Error::BadCoefficient(msg) => write!(f, "bad coefficient function: {msg}"),
            Error::BadNonlinearity(msg) => write!(f, "bad nonlinearity: {msg}"),
            Error::BadInterval { lo, hi } => {
                write!(f, "interval bounds out of order: [{lo}, {hi}]")
            }
            Error::PicardNoConvergence { step, iters, last_diff } => write!(
                f,
                "Picard iteration did not converge at step {step} after {iters} iterations \
                 (last sup-norm change {last_diff:.3e}); reduce the macro step size"
            ),
            Error::BadSolverConfig(msg) => write!(f, "bad solver configuration: {msg}"),
            Error::HypothesesRejected(msg) => {
                write!(f, "hypothesis validation failed: {msg} (pass force=true to run anyway)")
            }
            Error::BadProblem(msg) => write!(f, "bad problem data: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
