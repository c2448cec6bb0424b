//! Crate-wide error type.

use num_complex::Complex64;
use thiserror::Error;

/// Errors raised by symbol analysis, factorisation, discrete operators and solvers.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("evaluation point {0} coincides with a pole")]
    PoleAtPoint(Complex64),

    #[error("evaluation at a jump location {0} requires a side")]
    JumpWithoutSide(f64),

    #[error("symbol is unbounded at infinity (more zeros than poles)")]
    UnboundedAtInfinity,

    #[error("symbol is not elliptic: {0}")]
    NotElliptic(String),

    #[error("jump exponent violates |Re alpha| < 1/2 (Re alpha = {0})")]
    RegularityViolated(f64),

    #[error("explicit jump factorisation is only available for p = 2 (got p = {0})")]
    UnsupportedP(f64),

    #[error("one-sided limit of the symbol vanishes at {0}")]
    ZeroLimit(String),

    #[error("curve passes through the origin (|g_p| = {0:.3e})")]
    CurveThroughOrigin(f64),

    #[error("P is not idempotent: |P^2 - P| = {0:.3e}")]
    NotIdempotent(f64),

    #[error("operation requires a {expected} grid, got {got}")]
    WrongGridKind { expected: &'static str, got: &'static str },

    #[error("input is not numerically a plus function (analyticity score {0:.4})")]
    NotPlusFunction(f64),

    #[error("symbol does not admit a canonical factorisation (index {0})")]
    NotCanonical(i64),

    #[error("discrete Toeplitz solve is ill-conditioned (residual {0:.3e})")]
    IllConditioned(f64),

    #[error("lambda = {0} lies on the spectrum")]
    LambdaOnSpectrum(Complex64),

    #[error("lambda = {0} is in the point spectrum of S on the full line")]
    LambdaIsPlusMinusOne(Complex64),

    #[error("Re alpha = {0} is outside the regime handled by this solver path")]
    WrongAlphaRegime(f64),

    #[error("solution rejected: residual {residual:.3e} exceeds tolerance {tol:.3e}")]
    ResidualTooLarge { residual: f64, tol: f64 },

    #[error("singular point {0} is not strictly inside the quadrature grid")]
    SingularAtBoundary(f64),

    #[error("symbol is not invertible in L-infinity: {0}")]
    NotInvertibleSymbol(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
