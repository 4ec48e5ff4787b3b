use thiserror::Error;

use crate::expr::ParseError;

/// Errors shared by the computational modules.
///
/// Parse errors for the polynomial expression grammar keep their own type,
/// [`ParseError`], because they carry byte offsets; they convert into
/// [`Error::Parse`] where a single error type is convenient.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parameter lies outside the mathematical domain of the operation,
    /// for example u = 1 for a Frobenius-Euler context.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Series inversion was asked for a series with zero constant term.
    #[error("series has zero constant term and is not invertible")]
    ZeroConstantTerm,

    /// A Bernstein basis index with k > n.
    #[error("invalid Bernstein index: k = {k} exceeds n = {n}")]
    InvalidIndex { k: u32, n: u32 },

    /// A Bernstein product was asked for indices with differing k.
    #[error("Bernstein product requires a common k, got {first} and {second}")]
    MixedK { first: u32, second: u32 },

    /// A sample vector whose length does not match the stated degree.
    #[error("expected {expected} samples, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    /// A size cap was exceeded (partial sum term counts, cached index range).
    #[error("{what}: requested {requested} exceeds the cap of {cap}")]
    LimitExceeded {
        what: &'static str,
        requested: u128,
        cap: u128,
    },

    /// Partial sum residues failed to stabilize below the term cap.
    #[error("partial sums did not stabilize mod {p}^{precision} within {cap} terms")]
    NoConvergence { p: u64, precision: u32, cap: u64 },

    /// Reduction of a rational mod p^precision hit a denominator divisible
    /// by p.
    #[error("denominator {denom} is not invertible mod {p}^{precision}")]
    NonInvertibleDenominator {
        denom: String,
        p: u64,
        precision: u32,
    },

    /// A malformed grid description or a grid exceeding the configured caps.
    #[error("invalid grid: {0}")]
    Grid(String),

    /// A polynomial expression that failed to parse.
    #[error(transparent)]
    Parse(#[from] ParseError),
}
