use thiserror::Error;

/// Errors shared by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The matrix deviates from its adjoint by more than the Hermiticity tolerance.
    #[error("matrix is not Hermitian (max |M - M^dag| entry = {0:.3e})")]
    NotHermitian(f64),

    /// The Jacobi eigensolver hit its sweep cap before the off-diagonal norm converged.
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),

    /// Operand dimensions are inconsistent with each other or with the declared subsystems.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The operator has an eigenvalue below the PSD tolerance, so it is not a state.
    #[error("operator is not positive semi-definite (min eigenvalue = {0:.3e})")]
    NotPositive(f64),

    /// The input does not satisfy the density-matrix invariants.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// A family or function parameter lies outside its stated domain.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    /// A closed-form denominator vanished; the value is reported as an error
    /// rather than silently signed.
    #[error("division by zero in {0}")]
    DivisionByZero(String),

    /// Bisection was asked to run on a bracket without a sign change.
    #[error("no sign change over bracket: {0}")]
    NoBracket(String),

    /// `verify_theorem` got an id it does not know.
    #[error("unknown theorem id: {0}")]
    UnknownTheorem(String),

    /// Rényi/Tsallis order must be positive and distinct from 1.
    #[error("invalid entropy order alpha = {0} (must be > 0 and != 1)")]
    InvalidAlpha(f64),

    /// Failure while parsing a textual family spec.
    #[error("cannot parse family spec: {0}")]
    ParseFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
