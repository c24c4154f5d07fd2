//! Crate-wide error type.
//!
//! Most errors here are *loud* by design: several of them (`NotDivisible`,
//! `NotAPower`, `DivisionLeftRemainder`) can only occur if an algebraic
//! identity that the library is built to verify has failed, which means
//! either an implementation bug or something genuinely new. They are never
//! swallowed or downgraded.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact polynomial division was requested but the divisor does not
    /// divide the dividend (nonzero remainder, or a coefficient-level
    /// division failed).
    #[error("exact division failed: {0}")]
    NotDivisible(String),

    /// An n-th root of a polynomial was requested but the polynomial is not
    /// an n-th power.
    #[error("polynomial is not an exact {n}-th power: {context}")]
    NotAPower { n: u32, context: String },

    /// `squarefree_part` could not certify a factorization: after removing
    /// all prime factors up to the trial-division bound, the remaining
    /// cofactor is neither 1, a perfect square, nor provably prime.
    #[error("cannot certify squarefree decomposition: cofactor {cofactor} exceeds bound^2 = {bound_sq}")]
    FactorizationTooLarge { cofactor: String, bound_sq: String },

    /// A requested construction would exceed the configured size cap
    /// (e.g. iterating a degree-d map n times needs d^n coefficients).
    #[error("size limit exceeded: {0}")]
    SizeLimit(String),

    /// An operation specific to one family was invoked on another.
    #[error("operation not defined for this family: {0}")]
    WrongFamily(String),

    /// A parameter violates a documented precondition.
    #[error("bad parameter: {0}")]
    BadParam(String),

    /// Division by zero in an exact domain (e.g. Eisenstein division).
    #[error("division by zero")]
    DivByZero,

    /// The numeric root finder failed to reach the residual tolerance
    /// within its iteration cap.
    #[error("numeric root finding did not converge: {0}")]
    NonConvergence(String),

    /// A numeric cross-check found a different number of roots/cycles than
    /// the exact computation predicts.
    #[error("numeric/exact count mismatch: {0}")]
    MismatchedCount(String),

    /// A discriminant was requested for a polynomial of degree < 1 in the
    /// main variable; the discriminant is reported as the unit 1 elsewhere,
    /// and this error flags call sites that cannot accept that convention.
    #[error("degenerate degree: {0}")]
    DegenerateDegree(String),

    /// An internal invariant failed. Reaching this is a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
