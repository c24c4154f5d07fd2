//! Exact computer algebra for one-parameter families of polynomial maps.
//!
//! Given a family such as z^d + c or z³ + az, this crate constructs, with
//! integer arithmetic throughout:
//!
//! * dynatomic polynomials Φₙ (whose roots are the points of formal
//!   period n) and the multiplier polynomials Mₙ whose roots are the
//!   multipliers of the period-n cycles;
//! * discriminants Δₙ of the multiplier polynomials and their structured
//!   factorization Δₙ = aₙ·Qₙ·Rₙ² into a squarefree integer, a separable
//!   "new parameters" factor and a square part;
//! * classification of parameter values by whether all cycle multipliers
//!   up to a given period are rational (or integral), with certified
//!   parametrized families of examples and non-existence searches;
//! * arithmetic in ℤ[j] (j a primitive cube root of unity) supporting a
//!   cube-residue descent argument, and a floating-point cycle oracle
//!   that independently cross-checks the exact results.
//!
//! Everything user-facing is deterministic and exact unless explicitly
//! named numeric; numeric routines report their residuals.

pub mod arith;
pub mod classify;
pub mod discfactor;
pub mod dynatomic;
pub mod eisenstein;
pub mod error;
pub mod multiplier;
pub mod numeric;
pub mod poly;
pub mod verify;

pub use error::{Error, Result};
