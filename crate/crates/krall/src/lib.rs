//! Exact construction and verification of Krall-type orthogonal polynomials.
//!
//! Krall-type polynomials are orthogonal with respect to a classical weight
//! (generalized Laguerre, Jacobi, or Gegenbauer) augmented by point masses of
//! size 1/t at the endpoints of the orthogonality interval.  This crate
//! builds them by three independent routes and verifies, in exact rational
//! arithmetic, the web of integrable structures tying them together:
//!
//! - a brute-force **Hankel oracle** from the moment determinants,
//! - **tau-function closed forms**: rational solutions of integrable cases
//!   of Painlevé III/V and of a Schlesinger-type PDE system,
//! - Koornwinder's explicit **differentiation formulas**.
//!
//! On top of the three routes sit verification suites for the second-order
//! differential equations, the divisibility identity behind them, the
//! Painlevé equations and their first integrals, the 2x2 Schlesinger
//! systems, the Koornwinder PDE system, asymptotic expansions, and the Toda
//! / master-symmetry flows of the recurrence coefficients.
//!
//! Everything is computed over the rationals; a verified identity is
//! *exactly* zero, never "small".  No floating point is used anywhere.
//!
//! ```
//! use krall::{Family, Oracle, Rational};
//!
//! // Krall-Laguerre with alpha = 0, jump 1/t at the origin, pinned to t = 1.
//! let family = Family::krall_laguerre(Rational::from(0)).unwrap();
//! let oracle = Oracle::numeric(&family, &[Rational::from(1)], 2).unwrap();
//! assert_eq!(oracle.h(0), Rational::from(2));
//! assert_eq!(oracle.b(1), Rational::new(17, 6));
//! ```

mod bareiss;
mod bipoly;
mod field;
mod frac;
mod matrix;
mod poly;
mod ratfun;
mod ratfun2;
mod rational;

pub mod closed;
pub mod diffop;
pub mod guide;
pub mod isomonodromy;
pub mod measures;
pub mod ode;
pub mod oracle;
pub mod suites;
pub mod toda;

pub use bareiss::det_bareiss;
pub use bipoly::BiPoly;
pub use field::{Field, Ring, Var};
pub use frac::Frac;
pub use matrix::Mat2;
pub use measures::{moment_functional, Family, FamilyKind, Moments};
pub use oracle::{Oracle, RecurrenceData};
pub use poly::{series_div, DivisibilityFailure, Poly};
pub use ratfun::RatFun1;
pub use ratfun2::RatFun2;
pub use rational::{pochhammer, pochhammer_i, Rational};

/// Errors surfaced by the library.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("not enough moments: need {needed}, have {have}")]
    InsufficientMoments { needed: usize, have: usize },
    #[error("value is unbounded at infinity")]
    UnboundedAtInfinity,
    #[error("closed form is singular here: {0}")]
    SingularClosedForm(String),
    #[error("evaluation hit a pole of a rational function")]
    PoleAtEvaluation,
    #[error("no differentiation formula exists for this family")]
    NoDifferentiationFormula,
    #[error("exact division left a nonzero remainder: {0}")]
    NotDivisible(String),
}

pub type Result<T> = std::result::Result<T, Error>;
