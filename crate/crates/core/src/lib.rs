//! Exact PASEP and permutation-tableau Markov chains.

pub mod algebra;
pub mod analysis;
mod error;
pub mod involution;
pub mod pasep;
pub mod perm;
pub mod pt_chain;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational scalar used by every verification path.
pub type Rational = num_rational::BigRational;
/// Laurent polynomial in `q`, `α`, `β` with exact rational coefficients.
pub type Poly = algebra::LaurentPoly<Rational>;
/// Laurent monomial with an exact rational coefficient.
pub type Mono = algebra::Monomial<Rational>;
