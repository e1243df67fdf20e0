//! Exact rational arithmetic and Laurent polynomials in `q`, `α`, `β`.

mod laurent;
mod scalar;

pub use laurent::{EvalError, Exponents, LaurentPoly, Monomial, ParsePolyError};
pub use scalar::{ratio, rational_one, rational_zero, Field};
