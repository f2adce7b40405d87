//! Exact arithmetic: integer Laurent polynomials and fraction-free
//! determinants over integral domains.

mod laurent;
mod matrix;

pub use laurent::LaurentPolynomial;
pub use matrix::{bareiss_determinant, AlgebraError, ExactDomain, IntegerMatrix, LaurentMatrix};
