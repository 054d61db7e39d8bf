//! Exact polynomial algebra over the rationals.
//!
//! Multivariate polynomials are kept in lex order with the first declared
//! variable highest. Gröbner bases are computed fraction-free over the
//! integers; univariate work (square-free parts, Sturm isolation, refinement)
//! happens on integer-primitive polynomials.

mod fglm;
mod groebner;
mod interval;
mod monomial;
mod multi;
mod parse;
mod uni;

pub use groebner::{buchberger, buchberger_with, elimination_ideal, grevlex_basis, saturate, GroebnerBasis, Method, Selection};
pub use interval::Interval;
pub use monomial::{Monomial, MAX_VARS};
pub use multi::MultiPoly;
pub use parse::parse_poly;
pub use uni::{IsolatingInterval, UniPoly};

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Eliminate to a univariate polynomial in `keep`, which must be the last
/// variable of the basis order.
pub fn eliminate(gb: &GroebnerBasis, keep: &str) -> Result<UniPoly, crate::Error> {
    gb.univariate(keep)
}
