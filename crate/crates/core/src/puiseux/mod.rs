//! Exact arithmetic over finitely supported Puiseux series, the text grammar
//! for curve equations, and multiplicities of curves at points.

mod multiplicity;
mod parse;
mod poly;
mod scalar;

pub use multiplicity::{multiplicity_at, multiplicity_at_one};
pub use parse::{parse_polynomial, parse_scalar};
pub use poly::{LaurentPolynomial, MonomialJson, PolynomialJson, TermJson, UnimodularMap};
pub use scalar::{representatives, PuiseuxScalar, Valuation};

#[allow(unused_imports)]
pub(crate) use poly::ext_gcd;
