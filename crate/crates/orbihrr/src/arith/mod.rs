//! Exact arithmetic: arbitrary-precision rationals and cyclotomic fields.

pub mod cyclotomic;
pub mod parse;
pub(crate) mod polyq;

pub use cyclotomic::{cyclotomic_polynomial, divisors, euler_phi, Cyclotomic};
pub use parse::parse_cyclotomic;

/// Arbitrary-precision rational; always stored reduced with positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// Shorthand for n/d.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
