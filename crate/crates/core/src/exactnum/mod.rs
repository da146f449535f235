//! Exact rational and cyclotomic arithmetic.
//!
//! [`CycNum`] is the universal scalar: every character value and every
//! eigenvalue in the crate lives in some Q(ζ_N).

mod cyclotomic;
pub mod linalg;
mod poly;

pub use cyclotomic::{cyclotomic_polynomial, divisors, euler_phi, CycNum};
pub use poly::CycPoly;

/// Arbitrary-precision rationals, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
