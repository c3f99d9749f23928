//! Exact rational arithmetic, sparse graded vector polynomials, the
//! Lie–Poisson bracket, the Bargmann scalar product and graded conjugation
//! by the exponential of a generator.

mod homvf;
mod jet;
mod monomial;

pub use homvf::{ad_iter, bargmann_inner, bracket, HomVF};
pub use jet::{bch_conjugate, JetSeries};
pub use monomial::{Axis, VecMonomial};

use num_bigint::BigInt;

/// Arbitrary-precision rational scalar. Always stored in lowest terms with
/// a positive denominator; arithmetic never rounds.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub(crate) fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 2..=n as u64 {
        acc *= i;
    }
    acc
}

pub(crate) fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k as u64 {
        acc = acc * (n as u64 - i) / (i + 1);
    }
    acc
}
