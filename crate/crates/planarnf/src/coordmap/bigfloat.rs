use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::Rational;

/// Fixed-point high-precision real: `value = mant / 2^prec`.
///
/// All arithmetic between two values requires equal precision. Rounding is
/// to nearest on multiplication and division, so individual operations are
/// accurate to half an ulp at the working precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigFloat {
    mant: BigInt,
    prec: u32,
}

impl BigFloat {
    pub fn zero(prec: u32) -> Self {
        BigFloat {
            mant: BigInt::zero(),
            prec,
        }
    }

    pub fn one(prec: u32) -> Self {
        BigFloat {
            mant: BigInt::from(1) << prec,
            prec,
        }
    }

    pub fn from_i64(v: i64, prec: u32) -> Self {
        BigFloat {
            mant: BigInt::from(v) << prec,
            prec,
        }
    }

    pub fn from_rational(r: &Rational, prec: u32) -> Self {
        let scaled = (r.numer() << prec) + r.denom() / 2 * sign_of(r.numer());
        BigFloat {
            mant: scaled / r.denom(),
            prec,
        }
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mant.clone(), BigInt::from(1) << self.prec)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_rational().to_f64().unwrap_or(f64::NAN)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn abs(&self) -> Self {
        BigFloat {
            mant: self.mant.abs(),
            prec: self.prec,
        }
    }

    pub fn neg(&self) -> Self {
        BigFloat {
            mant: -self.mant.clone(),
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.prec, other.prec);
        BigFloat {
            mant: &self.mant + &other.mant,
            prec: self.prec,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.prec, other.prec);
        BigFloat {
            mant: &self.mant - &other.mant,
            prec: self.prec,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.prec, other.prec);
        BigFloat {
            mant: round_shift(&self.mant * &other.mant, self.prec),
            prec: self.prec,
        }
    }

    pub fn div(&self, other: &Self) -> Self {
        assert_eq!(self.prec, other.prec);
        assert!(!other.mant.is_zero(), "division by zero");
        let num = (&self.mant << (self.prec + 1)) / &other.mant;
        BigFloat {
            mant: round_shift(num, 1),
            prec: self.prec,
        }
    }

    pub fn cmp_value(&self, other: &Self) -> Ordering {
        assert_eq!(self.prec, other.prec);
        self.mant.cmp(&other.mant)
    }

    pub fn powi(&self, n: u32) -> Self {
        let mut acc = BigFloat::one(self.prec);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Real `k`-th root of a non-negative value; `None` on negative input.
    pub fn root(&self, k: u32) -> Option<Self> {
        assert!(k >= 1);
        if self.mant.is_negative() {
            return None;
        }
        if k == 1 || self.mant.is_zero() {
            return Some(self.clone());
        }
        // root of (mant * 2^{prec(k-1)}) keeps the fixed-point scale
        let scaled = &self.mant << (self.prec as u64 * (k as u64 - 1));
        Some(BigFloat {
            mant: int_root(&scaled, k),
            prec: self.prec,
        })
    }

    /// `self^e` for rational `e`, on a positive base.
    pub fn pow_rational(&self, e: &Rational) -> Option<Self> {
        if e.is_zero() {
            return Some(BigFloat::one(self.prec));
        }
        if !self.is_positive() {
            return None;
        }
        let q = u32::try_from(e.denom().magnitude().clone()).ok()?;
        let p_abs = u32::try_from(e.numer().magnitude().clone()).ok()?;
        let root = self.root(q)?;
        let powed = root.powi(p_abs);
        if e.is_negative() {
            Some(BigFloat::one(self.prec).div(&powed))
        } else {
            Some(powed)
        }
    }

    /// `exp(self)` by Taylor summation.
    pub fn exp(&self) -> Self {
        let one = BigFloat::one(self.prec);
        let mut acc = one.clone();
        let mut term = one;
        let mut n: i64 = 0;
        loop {
            n += 1;
            term = term.mul(self).div(&BigFloat::from_i64(n, self.prec));
            if term.mant.is_zero() {
                break;
            }
            acc = acc.add(&term);
            if n > 10_000 {
                break; // convergence guard for very large arguments
            }
        }
        acc
    }
}

impl fmt::Display for BigFloat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_f64())
    }
}

fn sign_of(v: &BigInt) -> BigInt {
    match v.sign() {
        num_bigint::Sign::Minus => BigInt::from(-1),
        _ => BigInt::from(1),
    }
}

fn round_shift(v: BigInt, shift: u32) -> BigInt {
    if shift == 0 {
        return v;
    }
    let half = BigInt::from(1) << (shift - 1);
    let adj = if v.is_negative() { -half } else { half };
    (v + adj) >> shift
}

/// Floor integer `k`-th root of a non-negative integer, by Newton.
fn int_root(n: &BigInt, k: u32) -> BigInt {
    assert!(!n.is_negative());
    if n.is_zero() {
        return BigInt::zero();
    }
    let bits = n.bits();
    let mut x: BigInt = BigInt::from(1) << (bits / k as u64 + 1);
    let kk = BigInt::from(k);
    let km1 = BigInt::from(k - 1);
    loop {
        // x1 = ((k-1)x + n / x^{k-1}) / k
        let xk1 = pow_big(&x, k - 1);
        let x1: BigInt = (&km1 * &x + n / &xk1) / &kk;
        if x1 >= x {
            break;
        }
        x = x1;
    }
    // floor fix-up
    while pow_big(&x, k) > *n {
        x -= 1;
    }
    while pow_big(&(&x + 1), k) <= *n {
        x += 1;
    }
    x
}

fn pow_big(base: &BigInt, e: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    let mut b = base.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        b = &b * &b;
        e >>= 1;
    }
    acc
}
