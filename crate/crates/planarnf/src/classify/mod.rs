//! Classification of the 2×2 linear part, resonant bases, and the
//! case-specific generator algebras used for reduction and reporting.

mod basis;

pub use basis::{BasisKind, GeneratorBasis, XYCoeffs};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{Axis, HomVF, Rational, VecMonomial};

pub type Mat2 = [[Rational; 2]; 2];

#[derive(Debug, Error)]
pub enum ClassifyError {
    #[error("matrix is not in a supported canonical form (diagonal, rotation block, or upper Jordan block); bring it to canonical form first")]
    CanonicalFormRequired,
    #[error("zero linear part is not supported")]
    NotSupported,
    #[error("matrix is not diagonalizable over the rationals")]
    NotDiagonalizable,
    #[error("class {0} has no two-generator basis")]
    NoGeneratorBasis(String),
    #[error("field does not lie in the span of the generator basis at its grade")]
    DecompositionError,
}

/// One resonant direction of a same-sign S4 part: the ratio between the
/// eigenvalues and which equation receives the resonant monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resonance {
    /// `k ≥ 2` with `λ_target = k · λ_other`.
    pub power: u32,
    /// Component that carries the resonant monomial.
    pub target: Axis,
}

/// Classification of a canonical-form 2×2 linear part.
#[derive(Clone, Debug, PartialEq)]
pub enum LinearClass {
    Zero,
    /// Complex pair with nonzero real part: `[[re, -im], [im, re]]`.
    S1 {
        re: Rational,
        im: Rational,
    },
    /// Imaginary pair: `[[0, -rot], [rot, 0]]`.
    S2 {
        rot: Rational,
    },
    /// One zero eigenvalue; `zero_axis` carries it, `mu` is the other.
    S3 {
        mu: Rational,
        zero_axis: Axis,
    },
    /// Distinct eigenvalues (or equal, resonance-free) of one sign.
    S4Same {
        lambda: Rational,
        mu: Rational,
        resonance: Option<Resonance>,
    },
    /// Opposite-sign eigenvalues `λ_x = c·q`, `λ_y = −c·p`, gcd(p, q) = 1.
    S4Opposite {
        c: Rational,
        p: u32,
        q: u32,
    },
    /// Jordan block with double nonzero eigenvalue.
    N1 {
        mu: Rational,
    },
    /// Nilpotent nonzero block `[[0, 1], [0, 0]]`.
    N2,
}

impl LinearClass {
    pub fn tag(&self) -> &'static str {
        match self {
            LinearClass::Zero => "ZERO",
            LinearClass::S1 { .. } => "S1",
            LinearClass::S2 { .. } => "S2",
            LinearClass::S3 { .. } => "S3",
            LinearClass::S4Same { .. } => "S4-same-sign",
            LinearClass::S4Opposite { .. } => "S4-opposite-sign",
            LinearClass::N1 { .. } => "N1",
            LinearClass::N2 => "N2",
        }
    }

    /// Classes whose normal form is linear: no resonant directions at all.
    pub fn linear_nf(&self) -> bool {
        matches!(
            self,
            LinearClass::S1 { .. }
                | LinearClass::N1 { .. }
                | LinearClass::S4Same {
                    resonance: None,
                    ..
                }
        )
    }
}

/// Classify a canonical-form matrix. Shapes accepted: diagonal, rotation
/// block `[[a, -b], [b, a]]`, upper Jordan block.
pub fn classify_linear(a: &Mat2) -> Result<LinearClass, ClassifyError> {
    let zero = Rational::zero();
    let [[a11, a12], [a21, a22]] = a;
    if *a11 == zero && *a12 == zero && *a21 == zero && *a22 == zero {
        return Ok(LinearClass::Zero);
    }
    if *a12 == zero && *a21 == zero {
        return Ok(classify_diagonal(a11, a22));
    }
    if a11 == a22 && *a12 == -a21.clone() && !a21.is_zero() {
        return Ok(if a11.is_zero() {
            LinearClass::S2 { rot: a21.clone() }
        } else {
            LinearClass::S1 {
                re: a11.clone(),
                im: a21.clone(),
            }
        });
    }
    if *a21 == zero && a12.is_one() && a11 == a22 {
        return Ok(if a11.is_zero() {
            LinearClass::N2
        } else {
            LinearClass::N1 { mu: a11.clone() }
        });
    }
    Err(ClassifyError::CanonicalFormRequired)
}

fn classify_diagonal(l1: &Rational, l2: &Rational) -> LinearClass {
    if l1.is_zero() {
        return LinearClass::S3 {
            mu: l2.clone(),
            zero_axis: Axis::X,
        };
    }
    if l2.is_zero() {
        return LinearClass::S3 {
            mu: l1.clone(),
            zero_axis: Axis::Y,
        };
    }
    let product_negative = l1.is_positive() != l2.is_positive();
    if product_negative {
        // λ_x = c q, λ_y = -c p with q/p = |λ_x/λ_y| in lowest terms.
        let ratio = (l1.clone() / l2.clone()).abs();
        let q =
            u32::try_from(ratio.numer().magnitude().clone()).expect("eigenvalue ratio exceeds u32");
        let p =
            u32::try_from(ratio.denom().magnitude().clone()).expect("eigenvalue ratio exceeds u32");
        let c = l1.clone() / Rational::from_integer(q.into());
        LinearClass::S4Opposite { c, p, q }
    } else {
        let resonance = integer_multiple(l1, l2)
            .map(|k| Resonance {
                power: k,
                target: Axis::X,
            })
            .or_else(|| {
                integer_multiple(l2, l1).map(|k| Resonance {
                    power: k,
                    target: Axis::Y,
                })
            });
        LinearClass::S4Same {
            lambda: l1.clone(),
            mu: l2.clone(),
            resonance,
        }
    }
}

/// `Some(k)` when `big = k * small` for an integer `k ≥ 2`.
fn integer_multiple(big: &Rational, small: &Rational) -> Option<u32> {
    let ratio = big.clone() / small.clone();
    if ratio.is_integer() {
        let k = ratio.to_integer();
        if k >= 2.into() {
            return u32::try_from(k.magnitude().clone()).ok();
        }
    }
    None
}

/// Diagonalize a rational-spectrum 2×2 matrix: returns `(p, d)` with
/// `A = P D P⁻¹` and `D` diagonal, a zero eigenvalue (if any) listed first.
/// Fails when the eigenvalues are irrational or the matrix is defective.
pub fn jordanize(a: &Mat2) -> Result<(Mat2, Mat2), ClassifyError> {
    let [[a11, a12], [a21, a22]] = a;
    let trace = a11.clone() + a22;
    let det = a11.clone() * a22 - a12.clone() * a21;
    // λ² − trace·λ + det = 0
    let disc = trace.clone() * &trace - Rational::from_integer(4.into()) * &det;
    if disc.is_negative() {
        return Err(ClassifyError::NotDiagonalizable);
    }
    let sqrt_disc = rational_sqrt(&disc).ok_or(ClassifyError::NotDiagonalizable)?;
    let half = Rational::new(1.into(), 2.into());
    let mut l1 = (trace.clone() + &sqrt_disc) * &half;
    let mut l2 = (trace - &sqrt_disc) * &half;
    if l1 == l2 {
        // only the scalar matrix is diagonalizable here
        if a12.is_zero() && a21.is_zero() && a11 == a22 {
            return Ok((
                identity(),
                [[l1.clone(), Rational::zero()], [Rational::zero(), l2]],
            ));
        }
        return Err(ClassifyError::NotDiagonalizable);
    }
    if l2.is_zero() {
        std::mem::swap(&mut l1, &mut l2);
    }
    let col = |lam: &Rational| -> [Rational; 2] {
        // eigenvector of [[a11-λ, a12], [a21, a22-λ]]
        if !a12.is_zero() {
            [a12.clone(), lam.clone() - a11]
        } else if !a21.is_zero() {
            [lam.clone() - a22, a21.clone()]
        } else if a11 == lam {
            [Rational::one(), Rational::zero()]
        } else {
            [Rational::zero(), Rational::one()]
        }
    };
    let v1 = col(&l1);
    let v2 = col(&l2);
    let p = [
        [v1[0].clone(), v2[0].clone()],
        [v1[1].clone(), v2[1].clone()],
    ];
    let d = [[l1, Rational::zero()], [Rational::zero(), l2]];
    Ok((p, d))
}

fn identity() -> Mat2 {
    [
        [Rational::one(), Rational::zero()],
        [Rational::zero(), Rational::one()],
    ]
}

fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Basis of the resonant vectors of one grade, constructed directly from
/// the class data (not from a kernel computation, so it can serve as an
/// independent cross-check of the adjoint kernel).
pub fn resonant_basis(cls: &LinearClass, grade: i64) -> Vec<HomVF> {
    let one = Rational::one;
    match cls {
        LinearClass::Zero => Vec::new(),
        LinearClass::S1 { .. } | LinearClass::N1 { .. } => Vec::new(),
        LinearClass::S3 { zero_axis, .. } => {
            // eigenvalues (0, μ) on (u, v): resonant u^{k+1}∂u and u^k v ∂v
            let k = u32::try_from(grade).expect("negative grade");
            let u = *zero_axis;
            vec![
                basis::power_monomial(u, k + 1, u.other(), 0, u, one()),
                basis::power_monomial(u, k, u.other(), 1, u.other(), one()),
            ]
        }
        LinearClass::S4Same { resonance, .. } => match resonance {
            Some(res) if grade == res.power as i64 - 1 => {
                let m = match res.target {
                    Axis::X => VecMonomial::new(0, res.power, Axis::X),
                    Axis::Y => VecMonomial::new(res.power, 0, Axis::Y),
                };
                vec![HomVF::monomial(m, one())]
            }
            _ => Vec::new(),
        },
        LinearClass::S4Opposite { p, q, .. } => {
            let z = (p + q) as i64;
            if grade >= 1 && grade % z == 0 {
                let k = (grade / z) as u32;
                vec![
                    HomVF::monomial(VecMonomial::new(k * p + 1, k * q, Axis::X), one()),
                    HomVF::monomial(VecMonomial::new(k * p, k * q + 1, Axis::Y), one()),
                ]
            } else {
                Vec::new()
            }
        }
        LinearClass::S2 { .. } => {
            if grade >= 1 && grade % 2 == 0 {
                let k = (grade / 2) as u32;
                vec![basis::dilation_field(k), basis::rotation_field(k)]
            } else {
                Vec::new()
            }
        }
        LinearClass::N2 => {
            // x^{k+1}∂y and x^{k+1}∂x + x^k y ∂y
            let k = u32::try_from(grade).expect("negative grade");
            let a = HomVF::monomial(VecMonomial::new(k + 1, 0, Axis::Y), one());
            let b = HomVF::from_terms(
                grade,
                [
                    (VecMonomial::new(k + 1, 0, Axis::X), one()),
                    (VecMonomial::new(k, 1, Axis::Y), one()),
                ],
            );
            vec![a, b]
        }
    }
}

/// The case-specific two-generator basis, when the class has one.
pub fn generator_basis(cls: &LinearClass) -> Result<GeneratorBasis, ClassifyError> {
    GeneratorBasis::for_class(cls)
}
