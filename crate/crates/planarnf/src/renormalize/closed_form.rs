use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{rint, Rational};

use super::cases::CaseMajor;
use super::RenormalizeError;

/// Which generator table to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClosedFormScheme {
    /// Grade-ascending renormalization generators.
    Prf,
    /// Two-sweep generators: X sweep then Y sweep.
    Lrf,
}

/// One closed-form generator: index, X coefficient, Y coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormGen {
    pub index: i64,
    pub alpha: Rational,
    pub beta: Rational,
    /// Sweep tag for the two-sweep table ("x" or "y"); empty otherwise.
    pub sweep: &'static str,
}

/// Closed-form generator coefficients for the nondegenerate cases, as
/// explicit rational functions of the normal-form coefficients `a_k`, `b_k`
/// (index space). These are evaluated independently of the reduction engine
/// and serve as its oracle through index 4.
///
/// `coeffs` maps index `k ≥ 1` to `(a_k, b_k)`; missing indexes are zero.
/// Division by a vanishing leading coefficient is a case mismatch.
pub fn closed_form_generators(
    case: CaseMajor,
    coeffs: &BTreeMap<i64, (Rational, Rational)>,
    scheme: ClosedFormScheme,
) -> Result<Vec<ClosedFormGen>, RenormalizeError> {
    let get = |k: i64| -> (Rational, Rational) {
        coeffs
            .get(&k)
            .cloned()
            .unwrap_or_else(|| (Rational::zero(), Rational::zero()))
    };
    let (a1, b1) = get(1);
    let (a2, b2) = get(2);
    let (a3, b3) = get(3);
    let (a4, b4) = get(4);
    let (a5, b5) = get(5);
    match scheme {
        ClosedFormScheme::Prf => match case {
            CaseMajor::A | CaseMajor::C => {
                if a1.is_zero() {
                    return Err(RenormalizeError::CaseMismatch);
                }
                if case == CaseMajor::A && !b1.is_zero() {
                    return Err(RenormalizeError::CaseMismatch);
                }
                let alpha = [
                    Rational::zero(),
                    a3.clone() / &a1,
                    a4.clone() / (rint(2) * &a1),
                    (a3.clone() * &a3 - a2.clone() * &a4 + rint(2) * &a1 * &a5)
                        / (rint(6) * &a1 * &a1),
                ];
                let a1p2 = a1.clone() * &a1;
                let a1p3 = a1p2.clone() * &a1;
                let a1p4 = a1p3.clone() * &a1;
                let beta = [
                    b2.clone() / &a1,
                    (a3.clone() * &b1 - a2.clone() * &b2 + a1.clone() * &b3) / (rint(2) * &a1p2),
                    -(rint(2) * &a2 * &a3 * &b1
                        - a1.clone() * &a4 * &b1
                        - rint(2) * &a2 * &a2 * &b2
                        + rint(2) * &a1 * &a3 * &b2
                        + rint(2) * &a1 * &a2 * &b3
                        - rint(2) * &a1p2 * &b4)
                        / (rint(6) * &a1p3),
                    (rint(3) * &a2 * &a2 * &a3 * &b1
                        - a1.clone() * &a3 * &a3 * &b1
                        - rint(2) * &a1 * &a2 * &a4 * &b1
                        + a1p2.clone() * &a5 * &b1
                        - rint(3) * &a2 * &a2 * &a2 * &b2
                        - rint(3) * &a1p2 * &a4 * &b2
                        + rint(3) * &a1 * &a2 * &a2 * &b3
                        + rint(3) * &a1p2 * &a3 * &b3
                        - rint(3) * &a1p2 * &a2 * &b4
                        + rint(3) * &a1p3 * &b5)
                        / (rint(12) * &a1p4),
                ];
                Ok((1..=4)
                    .map(|k| ClosedFormGen {
                        index: k,
                        alpha: alpha[(k - 1) as usize].clone(),
                        beta: beta[(k - 1) as usize].clone(),
                        sweep: "",
                    })
                    .collect())
            }
            CaseMajor::B => {
                if b1.is_zero() || !a1.is_zero() {
                    return Err(RenormalizeError::CaseMismatch);
                }
                let b1p2 = b1.clone() * &b1;
                let b1p3 = b1p2.clone() * &b1;
                let b1p4 = b1p3.clone() * &b1;
                let alpha = [
                    -b2.clone() / &b1,
                    (b2.clone() * &b2 - b1.clone() * &b3) / &b1p2,
                    -(rint(2) * &b2 * &b2 * &b2 - rint(3) * &b1 * &b2 * &b3 + b1p2.clone() * &b4)
                        / &b1p3,
                    (rint(9) * &b2 * &b2 * &b2 * &b2 - rint(18) * &b1 * &b2 * &b2 * &b3
                        + rint(3) * &b1p2 * &b3 * &b3
                        + rint(8) * &b1p2 * &b2 * &b4
                        - rint(2) * &b1p3 * &b5)
                        / (rint(2) * &b1p4),
                ];
                Ok((1..=4)
                    .map(|k| ClosedFormGen {
                        index: k,
                        alpha: alpha[(k - 1) as usize].clone(),
                        beta: Rational::zero(),
                        sweep: "",
                    })
                    .collect())
            }
            _ => Err(RenormalizeError::CaseMismatch),
        },
        ClosedFormScheme::Lrf => {
            // two-sweep table for the first Y index 1, first X index 2
            if a2.is_zero() || b1.is_zero() || !a1.is_zero() {
                return Err(RenormalizeError::CaseMismatch);
            }
            let a2p2 = a2.clone() * &a2;
            let a2p3 = a2p2.clone() * &a2;
            let a2p4 = a2p3.clone() * &a2;
            let a2p5 = a2p4.clone() * &a2;
            let mut out = vec![
                ClosedFormGen {
                    index: 1,
                    alpha: -a3.clone() / &a2,
                    beta: Rational::zero(),
                    sweep: "x",
                },
                ClosedFormGen {
                    index: 3,
                    alpha: (rint(2) * &a3 * &a3 * &a3 - rint(3) * &a2 * &a3 * &a4
                        + a2p2.clone() * &a5)
                        / &a2p3,
                    beta: Rational::zero(),
                    sweep: "x",
                },
            ];
            let betas = [
                (a3.clone() * &a3 * &b1 - rint(2) * &a2 * &a3 * &b2 + a2p2.clone() * &b3) / &a2p3,
                (a3.clone() * &a3 * &a3 * &b1 - rint(3) * &a2 * &a3 * &a4 * &b1
                    + a2p2.clone() * &a5 * &b1
                    + rint(3) * &a2 * &a3 * &a3 * &b2
                    - rint(3) * &a2p2 * &a3 * &b3
                    + a2p3.clone() * &b4)
                    / (rint(2) * &a2p4),
                -(rint(2) * &a3 * &a3 * &a3 * &a3 * &b1 - rint(5) * &a2 * &a3 * &a3 * &a4 * &b1
                    + rint(2) * &a2p2 * &a3 * &a5 * &b1
                    + rint(2) * &a2 * &a3 * &a3 * &a3 * &b2
                    + rint(4) * &a2p2 * &a3 * &a4 * &b2
                    - rint(2) * &a2p3 * &a5 * &b2
                    - rint(7) * &a2p2 * &a3 * &a3 * &b3
                    + a2p3.clone() * &a4 * &b3
                    + rint(4) * &a2p3 * &a3 * &b4
                    - a2p4.clone() * &b5)
                    / (rint(3) * &a2p5),
            ];
            for (i, beta) in betas.into_iter().enumerate() {
                out.push(ClosedFormGen {
                    index: (i + 1) as i64,
                    alpha: Rational::zero(),
                    beta,
                    sweep: "y",
                });
            }
            Ok(out)
        }
    }
}
