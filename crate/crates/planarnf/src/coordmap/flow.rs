use num_traits::Zero;
use thiserror::Error;

use crate::algebra::Rational;

use super::bigfloat::BigFloat;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FlowError {
    #[error("point lies outside the analyticity domain of the map")]
    OutsideDomain,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlowDirection {
    Forward,
    Inverse,
}

/// The closed-form time-one flow of the generator `α x^{k+1} ∂x + β x^k y ∂y`.
///
/// Forward, for `α ≠ 0` and `z = 1 − α k x^k > 0`:
/// `x̄ = x z^{−1/k}`, `ȳ = y z^{−β/(kα)}`.
/// For `α = 0` the x map is the identity and the flow equation for y
/// integrates to `ȳ = y · exp(β x^k)`.
///
/// The inverse is obtained by solving the forward map: with
/// `u = 1 + α k x̄^k > 0`, `x = x̄ u^{−1/k}` and `y = ȳ u^{−β/(kα)}`
/// (resp. `y = ȳ · exp(−β x̄^k)` when `α = 0`).
#[derive(Clone, Debug)]
pub struct FlowMap {
    pub grade: i64,
    pub alpha: Rational,
    pub beta: Rational,
}

impl FlowMap {
    pub fn new(grade: i64, alpha: Rational, beta: Rational) -> Self {
        assert!(grade >= 1);
        FlowMap { grade, alpha, beta }
    }

    pub fn eval(
        &self,
        direction: FlowDirection,
        x: &BigFloat,
        y: &BigFloat,
    ) -> Result<(BigFloat, BigFloat), FlowError> {
        let prec = x.precision();
        let k = u32::try_from(self.grade).expect("grade fits u32");
        let xk = x.powi(k);
        if self.alpha.is_zero() {
            if self.beta.is_zero() {
                return Ok((x.clone(), y.clone()));
            }
            let arg = xk.mul(&BigFloat::from_rational(&self.beta, prec));
            let factor = match direction {
                FlowDirection::Forward => arg.exp(),
                FlowDirection::Inverse => arg.neg().exp(),
            };
            return Ok((x.clone(), y.mul(&factor)));
        }
        let ak = BigFloat::from_rational(
            &(self.alpha.clone() * Rational::from_integer(self.grade.into())),
            prec,
        );
        let one = BigFloat::one(prec);
        let z = match direction {
            FlowDirection::Forward => one.sub(&ak.mul(&xk)),
            FlowDirection::Inverse => one.add(&ak.mul(&xk)),
        };
        if !z.is_positive() {
            return Err(FlowError::OutsideDomain);
        }
        let root = z.root(k).expect("positive radicand");
        let new_x = x.div(&root);
        // exponent β/(kα) with the sign of the direction
        let expo =
            self.beta.clone() / (Rational::from_integer(self.grade.into()) * self.alpha.clone());
        let factor = z.pow_rational(&-expo).expect("positive base");
        let new_y = y.mul(&factor);
        Ok((new_x, new_y))
    }
}
