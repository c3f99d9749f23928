//! Closed-form coordinate changes generated by the reduction steps, the
//! denominator recursion for composed pure-X chains, and numeric
//! analyticity-interval search. Exact rationals everywhere except the
//! fixed-point evaluation layer.

mod bigfloat;
mod chain;
mod flow;

pub use bigfloat::BigFloat;
pub use chain::{analyticity_report, compose_chain, DenominatorChain, StepInterval};
pub use flow::{FlowDirection, FlowError, FlowMap};

use crate::algebra::{Axis, JetSeries};

/// Default working precision: comfortably more than 50 significant
/// decimal digits.
pub const DEFAULT_PRECISION_BITS: u32 = 200;

/// Evaluate a jet as a polynomial vector field at a numeric point.
pub fn eval_jet(jet: &JetSeries, x: &BigFloat, y: &BigFloat) -> (BigFloat, BigFloat) {
    let prec = x.precision();
    let mut out = (BigFloat::zero(prec), BigFloat::zero(prec));
    for g in jet.grades() {
        let part = jet.part(g);
        for (m, c) in part.terms() {
            let val = BigFloat::from_rational(c, prec)
                .mul(&x.powi(m.exp_x))
                .mul(&y.powi(m.exp_y));
            match m.component {
                Axis::X => out.0 = out.0.add(&val),
                Axis::Y => out.1 = out.1.add(&val),
            }
        }
    }
    out
}
