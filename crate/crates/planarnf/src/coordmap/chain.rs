use crate::algebra::{rat, Rational};

use super::bigfloat::BigFloat;

/// The composed x-coordinate change of a pure-X generator sequence,
/// written as `x ↦ x / B_k(x)` with the denominators satisfying
/// `B_k = (B_{k−1}^k − (−1)^k γ_k x^k)^{1/k}`, `B_0 ≡ 1`, `γ_k = (−1)^k k α_k`.
#[derive(Clone, Debug)]
pub struct DenominatorChain {
    alphas: Vec<Rational>,
    gammas: Vec<Rational>,
}

/// Build the chain from the step coefficients `α_1, α_2, …` of a
/// generator sequence whose y components all vanish.
pub fn compose_chain(alphas: &[Rational]) -> DenominatorChain {
    let gammas = alphas
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let k = (i + 1) as i64;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            rat(sign * k, 1) * a
        })
        .collect();
    DenominatorChain {
        alphas: alphas.to_vec(),
        gammas,
    }
}

impl DenominatorChain {
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    pub fn gammas(&self) -> &[Rational] {
        &self.gammas
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    /// `B_steps(x)` by the recursion; `None` when a radicand leaves the
    /// positive branch.
    pub fn denominator(&self, steps: usize, x: &BigFloat) -> Option<BigFloat> {
        assert!(steps <= self.len());
        let prec = x.precision();
        let mut b = BigFloat::one(prec);
        for k in 1..=steps {
            let kk = k as u32;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let coeff = BigFloat::from_rational(&(rat(sign, 1) * &self.gammas[k - 1]), prec);
            let radicand = b.powi(kk).sub(&coeff.mul(&x.powi(kk)));
            if !radicand.is_positive() {
                return None;
            }
            b = radicand.root(kk).expect("positive radicand");
        }
        Some(b)
    }

    /// `x / B_steps(x)`.
    pub fn eval_via_denominator(&self, steps: usize, x: &BigFloat) -> Option<BigFloat> {
        self.denominator(steps, x).map(|b| x.div(&b))
    }

    /// Step-by-step composition of the individual maps
    /// `x ↦ x (1 − α_k k x^k)^{−1/k}`.
    pub fn eval_composed(&self, steps: usize, x: &BigFloat) -> Option<BigFloat> {
        assert!(steps <= self.len());
        let prec = x.precision();
        let one = BigFloat::one(prec);
        let mut cur = x.clone();
        for k in 1..=steps {
            let kk = k as u32;
            let ak = BigFloat::from_rational(&(rat(k as i64, 1) * &self.alphas[k - 1]), prec);
            let z = one.sub(&ak.mul(&cur.powi(kk)));
            if !z.is_positive() {
                return None;
            }
            cur = cur.div(&z.root(kk).expect("positive radicand"));
        }
        Some(cur)
    }
}

/// One row of the analyticity report: the maximal open interval around the
/// origin on which the first `step` composed maps all stay inside their
/// domains, found by bisection on the domain-violation predicate.
#[derive(Clone, Debug)]
pub struct StepInterval {
    pub step: usize,
    /// Finite lower endpoint; `None` means unbounded below.
    pub lower: Option<f64>,
    /// Finite upper endpoint; `None` means unbounded above.
    pub upper: Option<f64>,
    /// Tabulated reference bounds, attached when this chain matches the
    /// classical γ = 1, 2, 6, 18, 60, 198, 693 sequence. The search method
    /// here tracks real domain violations of the composed maps only, so
    /// agreement with the reference values is reported, not guaranteed.
    pub reference: Option<(f64, Option<f64>)>,
}

const REFERENCE_GAMMAS: [(i64, i64); 7] =
    [(1, 1), (2, 1), (6, 1), (18, 1), (60, 1), (198, 1), (693, 1)];

const REFERENCE_BOUNDS: [(f64, Option<f64>); 7] = [
    (-1.0, None),
    (-0.333333, Some(1.0)),
    (-0.270929, Some(1.0)),
    (-0.244594, Some(0.668534)),
    (-0.228796, Some(0.668534)),
    (-0.21915, Some(0.561419)),
    (-0.21224, Some(0.561419)),
];

/// Per-step analyticity intervals for the composed maps of a chain.
///
/// The search brackets the nearest real point, on each side of the origin,
/// where some intermediate map's radicand reaches zero, then bisects for
/// 200 iterations at the given working precision.
pub fn analyticity_report(chain: &DenominatorChain, steps: usize, prec: u32) -> Vec<StepInterval> {
    assert!(steps <= chain.len());
    let mut out = Vec::with_capacity(steps);
    let matches_reference = chain
        .gammas
        .iter()
        .zip(REFERENCE_GAMMAS.iter())
        .all(|(g, (n, d))| g == &rat(*n, *d));
    for step in 1..=steps {
        let valid = |x: &BigFloat| chain.eval_composed(step, x).is_some();
        let upper = search_boundary(&valid, true, prec);
        let lower = search_boundary(&valid, false, prec);
        let reference = (matches_reference && step <= REFERENCE_BOUNDS.len())
            .then(|| REFERENCE_BOUNDS[step - 1]);
        out.push(StepInterval {
            step,
            lower,
            upper,
            reference,
        });
    }
    out
}

/// Nearest domain-violation point on one side of the origin, or `None`
/// if the maps stay valid out to the unbounded-search cutoff.
fn search_boundary<F: Fn(&BigFloat) -> bool>(valid: &F, positive: bool, prec: u32) -> Option<f64> {
    let sign = if positive { 1 } else { -1 };
    let mut lo = BigFloat::zero(prec);
    let mut hi = BigFloat::from_rational(&rat(sign, 1024), prec);
    let cutoff = BigFloat::from_i64(sign * 1_000_000_000, prec);
    // geometric escape until invalid or clearly unbounded
    while valid(&hi) {
        lo = hi.clone();
        hi = hi.mul(&BigFloat::from_i64(2, prec));
        if hi.abs().cmp_value(&cutoff.abs()) == std::cmp::Ordering::Greater {
            return None;
        }
    }
    for _ in 0..200 {
        let mid = lo.add(&hi).div(&BigFloat::from_i64(2, prec));
        if valid(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(round_sig(hi.to_f64(), 6))
}

fn round_sig(v: f64, digits: i32) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    let mag = v.abs().log10().floor() as i32;
    let factor = 10f64.powi(digits - 1 - mag);
    (v * factor).round() / factor
}
