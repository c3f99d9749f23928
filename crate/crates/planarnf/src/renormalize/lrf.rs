use num_traits::Zero;

use crate::algebra::{bch_conjugate, JetSeries, Rational};
use crate::classify::{generator_basis, LinearClass};
use crate::homology::FreePolicy;
use crate::normalform::{Stage, TransformLog};

use super::cases::{case_dispatch, CaseMajor, CaseSub};
use super::engine::{prf_reduce, EngineScheme};
use super::{ReducedForm, ReductionKind, RenormalizeError};

/// Two-sweep reduction exploiting the splitting of the normal-form algebra
/// into the X family and the abelian ideal of Y generators.
///
/// First sweep: generators `α_k X_k` eliminate every X term above index μ
/// except the unremovable index 2μ. Second sweep: generators `β_k Y_k`
/// eliminate every Y term above index μ; since the Y family is an abelian
/// ideal, this sweep cannot touch the X coefficients. Output support:
/// `{X_μ, X_2μ} ∪ {Y_ν..Y_μ}`.
///
/// Applies to the cases with `ν < μ` (first Y index below first X index);
/// anything else delegates to the generic reduction with a note.
pub fn lrf_reduce(
    nf: &JetSeries,
    cls: &LinearClass,
    policy: FreePolicy,
    snapshots: bool,
) -> Result<(ReducedForm, TransformLog), RenormalizeError> {
    let basis = match cls {
        LinearClass::S3 { .. } | LinearClass::S4Opposite { .. } | LinearClass::S2 { .. } => {
            generator_basis(cls)?
        }
        _ => {
            let (mut form, log) = prf_reduce(nf, cls, EngineScheme::A, policy, snapshots)?;
            form.notes.push(
                "two-sweep reduction needs a two-generator class; generic reduction used".into(),
            );
            return Ok((form, log));
        }
    };
    let case = case_dispatch(nf, &basis)?;
    let applicable = matches!(
        (case.major, case.degenerate_sub),
        (CaseMajor::B, _) | (CaseMajor::D, Some(CaseSub::Db))
    ) && case.mu.is_some();
    if !applicable {
        let (mut form, log) = prf_reduce(nf, cls, EngineScheme::A, policy, snapshots)?;
        form.notes.push(format!(
            "case ({}) gains nothing from the two-sweep scheme; generic reduction used",
            case.label()
        ));
        return Ok((form, log));
    }
    let mu = case.mu.expect("checked above");
    let sigma = basis.sigma().clone();
    let max_index = basis.max_index(nf.order());
    let mut jet = nf.clone();
    let mut log = TransformLog::new(snapshots);

    // X sweep: kill the X coefficient at index mu + k using α_k X_k.
    for k in 1..=(max_index - mu) {
        if k == mu {
            continue; // [X_mu, X_mu] = 0: the 2mu term is the obstruction
        }
        let target = mu + k;
        let coeffs = basis.decompose(&jet.part(basis.grade_of_index(target)))?;
        if coeffs.a.is_zero() {
            continue;
        }
        let a_mu = basis.decompose(&jet.part(basis.grade_of_index(mu)))?.a;
        // new a_{mu+k} = a_{mu+k} + α σ (mu − k) a_mu
        let alpha =
            coeffs.a.clone() / (sigma.clone() * Rational::from_integer((k - mu).into()) * &a_mu);
        let h = basis.x_gen(k).scaled(&alpha);
        jet = bch_conjugate(&jet, &h);
        log.push(Stage::LrfX, h, &jet);
    }

    // Y sweep: kill the Y coefficient at index mu + k using β_k Y_k.
    for k in 1..=(max_index - mu) {
        let target = mu + k;
        let coeffs = basis.decompose(&jet.part(basis.grade_of_index(target)))?;
        if coeffs.b.is_zero() {
            continue;
        }
        let a_mu = basis.decompose(&jet.part(basis.grade_of_index(mu)))?.a;
        // new b_{mu+k} = b_{mu+k} − β σ k a_mu
        let beta = coeffs.b.clone() / (sigma.clone() * Rational::from_integer(k.into()) * &a_mu);
        let h = basis.y_gen(k).scaled(&beta);
        jet = bch_conjugate(&jet, &h);
        log.push(Stage::LrfY, h, &jet);
    }

    let form = ReducedForm::with_basis(ReductionKind::Lrf, case, jet, Some(&basis))?;
    Ok((form, log))
}
