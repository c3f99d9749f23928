//! End-to-end pipeline: classify the linear part, normalize, reduce, and
//! assemble the report.

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::JetSeries;
use crate::classify::{classify_linear, generator_basis, ClassifyError, LinearClass};
use crate::coordmap::{analyticity_report, compose_chain, DEFAULT_PRECISION_BITS};
use crate::homology::FreePolicy;
use crate::normalform::{dulac_normalize_with, NormalFormError, TransformLog};
use crate::renormalize::{
    case_dispatch, lrf_reduce, prf_reduce, CaseTag, EngineScheme, ReducedForm, ReductionKind,
    RenormalizeError,
};
use crate::report::ReductionReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scheme {
    Nf,
    PrfA,
    PrfB,
    Lrf,
}

impl Scheme {
    pub fn label(&self) -> &'static str {
        match self {
            Scheme::Nf => "nf",
            Scheme::PrfA => "prf-a",
            Scheme::PrfB => "prf-b",
            Scheme::Lrf => "lrf",
        }
    }

    pub fn parse(s: &str) -> Option<Scheme> {
        match s {
            "nf" => Some(Scheme::Nf),
            "prf-a" => Some(Scheme::PrfA),
            "prf-b" => Some(Scheme::PrfB),
            "lrf" => Some(Scheme::Lrf),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct RunConfig {
    /// Truncation grade of the computation.
    pub order: i64,
    pub scheme: Scheme,
    /// Include the transformation log in the report.
    pub emit_log: bool,
    /// Include the analyticity section (pure-X chains only).
    pub emit_analyticity: bool,
    pub free_policy: FreePolicy,
    /// Working precision for the analyticity search.
    pub precision_bits: u32,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            order: 9,
            scheme: Scheme::PrfA,
            emit_log: false,
            emit_analyticity: false,
            free_policy: FreePolicy::ZeroFree,
            precision_bits: DEFAULT_PRECISION_BITS,
        }
    }
}

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("unsupported linear part: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    NormalForm(#[from] NormalFormError),
    #[error(transparent)]
    Renormalize(#[from] RenormalizeError),
}

/// Everything a run produces, before report serialization.
pub struct PipelineOutcome {
    pub class: LinearClass,
    pub case: CaseTag,
    pub nf: JetSeries,
    pub reduced: ReducedForm,
    pub log: TransformLog,
    pub report: ReductionReport,
}

/// Run classification → normalization → reduction on a parsed jet and
/// assemble the report. Deterministic: identical inputs give identical
/// reports.
pub fn run_pipeline(system: &JetSeries, cfg: &RunConfig) -> Result<PipelineOutcome, PipelineError> {
    let jet = system.truncated(cfg.order);
    let a = jet.linear_matrix();
    let class = classify_linear(&a)?;
    if class == LinearClass::Zero {
        return Err(PipelineError::Unsupported(
            "the linear part vanishes".to_string(),
        ));
    }
    let mut notes: Vec<String> = Vec::new();
    let (nf, mut log) = dulac_normalize_with(&jet, cfg.free_policy, false)?;

    let basis = generator_basis(&class).ok();
    let case = match &basis {
        Some(b) => case_dispatch(&nf, b)?,
        None => CaseTag::linear(),
    };

    let mut scheme = cfg.scheme;
    if scheme == Scheme::Lrf && basis.is_none() {
        notes.push(format!(
            "scheme lrf needs a two-generator class; {} reduced with prf-a instead",
            class.tag()
        ));
        scheme = Scheme::PrfA;
    }
    let (reduced, reduce_log) = match scheme {
        Scheme::Nf => {
            let form = ReducedForm::with_basis(
                ReductionKind::NormalForm,
                case.clone(),
                nf.clone(),
                basis.as_ref(),
            )?;
            (form, TransformLog::new(false))
        }
        Scheme::PrfA => prf_reduce(&nf, &class, EngineScheme::A, cfg.free_policy, false)?,
        Scheme::PrfB => prf_reduce(&nf, &class, EngineScheme::B, cfg.free_policy, false)?,
        Scheme::Lrf => lrf_reduce(&nf, &class, cfg.free_policy, false)?,
    };
    log.extend(reduce_log);
    notes.extend(reduced.notes.iter().cloned());

    let analyticity = if cfg.emit_analyticity {
        match pure_x_chain(&class, &log, basis.as_ref()) {
            Ok(alphas) => {
                let chain = compose_chain(&alphas);
                let steps = analyticity_report(&chain, chain.len(), cfg.precision_bits);
                Some((chain, steps))
            }
            Err(reason) => {
                notes.push(format!("analyticity section skipped: {reason}"));
                None
            }
        }
    } else {
        None
    };

    let report = ReductionReport::assemble(
        &class,
        &case,
        scheme,
        cfg,
        &nf,
        &reduced,
        cfg.emit_log.then_some(&log),
        analyticity.as_ref(),
        basis.as_ref(),
        notes,
    );

    Ok(PipelineOutcome {
        class,
        case,
        nf,
        reduced,
        log,
        report,
    })
}

/// Extract the per-grade coefficients `α_1, α_2, …` of a transformation
/// log that happens to be a pure-X chain of the one-variable family
/// (one step per grade, ascending, no Y components): the only case where
/// the composed coordinate change has the closed denominator form.
fn pure_x_chain(
    class: &LinearClass,
    log: &TransformLog,
    basis: Option<&crate::classify::GeneratorBasis>,
) -> Result<Vec<crate::algebra::Rational>, String> {
    if !matches!(class, LinearClass::S3 { .. }) {
        return Err("chain analysis applies to the one-zero-eigenvalue class only".to_string());
    }
    let basis = basis.ok_or_else(|| "no generator basis".to_string())?;
    let mut alphas: Vec<crate::algebra::Rational> = Vec::new();
    for step in &log.steps {
        let c = basis
            .decompose(&step.field)
            .map_err(|_| "log step outside the generator basis".to_string())?;
        if !c.b.is_zero() {
            return Err("log contains a step with a Y component".to_string());
        }
        let k = step.grade as usize;
        if k != alphas.len() + 1 {
            return Err("log steps are not one per grade in ascending order".to_string());
        }
        alphas.push(c.a);
    }
    Ok(alphas)
}
