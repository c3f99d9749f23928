//! Standard Poincaré–Dulac normalization: grade by grade, remove every
//! component of the jet that lies in the range of the linear homological
//! operator, using time-one flows of polynomial generators.

use thiserror::Error;

use crate::algebra::{bch_conjugate, HomVF, JetSeries, Rational, VecMonomial};
use crate::homology::{operator_matrix, solve_homological, FreePolicy, HomologyError};

#[derive(Debug, Error)]
pub enum NormalFormError {
    #[error("zero linear part is not supported by normalization")]
    NotSupported,
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// Which pipeline step produced a generator.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stage {
    Dulac,
    /// Renormalization stage index `s` (the operator `{f_s, ·}` used).
    Prf(usize),
    LrfX,
    LrfY,
}

impl Stage {
    pub fn label(&self) -> String {
        match self {
            Stage::Dulac => "dulac".to_string(),
            Stage::Prf(s) => format!("prf-{s}"),
            Stage::LrfX => "lrf-x".to_string(),
            Stage::LrfY => "lrf-y".to_string(),
        }
    }
}

/// A grade-`k` transformation generator together with its provenance.
#[derive(Clone, Debug)]
pub struct Generator {
    pub grade: i64,
    pub field: HomVF,
    pub stage: Stage,
    pub step_index: usize,
}

/// Ordered list of the generators applied by a pipeline, with optional
/// per-step snapshots of the transformed jet.
#[derive(Clone, Debug, Default)]
pub struct TransformLog {
    pub steps: Vec<Generator>,
    pub snapshots: Option<Vec<JetSeries>>,
}

impl TransformLog {
    pub fn new(with_snapshots: bool) -> Self {
        TransformLog {
            steps: Vec::new(),
            snapshots: with_snapshots.then(Vec::new),
        }
    }

    pub fn push(&mut self, stage: Stage, field: HomVF, jet_after: &JetSeries) {
        let step_index = self.steps.len();
        self.steps.push(Generator {
            grade: field.grade(),
            field,
            stage,
            step_index,
        });
        if let Some(snaps) = &mut self.snapshots {
            snaps.push(jet_after.clone());
        }
    }

    pub fn extend(&mut self, other: TransformLog) {
        for mut g in other.steps {
            g.step_index = self.steps.len();
            self.steps.push(g);
        }
        match (&mut self.snapshots, other.snapshots) {
            (Some(a), Some(b)) => a.extend(b),
            (Some(_), None) => self.snapshots = None,
            _ => {}
        }
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Replay a log: conjugate `w` by each recorded generator in order.
/// Reproduces the pipeline output bit-exactly.
pub fn replay(w: &JetSeries, log: &TransformLog) -> JetSeries {
    let mut jet = w.clone();
    for step in &log.steps {
        jet = bch_conjugate(&jet, &step.field);
    }
    jet
}

/// Take a jet to standard normal form: after the grade-`k` step the part
/// of grade `k` is Bargmann-orthogonal to `ran{Aξ, ·}`, and grades below
/// `k` never change again.
pub fn dulac_normalize(w: &JetSeries) -> Result<(JetSeries, TransformLog), NormalFormError> {
    dulac_normalize_with(w, FreePolicy::ZeroFree, false)
}

pub fn dulac_normalize_with(
    w: &JetSeries,
    policy: FreePolicy,
    snapshots: bool,
) -> Result<(JetSeries, TransformLog), NormalFormError> {
    let f0 = w.part(0);
    if f0.is_zero() {
        return Err(NormalFormError::NotSupported);
    }
    let mut jet = w.clone();
    let mut log = TransformLog::new(snapshots);
    for k in 1..=w.order() {
        let rhs = jet.part(k);
        if rhs.is_zero() {
            continue;
        }
        let domain: Vec<HomVF> = VecMonomial::basis_of_grade(k)
            .into_iter()
            .map(|m| HomVF::monomial(m, Rational::from_integer(1.into())))
            .collect();
        let op = operator_matrix(&f0, &domain, k)?;
        let sol = solve_homological(&op, &rhs, policy)?;
        if !sol.generator.is_zero() {
            jet = bch_conjugate(&jet, &sol.generator);
            log.push(Stage::Dulac, sol.generator, &jet);
        }
    }
    Ok((jet, log))
}

/// True when every nonlinear part is orthogonal to `ran{Aξ, ·}`.
pub fn is_normal_form(w: &JetSeries) -> Result<bool, NormalFormError> {
    let f0 = w.part(0);
    if f0.is_zero() {
        return Err(NormalFormError::NotSupported);
    }
    for k in 1..=w.order() {
        let part = w.part(k);
        if part.is_zero() {
            continue;
        }
        let domain: Vec<HomVF> = VecMonomial::basis_of_grade(k)
            .into_iter()
            .map(|m| HomVF::monomial(m, Rational::from_integer(1.into())))
            .collect();
        let op = operator_matrix(&f0, &domain, k)?;
        if !op.orthogonal_to_range(&part) {
            return Ok(false);
        }
    }
    Ok(true)
}
