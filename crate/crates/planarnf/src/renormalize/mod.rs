//! Reduction of standard normal forms to Poincaré renormalized form
//! (schemes A and B) and Lie renormalized form, with the closed-form
//! generator tables as an independent oracle.

mod cases;
mod closed_form;
mod engine;
mod lrf;

pub use cases::{case_dispatch, CaseMajor, CaseSub, CaseTag};
pub use closed_form::{closed_form_generators, ClosedFormGen, ClosedFormScheme};
pub use engine::{fk_membership, n2_reduce, prf_reduce, s2_reduce, EngineScheme};
pub use lrf::lrf_reduce;

use thiserror::Error;

use crate::algebra::{JetSeries, Rational};
use crate::classify::{ClassifyError, GeneratorBasis};
use crate::homology::HomologyError;
use crate::normalform::NormalFormError;

#[derive(Debug, Error)]
pub enum RenormalizeError {
    #[error("class {0} is outside the reduction pipeline")]
    UnsupportedClass(String),
    #[error("leading coefficient required by the case is zero")]
    CaseMismatch,
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    NormalForm(#[from] NormalFormError),
}

/// Which reduction produced a form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionKind {
    NormalForm,
    PrfA,
    PrfB,
    Lrf,
}

impl ReductionKind {
    pub fn label(&self) -> &'static str {
        match self {
            ReductionKind::NormalForm => "nf",
            ReductionKind::PrfA => "prf-a",
            ReductionKind::PrfB => "prf-b",
            ReductionKind::Lrf => "lrf",
        }
    }
}

/// A reduced form: the jet itself plus, when the class carries a
/// two-generator basis, its exact coefficients in that basis.
#[derive(Clone, Debug)]
pub struct ReducedForm {
    pub kind: ReductionKind,
    pub case: CaseTag,
    pub truncation: i64,
    pub jet: JetSeries,
    /// `(index, x-coefficient, y-coefficient)` per populated index, linear
    /// part included at index 0. Empty when no generator basis applies.
    pub coefficients: Vec<(i64, Rational, Rational)>,
    pub notes: Vec<String>,
}

impl ReducedForm {
    pub(crate) fn with_basis(
        kind: ReductionKind,
        case: CaseTag,
        jet: JetSeries,
        basis: Option<&GeneratorBasis>,
    ) -> Result<Self, RenormalizeError> {
        let coefficients = match basis {
            Some(b) => b
                .decompose_jet(&jet)?
                .into_iter()
                .map(|(k, c)| (k, c.a, c.b))
                .collect(),
            None => Vec::new(),
        };
        Ok(ReducedForm {
            kind,
            case,
            truncation: jet.order(),
            jet,
            coefficients,
            notes: Vec::new(),
        })
    }

    /// Indexes with a nonzero X-side coefficient (linear part excluded).
    pub fn x_support(&self) -> Vec<i64> {
        use num_traits::Zero;
        self.coefficients
            .iter()
            .filter(|(k, a, _)| *k > 0 && !a.is_zero())
            .map(|(k, _, _)| *k)
            .collect()
    }

    /// Indexes with a nonzero Y-side coefficient (linear part excluded).
    pub fn y_support(&self) -> Vec<i64> {
        use num_traits::Zero;
        self.coefficients
            .iter()
            .filter(|(k, _, b)| *k > 0 && !b.is_zero())
            .map(|(k, _, _)| *k)
            .collect()
    }
}
