use num_traits::Zero;

use crate::algebra::JetSeries;
use crate::classify::GeneratorBasis;

use super::RenormalizeError;

/// Leading-coefficient case of a normal form in a two-generator basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseMajor {
    /// `a_1 ≠ 0, b_1 = 0`
    A,
    /// `a_1 = 0, b_1 ≠ 0`
    B,
    /// both nonzero
    C,
    /// both zero, some higher index populated
    D,
    /// no nonlinear terms at all
    LinearNf,
}

impl CaseMajor {
    pub fn label(&self) -> &'static str {
        match self {
            CaseMajor::A => "a",
            CaseMajor::B => "b",
            CaseMajor::C => "c",
            CaseMajor::D => "d",
            CaseMajor::LinearNf => "linear",
        }
    }
}

/// Subdivision of the degenerate case by the order of the first nonzero
/// X- and Y-side coefficients.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseSub {
    /// `μ < ν`
    Da,
    /// `μ > ν`
    Db,
    /// `μ = ν`
    Dc,
}

impl CaseSub {
    pub fn label(&self) -> &'static str {
        match self {
            CaseSub::Da => "da",
            CaseSub::Db => "db",
            CaseSub::Dc => "dc",
        }
    }
}

/// Case classification of a normal form, in index space: `mu` is the first
/// index with a nonzero X coefficient, `nu` the first with a nonzero Y
/// coefficient; either may be absent within the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTag {
    pub major: CaseMajor,
    pub degenerate_sub: Option<CaseSub>,
    pub mu: Option<i64>,
    pub nu: Option<i64>,
}

impl CaseTag {
    pub fn linear() -> Self {
        CaseTag {
            major: CaseMajor::LinearNf,
            degenerate_sub: None,
            mu: None,
            nu: None,
        }
    }

    pub fn label(&self) -> String {
        match self.degenerate_sub {
            Some(sub) => sub.label().to_string(),
            None => self.major.label().to_string(),
        }
    }
}

/// Classify a normal form by exact zero-tests on its basis coefficients.
pub fn case_dispatch(nf: &JetSeries, basis: &GeneratorBasis) -> Result<CaseTag, RenormalizeError> {
    let coeffs = basis.decompose_jet(nf)?;
    let mut a1 = false;
    let mut b1 = false;
    let mut mu = None;
    let mut nu = None;
    for (k, c) in &coeffs {
        if *k < 1 {
            continue;
        }
        if !c.a.is_zero() {
            if *k == 1 {
                a1 = true;
            }
            if mu.is_none() {
                mu = Some(*k);
            }
        }
        if !c.b.is_zero() {
            if *k == 1 {
                b1 = true;
            }
            if nu.is_none() {
                nu = Some(*k);
            }
        }
    }
    let major = match (a1, b1) {
        (true, false) => CaseMajor::A,
        (false, true) => CaseMajor::B,
        (true, true) => CaseMajor::C,
        (false, false) if mu.is_none() && nu.is_none() => CaseMajor::LinearNf,
        (false, false) => CaseMajor::D,
    };
    let degenerate_sub = if major == CaseMajor::D {
        match (mu, nu) {
            (Some(m), Some(n)) if m < n => Some(CaseSub::Da),
            (Some(m), Some(n)) if m > n => Some(CaseSub::Db),
            (Some(_), Some(_)) => Some(CaseSub::Dc),
            (Some(_), None) => Some(CaseSub::Da),
            (None, Some(_)) => Some(CaseSub::Db),
            (None, None) => None,
        }
    } else {
        None
    };
    Ok(CaseTag {
        major,
        degenerate_sub,
        mu,
        nu,
    })
}
