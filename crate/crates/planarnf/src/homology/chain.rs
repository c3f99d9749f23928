use num_traits::Zero;

use crate::algebra::{bargmann_inner, bracket, HomVF, JetSeries, Rational, VecMonomial};
use crate::linalg::{self, QMatrix};

use super::operator::HomologyError;

/// A jet whose parts are guaranteed final up to a stated grade. Chain
/// construction refuses to look past the stabilized prefix rather than
/// silently using data that a later reduction step could still change.
#[derive(Clone, Debug)]
pub struct StabilizedJet {
    jet: JetSeries,
    stable_upto: usize,
}

impl StabilizedJet {
    pub fn new(jet: JetSeries, stable_upto: usize) -> Self {
        StabilizedJet { jet, stable_upto }
    }

    /// A finished jet: every part is final.
    pub fn fully(jet: JetSeries) -> Self {
        let upto = jet.order() as usize;
        StabilizedJet {
            jet,
            stable_upto: upto,
        }
    }

    pub fn jet(&self) -> &JetSeries {
        &self.jet
    }

    pub fn stable_upto(&self) -> usize {
        self.stable_upto
    }
}

/// Nested bases of the generator spaces `H^(s)` and the membership spaces
/// `F^(s)`, restricted to one grade.
#[derive(Clone, Debug)]
pub struct SubspaceChain {
    pub grade: i64,
    /// `h_spaces[s]` spans `H^(s) ∩ F_grade`; index 0 is the full slice.
    pub h_spaces: Vec<Vec<HomVF>>,
    /// `f_spaces[s]` spans `F^(s) ∩ F_grade`; index 0 is the full slice.
    pub f_spaces: Vec<Vec<HomVF>>,
}

/// Build the chain slices at `grade`, through stage `up_to`, from the
/// stabilized parts of `stab`.
///
/// `H^(0)` is the full slice; `H^(s+1) = H^(s) ∩ ker{f_s, ·}`. `F^(s)` is
/// the joint Bargmann orthocomplement of the ranges of `{f_j, ·}` restricted
/// to `H^(j)`, for `j ≤ s`, with generator grades at least 1.
pub fn build_chain(
    stab: &StabilizedJet,
    up_to: usize,
    grade: i64,
) -> Result<SubspaceChain, HomologyError> {
    if up_to > stab.stable_upto() {
        return Err(HomologyError::StaleChain {
            requested: up_to,
            stable: stab.stable_upto(),
        });
    }
    let jet = stab.jet();
    let full: Vec<HomVF> = VecMonomial::basis_of_grade(grade)
        .into_iter()
        .map(|m| HomVF::monomial(m, Rational::from_integer(1.into())))
        .collect();
    let mut h_spaces = vec![full.clone()];
    for s in 0..up_to {
        let f_s = jet.part(s as i64);
        let prev = h_spaces.last().unwrap();
        let next = if s > 0 && f_s.is_zero() {
            prev.clone()
        } else {
            kernel_within(&f_s, prev)
        };
        h_spaces.push(next);
    }
    // F^(s): cut the full slice down by range orthogonality, stage by stage.
    let mut f_spaces: Vec<Vec<HomVF>> = Vec::with_capacity(up_to + 1);
    let mut current = full;
    // F^(0) already excludes ran(L_0): stage 0 constraints apply from s = 0.
    for s in 0..=up_to {
        let f_s = jet.part(s as i64);
        let gen_grade = grade - s as i64;
        if !(s > 0 && f_s.is_zero()) && gen_grade >= 1 {
            // domain for stage s at this target grade
            let domain = h_space_at(jet, s, gen_grade);
            let images: Vec<HomVF> = domain
                .iter()
                .map(|d| bracket(&f_s, d))
                .filter(|f| !f.is_zero())
                .collect();
            if !images.is_empty() {
                current = orthocomplement_within(&current, &images);
            }
        }
        f_spaces.push(current.clone());
    }
    Ok(SubspaceChain {
        grade,
        h_spaces,
        f_spaces,
    })
}

/// Basis of `ker {f, ·}` inside the span of `basis` (all of one grade).
fn kernel_within(f: &HomVF, basis: &[HomVF]) -> Vec<HomVF> {
    if basis.is_empty() {
        return Vec::new();
    }
    let target = f.grade() + basis[0].grade();
    let columns: Vec<Vec<Rational>> = basis.iter().map(|d| bracket(f, d).coords()).collect();
    let rows = VecMonomial::basis_of_grade(target).len();
    let m = QMatrix::from_columns(rows, &columns);
    linalg::kernel(&m)
        .iter()
        .map(|v| combine(basis, v))
        .collect()
}

/// Basis of `{v ∈ span(basis) : ⟨v, c⟩ = 0 ∀ c ∈ constraints}`.
fn orthocomplement_within(basis: &[HomVF], constraints: &[HomVF]) -> Vec<HomVF> {
    if basis.is_empty() || constraints.is_empty() {
        return basis.to_vec();
    }
    let mut m = QMatrix::zeros(constraints.len(), basis.len());
    for (i, c) in constraints.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            m.set(i, j, bargmann_inner(b, c));
        }
    }
    linalg::kernel(&m)
        .iter()
        .map(|v| combine(basis, v))
        .collect()
}

fn combine(basis: &[HomVF], coords: &[Rational]) -> HomVF {
    let mut out = HomVF::zero(basis[0].grade());
    for (c, b) in coords.iter().zip(basis) {
        if !c.is_zero() {
            out = out.add(&b.scaled(c));
        }
    }
    out
}

/// `H^(s) ∩ F_p` for the stabilized jet, recomputed from scratch.
pub(crate) fn h_space_at(jet: &JetSeries, s: usize, p: i64) -> Vec<HomVF> {
    let mut basis: Vec<HomVF> = VecMonomial::basis_of_grade(p)
        .into_iter()
        .map(|m| HomVF::monomial(m, Rational::from_integer(1.into())))
        .collect();
    for j in 0..s {
        let f_j = jet.part(j as i64);
        if j > 0 && f_j.is_zero() {
            continue;
        }
        basis = kernel_within(&f_j, &basis);
        if basis.is_empty() {
            break;
        }
    }
    basis
}

/// Span-equality test for two sets of homogeneous fields of one grade.
pub fn same_span(a: &[HomVF], b: &[HomVF]) -> bool {
    if a.is_empty() && b.is_empty() {
        return true;
    }
    let grade = a
        .first()
        .or_else(|| b.first())
        .map(|f| f.grade())
        .unwrap_or(0);
    if a.iter().chain(b.iter()).any(|f| f.grade() != grade) {
        return false;
    }
    let rows = VecMonomial::basis_of_grade(grade).len();
    let cols_a: Vec<Vec<Rational>> = a.iter().map(HomVF::coords).collect();
    let cols_b: Vec<Vec<Rational>> = b.iter().map(HomVF::coords).collect();
    let mut all = cols_a.clone();
    all.extend(cols_b.clone());
    let ra = linalg::rank(&QMatrix::from_columns(rows, &cols_a));
    let rb = linalg::rank(&QMatrix::from_columns(rows, &cols_b));
    let rall = linalg::rank(&QMatrix::from_columns(rows, &all));
    ra == rb && rb == rall
}
