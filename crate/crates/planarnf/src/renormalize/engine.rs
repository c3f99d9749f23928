use num_traits::Zero;

use crate::algebra::{
    bargmann_inner, bch_conjugate, bracket, HomVF, JetSeries, Rational, VecMonomial,
};
use crate::classify::{generator_basis, GeneratorBasis, LinearClass};
use crate::homology::{operator_matrix, solve_joint, FreePolicy, GradedOperator};
use crate::linalg::{self, QMatrix};
use crate::normalform::{Stage, TransformLog};

use super::cases::case_dispatch;
use super::{CaseTag, ReducedForm, ReductionKind, RenormalizeError};

/// Iteration order of the renormalization stages.
///
/// Both schemes solve the same stage equations; they differ in whether the
/// target grade or the stage index is the outer loop. With overlapping
/// stage ranges the two can distribute coefficients differently between
/// generators, so reduced coefficients are only guaranteed to agree on
/// their support shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EngineScheme {
    /// Per target grade, solve all stages jointly (earlier stages take
    /// priority where ranges overlap).
    A,
    /// Stage-outer sweeps: stage `s` cleans every grade above it before the
    /// next stage runs.
    B,
}

/// `H^(s) ∩ F_p` for a jet whose parts below `s` are final.
///
/// With a two-generator basis the stage-1 space is the distinguished
/// ordered pair `[Y, X]` (Y first, so zero-free solves leave X components
/// free last); higher stages are kernels computed inside the previous
/// space.
pub(crate) fn h_space_for(
    jet: &JetSeries,
    s: usize,
    p: i64,
    basis: Option<&GeneratorBasis>,
) -> Vec<HomVF> {
    if p < 1 {
        return Vec::new();
    }
    let mut space: Vec<HomVF>;
    let mut start_stage = 0;
    match basis {
        Some(b) if s >= 1 => {
            space = match b.index_of_grade(p) {
                Some(idx) if idx >= 1 => b.domain_at_index(idx),
                _ => Vec::new(),
            };
            start_stage = 1;
        }
        _ => {
            space = VecMonomial::basis_of_grade(p)
                .into_iter()
                .map(|m| HomVF::monomial(m, Rational::from_integer(1.into())))
                .collect();
        }
    }
    for j in start_stage..s {
        if space.is_empty() {
            return space;
        }
        let f_j = jet.part(j as i64);
        if j > 0 && f_j.is_zero() {
            continue;
        }
        let columns: Vec<Vec<Rational>> = space.iter().map(|d| bracket(&f_j, d).coords()).collect();
        let rows = VecMonomial::basis_of_grade(p + j as i64).len();
        let m = QMatrix::from_columns(rows, &columns);
        space = linalg::kernel(&m)
            .iter()
            .map(|coords| {
                let mut out = HomVF::zero(p);
                for (c, d) in coords.iter().zip(&space) {
                    if !c.is_zero() {
                        out = out.add(&d.scaled(c));
                    }
                }
                out
            })
            .collect();
    }
    space
}

struct Engine<'a> {
    jet: JetSeries,
    basis: Option<&'a GeneratorBasis>,
    policy: FreePolicy,
    log: TransformLog,
}

impl<'a> Engine<'a> {
    fn new(
        nf: &JetSeries,
        basis: Option<&'a GeneratorBasis>,
        policy: FreePolicy,
        snapshots: bool,
    ) -> Self {
        Engine {
            jet: nf.clone(),
            basis,
            policy,
            log: TransformLog::new(snapshots),
        }
    }

    fn stage_operator(
        &self,
        s: usize,
        target: i64,
    ) -> Result<Option<GradedOperator>, RenormalizeError> {
        let p = target - s as i64;
        if p < 1 {
            return Ok(None);
        }
        let f_s = self.jet.part(s as i64);
        if s > 0 && f_s.is_zero() {
            return Ok(None);
        }
        let domain = h_space_for(&self.jet, s, p, self.basis);
        if domain.is_empty() {
            return Ok(None);
        }
        Ok(Some(operator_matrix(&f_s, &domain, target)?))
    }

    /// Joint homological step at one target grade over the given stages.
    /// Applies the resulting generators in ascending stage order.
    ///
    /// With a two-generator basis the higher stages are solved in that
    /// basis' coordinates, killing X/Y coefficients the way the explicit
    /// calculus does. This coincides with Bargmann-orthogonal projection
    /// whenever the two generators are Bargmann-orthogonal (every class
    /// except the opposite-sign family with p ≠ q, whose generator pair
    /// has a nonzero cross product).
    fn step_target(&mut self, target: i64, stages: &[usize]) -> Result<(), RenormalizeError> {
        match self.basis {
            Some(basis) => {
                // stage 0 first: strip any component outside ker(L0+)
                if stages.contains(&0) && !self.jet.part(target).is_zero() {
                    if let Some(op) = self.stage_operator(0, target)? {
                        let rhs = self.jet.part(target);
                        let (gens, _) = solve_joint(&[&op], &rhs, self.policy)?;
                        if let Some(h) = gens.into_iter().next() {
                            if !h.is_zero() {
                                self.jet = bch_conjugate(&self.jet, &h);
                                self.log.push(Stage::Prf(0), h, &self.jet);
                            }
                        }
                    }
                }
                self.step_target_coords(target, stages, basis)
            }
            None => {
                let rhs = self.jet.part(target);
                if rhs.is_zero() {
                    return Ok(());
                }
                let mut ops: Vec<(usize, GradedOperator)> = Vec::new();
                for &s in stages {
                    if let Some(op) = self.stage_operator(s, target)? {
                        ops.push((s, op));
                    }
                }
                if ops.is_empty() {
                    return Ok(());
                }
                let op_refs: Vec<&GradedOperator> = ops.iter().map(|(_, op)| op).collect();
                let (generators, _residual) = solve_joint(&op_refs, &rhs, self.policy)?;
                for ((s, _), h) in ops.iter().zip(generators) {
                    if h.is_zero() {
                        continue;
                    }
                    self.jet = bch_conjugate(&self.jet, &h);
                    self.log.push(Stage::Prf(*s), h, &self.jet);
                }
                Ok(())
            }
        }
    }

    /// Higher-stage joint solve in the coordinates of the two-generator
    /// basis at the target index.
    fn step_target_coords(
        &mut self,
        target: i64,
        stages: &[usize],
        basis: &GeneratorBasis,
    ) -> Result<(), RenormalizeError> {
        let Some(idx) = basis.index_of_grade(target) else {
            return Ok(());
        };
        if idx < 1 {
            return Ok(());
        }
        let rhs = self.jet.part(target);
        if rhs.is_zero() {
            return Ok(());
        }
        let rhs_c = basis.decompose(&rhs)?;
        // columns: per stage (ascending), per domain element, the image
        // expressed as an (x-coeff, y-coeff) pair at the target index
        let mut columns: Vec<Vec<Rational>> = Vec::new();
        let mut meta: Vec<(usize, HomVF)> = Vec::new();
        for &s in stages {
            if s == 0 {
                continue;
            }
            let p = target - s as i64;
            if p < 1 {
                continue;
            }
            let f_s = self.jet.part(s as i64);
            if f_s.is_zero() {
                continue;
            }
            for d in h_space_for(&self.jet, s, p, Some(basis)) {
                let image = basis.decompose(&bracket(&f_s, &d))?;
                columns.push(vec![image.a, image.b]);
                meta.push((s, d));
            }
        }
        if columns.is_empty() {
            return Ok(());
        }
        let m = QMatrix::from_columns(2, &columns);
        let b = [rhs_c.a, rhs_c.b];
        // euclidean projection of the coordinate vector onto the column
        // span, then a zero-free solve (stage-ascending column priority)
        let n = columns.len();
        let mut normal = QMatrix::zeros(n, n);
        let mut v = vec![Rational::from_integer(0.into()); n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::from_integer(0.into());
                for r in 0..2 {
                    acc += m.get(r, i).clone() * m.get(r, j);
                }
                normal.set(i, j, acc);
            }
            let mut acc = Rational::from_integer(0.into());
            for r in 0..2 {
                acc += m.get(r, i).clone() * &b[r];
            }
            v[i] = acc;
        }
        let x = linalg::solve_free_zero(&normal, &v).expect("normal equations are consistent");
        let projected = m.mul_vec(&x);
        let coords =
            linalg::solve_free_zero(&m, &projected).expect("projected rhs lies in the span");
        // group by stage and apply ascending
        let mut by_stage: Vec<(usize, HomVF)> = Vec::new();
        for (c, (s, d)) in coords.iter().zip(&meta) {
            if c.is_zero() {
                continue;
            }
            match by_stage.iter_mut().find(|(stage, _)| stage == s) {
                Some((_, acc)) => *acc = acc.add(&d.scaled(c)),
                None => by_stage.push((*s, d.scaled(c))),
            }
        }
        by_stage.sort_by_key(|(s, _)| *s);
        for (s, h) in by_stage {
            if h.is_zero() {
                continue;
            }
            self.jet = bch_conjugate(&self.jet, &h);
            self.log.push(Stage::Prf(s), h, &self.jet);
        }
        Ok(())
    }

    fn run(&mut self, scheme: EngineScheme) -> Result<(), RenormalizeError> {
        let order = self.jet.order();
        match scheme {
            EngineScheme::A => {
                for k in 1..=order {
                    let stages: Vec<usize> = (0..k as usize).collect();
                    self.step_target(k, &stages)?;
                }
            }
            EngineScheme::B => {
                for s in 0..order as usize {
                    for k in (s as i64 + 1)..=order {
                        self.step_target(k, &[s])?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Reduce a standard normal form to renormalized form.
///
/// The input must already be in normal form (every part orthogonal to the
/// range of the linear homological operator); classes with a linear normal
/// form are returned unchanged with a note.
pub fn prf_reduce(
    nf: &JetSeries,
    cls: &LinearClass,
    scheme: EngineScheme,
    policy: FreePolicy,
    snapshots: bool,
) -> Result<(ReducedForm, TransformLog), RenormalizeError> {
    let kind = match scheme {
        EngineScheme::A => ReductionKind::PrfA,
        EngineScheme::B => ReductionKind::PrfB,
    };
    match cls {
        LinearClass::Zero => Err(RenormalizeError::UnsupportedClass("ZERO".into())),
        LinearClass::S1 { .. } | LinearClass::N1 { .. } => {
            let mut form = ReducedForm::with_basis(kind, CaseTag::linear(), nf.clone(), None)?;
            form.notes.push(format!(
                "{}: no resonances, normal form is linear",
                cls.tag()
            ));
            Ok((form, TransformLog::new(snapshots)))
        }
        LinearClass::S4Same { .. } => {
            // at most one resonant direction; the stage operators all vanish
            let mut engine = Engine::new(nf, None, policy, snapshots);
            engine.run(scheme)?;
            let jet = engine.jet.clone();
            let mut form = ReducedForm::with_basis(kind, CaseTag::linear(), jet, None)?;
            form.notes
                .push("same-sign eigenvalues: reduced form coincides with the normal form".into());
            Ok((form, engine.log))
        }
        LinearClass::S3 { .. } | LinearClass::S4Opposite { .. } | LinearClass::S2 { .. } => {
            let basis = generator_basis(cls)?;
            let case = case_dispatch(nf, &basis)?;
            let mut engine = Engine::new(nf, Some(&basis), policy, snapshots);
            engine.run(scheme)?;
            let jet = engine.jet.clone();
            let form = ReducedForm::with_basis(kind, case, jet, Some(&basis))?;
            Ok((form, engine.log))
        }
        LinearClass::N2 => {
            let mut engine = Engine::new(nf, None, policy, snapshots);
            engine.run(scheme)?;
            let jet = engine.jet.clone();
            let mut form = ReducedForm::with_basis(kind, CaseTag::linear(), jet, None)?;
            form.notes
                .push("nilpotent linear part: coefficients reported in monomials".into());
            Ok((form, engine.log))
        }
    }
}

/// Imaginary-pair reduction: the generic machinery in the rotation/dilation
/// basis. `lrf` switches to the two-sweep reduction where it applies.
pub fn s2_reduce(
    nf: &JetSeries,
    cls: &LinearClass,
    lrf: bool,
    policy: FreePolicy,
    snapshots: bool,
) -> Result<(ReducedForm, TransformLog), RenormalizeError> {
    if !matches!(cls, LinearClass::S2 { .. }) {
        return Err(RenormalizeError::UnsupportedClass(cls.tag().to_string()));
    }
    if lrf {
        super::lrf_reduce(nf, cls, policy, snapshots)
    } else {
        prf_reduce(nf, cls, EngineScheme::A, policy, snapshots)
    }
}

/// Nilpotent-class reduction through the generic machinery.
pub fn n2_reduce(
    nf: &JetSeries,
    policy: FreePolicy,
    snapshots: bool,
) -> Result<(ReducedForm, TransformLog), RenormalizeError> {
    prf_reduce(nf, &LinearClass::N2, EngineScheme::A, policy, snapshots)
}

/// The renormalized-membership test at one grade of a finished jet: is the
/// grade-`k` part orthogonal to the range of every stage operator
/// `{f_s, ·}` on `H^(s)`, for `s ≤ k`, built from the jet's own parts?
///
/// Orthogonality is Bargmann by default; passing the class basis switches
/// the higher stages to its coordinate product, matching what the
/// reduction engine actually eliminates (the two agree except for the
/// opposite-sign family with p ≠ q).
pub fn fk_membership(
    jet: &JetSeries,
    k: i64,
    basis: Option<&GeneratorBasis>,
) -> Result<bool, RenormalizeError> {
    let part = jet.part(k);
    if part.is_zero() {
        return Ok(true);
    }
    let part_coords = match basis {
        Some(b) if b.index_of_grade(k).is_some() => Some(b.decompose(&part)?),
        _ => None,
    };
    for s in 0..=(k as usize) {
        let p = k - s as i64;
        if p < 1 {
            continue;
        }
        let f_s = jet.part(s as i64);
        if s > 0 && f_s.is_zero() {
            continue;
        }
        let domain = h_space_for(jet, s, p, if s >= 1 { basis } else { None });
        for d in &domain {
            let image = bracket(&f_s, d);
            let hit = match (&part_coords, s) {
                (Some(pc), s) if s >= 1 => {
                    let ic = basis.unwrap().decompose(&image)?;
                    !(ic.a * &pc.a + ic.b * &pc.b).is_zero()
                }
                _ => !bargmann_inner(&image, &part).is_zero(),
            };
            if hit {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
