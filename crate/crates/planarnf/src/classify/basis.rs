use num_traits::{One, Zero};

use crate::algebra::{binomial, Axis, HomVF, JetSeries, Rational, VecMonomial};
use crate::linalg::{self, QMatrix};

use super::{ClassifyError, LinearClass};

/// Which concrete two-generator family backs a class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// `X_k = u^{k+1}∂u`, `Y_k = u^k v ∂v`, with `u` the zero-eigenvalue axis.
    S3 { zero_axis: Axis },
    /// `X_k, Y_k` built from `(x^p y^q)^k x∂x` and `(x^p y^q)^k y∂y`.
    S4 { p: u32, q: u32 },
    /// Dilation/rotation family `Ψ_k = r^{2k} D`, `Φ_k = r^{2k} R`.
    S2,
}

/// Exact decomposition of a resonant field: `a` scales the X-like
/// generator, `b` the Y-like one.
#[derive(Clone, Debug, PartialEq)]
pub struct XYCoeffs {
    pub a: Rational,
    pub b: Rational,
}

/// Grade-indexed constructors for the two-generator algebra of a class,
/// together with its structure data.
///
/// Bracket relations, with `σ` the structure scale:
/// `[X_k, X_m] = σ(m−k) X_{k+m}`, `[X_k, Y_m] = σ m Y_{k+m}`,
/// `[Y_k, Y_m] = 0`. The linear part of the class is `ζ · Y_0`.
#[derive(Clone, Debug)]
pub struct GeneratorBasis {
    kind: BasisKind,
    zeta: Rational,
    sigma: Rational,
    step: i64,
}

impl GeneratorBasis {
    pub fn for_class(cls: &LinearClass) -> Result<GeneratorBasis, ClassifyError> {
        match cls {
            LinearClass::S3 { mu, zero_axis } => Ok(GeneratorBasis {
                kind: BasisKind::S3 {
                    zero_axis: *zero_axis,
                },
                zeta: mu.clone(),
                sigma: Rational::one(),
                step: 1,
            }),
            LinearClass::S4Opposite { c, p, q } => Ok(GeneratorBasis {
                kind: BasisKind::S4 { p: *p, q: *q },
                zeta: Rational::from_integer((2 * p * q).into()) * c,
                sigma: Rational::one(),
                step: (*p + *q) as i64,
            }),
            LinearClass::S2 { rot } => Ok(GeneratorBasis {
                kind: BasisKind::S2,
                zeta: rot.clone(),
                sigma: Rational::from_integer(2.into()),
                step: 2,
            }),
            other => Err(ClassifyError::NoGeneratorBasis(other.tag().to_string())),
        }
    }

    pub fn kind(&self) -> &BasisKind {
        &self.kind
    }

    /// Scale of the linear part in this basis: `W_0 = ζ · y_gen(0)`.
    pub fn zeta(&self) -> &Rational {
        &self.zeta
    }

    /// Structure-constant scale σ.
    pub fn sigma(&self) -> &Rational {
        &self.sigma
    }

    /// Grade of the index-`k` generators.
    pub fn grade_of_index(&self, k: i64) -> i64 {
        k * self.step
    }

    /// Inverse of `grade_of_index`; `None` off the index lattice.
    pub fn index_of_grade(&self, grade: i64) -> Option<i64> {
        (grade % self.step == 0).then_some(grade / self.step)
    }

    /// Largest index representable within a truncation order.
    pub fn max_index(&self, order: i64) -> i64 {
        order / self.step
    }

    pub fn labels(&self) -> (&'static str, &'static str) {
        match self.kind {
            BasisKind::S2 => ("Psi", "Phi"),
            _ => ("X", "Y"),
        }
    }

    /// The X-like generator of index `k` (grade `k·step`).
    pub fn x_gen(&self, k: i64) -> HomVF {
        let k = u32::try_from(k).expect("negative generator index");
        match &self.kind {
            BasisKind::S3 { zero_axis } => power_monomial(
                *zero_axis,
                k + 1,
                zero_axis.other(),
                0,
                *zero_axis,
                Rational::one(),
            ),
            BasisKind::S4 { p, q } => {
                // (1/2pq)(q Φ_k + p Ψ_k)
                let phi = s4_phi(*p, *q, k);
                let psi = s4_psi(*p, *q, k);
                let scale = Rational::new(1.into(), (2 * p * q).into());
                phi.scaled(&(Rational::from_integer((*q).into()) * &scale))
                    .add(&psi.scaled(&(Rational::from_integer((*p).into()) * &scale)))
            }
            BasisKind::S2 => dilation_field(k),
        }
    }

    /// The Y-like generator of index `k`.
    pub fn y_gen(&self, k: i64) -> HomVF {
        let k = u32::try_from(k).expect("negative generator index");
        match &self.kind {
            BasisKind::S3 { zero_axis } => power_monomial(
                *zero_axis,
                k,
                zero_axis.other(),
                1,
                zero_axis.other(),
                Rational::one(),
            ),
            BasisKind::S4 { p, q } => {
                let phi = s4_phi(*p, *q, k);
                let psi = s4_psi(*p, *q, k);
                let scale = Rational::new(1.into(), (2 * p * q).into());
                phi.scaled(&(Rational::from_integer((*q).into()) * &scale))
                    .sub(&psi.scaled(&(Rational::from_integer((*p).into()) * &scale)))
            }
            BasisKind::S2 => rotation_field(k),
        }
    }

    /// Ordered domain basis for homological solves at one index:
    /// Y-like first, so that zero-free solves prefer Y components, matching
    /// the reduction conventions of the X/Y calculus.
    pub fn domain_at_index(&self, k: i64) -> Vec<HomVF> {
        vec![self.y_gen(k), self.x_gen(k)]
    }

    /// Express a homogeneous field exactly in this basis at its grade.
    pub fn decompose(&self, f: &HomVF) -> Result<XYCoeffs, ClassifyError> {
        let grade = f.grade();
        if grade == 0 {
            // linear part: ζ-multiples of y_gen(0) plus possible x_gen(0)
            return self.decompose_at_index(f, 0);
        }
        match self.index_of_grade(grade) {
            Some(k) if k >= 1 => self.decompose_at_index(f, k),
            _ => {
                if f.is_zero() {
                    Ok(XYCoeffs {
                        a: Rational::zero(),
                        b: Rational::zero(),
                    })
                } else {
                    Err(ClassifyError::DecompositionError)
                }
            }
        }
    }

    fn decompose_at_index(&self, f: &HomVF, k: i64) -> Result<XYCoeffs, ClassifyError> {
        let xg = self.x_gen(k);
        let yg = self.y_gen(k);
        let rows = VecMonomial::basis_of_grade(f.grade()).len();
        let m = QMatrix::from_columns(rows, &[xg.coords(), yg.coords()]);
        let sol =
            linalg::solve_free_zero(&m, &f.coords()).ok_or(ClassifyError::DecompositionError)?;
        Ok(XYCoeffs {
            a: sol[0].clone(),
            b: sol[1].clone(),
        })
    }

    /// Decompose every part of a jet; index 0 carries the linear part.
    pub fn decompose_jet(&self, jet: &JetSeries) -> Result<Vec<(i64, XYCoeffs)>, ClassifyError> {
        let mut out = Vec::new();
        for g in jet.grades() {
            let f = jet.part(g);
            if f.is_zero() {
                continue;
            }
            let k = self
                .index_of_grade(g)
                .ok_or(ClassifyError::DecompositionError)?;
            out.push((k, self.decompose_at_index(&f, k)?));
        }
        Ok(out)
    }

    /// Build a jet from index-space coefficients (index 0 scales `y_gen(0)`
    /// by ζ automatically when `include_linear` is set).
    pub fn jet_from_coeffs(
        &self,
        order: i64,
        coeffs: &[(i64, Rational, Rational)],
        include_linear: bool,
    ) -> JetSeries {
        let mut jet = JetSeries::new(order);
        if include_linear {
            jet.add_field(&self.y_gen(0).scaled(&self.zeta));
        }
        for (k, a, b) in coeffs {
            if !a.is_zero() {
                jet.add_field(&self.x_gen(*k).scaled(a));
            }
            if !b.is_zero() {
                jet.add_field(&self.y_gen(*k).scaled(b));
            }
        }
        jet
    }
}

pub(super) fn power_monomial(
    base: Axis,
    base_exp: u32,
    other: Axis,
    other_exp: u32,
    component: Axis,
    coeff: Rational,
) -> HomVF {
    let (ex, ey) = match base {
        Axis::X => (base_exp, other_exp),
        Axis::Y => (other_exp, base_exp),
    };
    debug_assert_eq!(other, base.other());
    HomVF::monomial(VecMonomial::new(ex, ey, component), coeff)
}

fn s4_phi(p: u32, q: u32, k: u32) -> HomVF {
    HomVF::monomial(VecMonomial::new(k * p + 1, k * q, Axis::X), Rational::one())
}

fn s4_psi(p: u32, q: u32, k: u32) -> HomVF {
    HomVF::monomial(VecMonomial::new(k * p, k * q + 1, Axis::Y), Rational::one())
}

/// `r^{2k} (x ∂x + y ∂y)`, grade 2k.
pub(super) fn dilation_field(k: u32) -> HomVF {
    let mut f = HomVF::zero(2 * k as i64);
    for j in 0..=k {
        let c = Rational::from_integer(binomial(k, j));
        f.add_term(VecMonomial::new(2 * j + 1, 2 * (k - j), Axis::X), c.clone());
        f.add_term(VecMonomial::new(2 * j, 2 * (k - j) + 1, Axis::Y), c);
    }
    f
}

/// `r^{2k} (−y ∂x + x ∂y)`, grade 2k.
pub(super) fn rotation_field(k: u32) -> HomVF {
    let mut f = HomVF::zero(2 * k as i64);
    for j in 0..=k {
        let c = Rational::from_integer(binomial(k, j));
        f.add_term(
            VecMonomial::new(2 * j, 2 * (k - j) + 1, Axis::X),
            -c.clone(),
        );
        f.add_term(VecMonomial::new(2 * j + 1, 2 * (k - j), Axis::Y), c);
    }
    f
}
