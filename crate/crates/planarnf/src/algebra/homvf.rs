use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::monomial::{Axis, VecMonomial};
use super::{factorial, Rational};

/// A homogeneous polynomial vector field of one grade, stored sparsely.
///
/// Zero coefficients are never kept; two fields are equal iff their term
/// maps are equal. The grade is carried explicitly so that the zero field
/// of a grade is well defined.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomVF {
    grade: i64,
    terms: BTreeMap<VecMonomial, Rational>,
}

impl HomVF {
    pub fn zero(grade: i64) -> Self {
        assert!(grade >= -1, "grade must be at least -1");
        HomVF {
            grade,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: VecMonomial, coeff: Rational) -> Self {
        let mut f = HomVF::zero(m.grade());
        f.add_term(m, coeff);
        f
    }

    /// Build from terms; every monomial must have the stated grade.
    pub fn from_terms<I>(grade: i64, terms: I) -> Self
    where
        I: IntoIterator<Item = (VecMonomial, Rational)>,
    {
        let mut f = HomVF::zero(grade);
        for (m, c) in terms {
            assert_eq!(
                m.grade(),
                grade,
                "monomial {m} does not match grade {grade}"
            );
            f.add_term(m, c);
        }
        f
    }

    pub fn grade(&self) -> i64 {
        self.grade
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&VecMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &VecMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, m: VecMonomial, c: Rational) {
        debug_assert_eq!(m.grade(), self.grade);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add(&self, other: &HomVF) -> HomVF {
        assert_eq!(self.grade, other.grade, "grade mismatch in add");
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &HomVF) -> HomVF {
        assert_eq!(self.grade, other.grade, "grade mismatch in sub");
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn scaled(&self, s: &Rational) -> HomVF {
        if s.is_zero() {
            return HomVF::zero(self.grade);
        }
        HomVF {
            grade: self.grade,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * s))
                .collect(),
        }
    }

    /// Coefficient vector in the canonical monomial order of this grade.
    pub fn coords(&self) -> Vec<Rational> {
        VecMonomial::basis_of_grade(self.grade)
            .iter()
            .map(|m| self.coeff(m))
            .collect()
    }

    pub fn from_coords(grade: i64, coords: &[Rational]) -> Self {
        let basis = VecMonomial::basis_of_grade(grade);
        assert_eq!(basis.len(), coords.len());
        HomVF::from_terms(grade, basis.into_iter().zip(coords.iter().cloned()))
    }
}

impl fmt::Display for HomVF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "({c}) {m}")?;
            first = false;
        }
        Ok(())
    }
}

/// Lie–Poisson bracket `{f, g} = (f^j ∂_j) g − (g^j ∂_j) f`.
///
/// Bilinear, antisymmetric, and graded: the bracket of grades `k` and `m`
/// lands in grade `k + m`.
pub fn bracket(f: &HomVF, g: &HomVF) -> HomVF {
    let mut out = HomVF::zero(f.grade() + g.grade());
    let mut directional = |a: &HomVF, b: &HomVF, sign: i64| {
        // sign * (a^j ∂_j) b
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let c = ca.clone() * cb * Rational::from_integer(sign.into());
                match ma.component {
                    Axis::X if mb.exp_x > 0 => out.add_term(
                        VecMonomial::new(
                            ma.exp_x + mb.exp_x - 1,
                            ma.exp_y + mb.exp_y,
                            mb.component,
                        ),
                        c * Rational::from_integer(mb.exp_x.into()),
                    ),
                    Axis::Y if mb.exp_y > 0 => out.add_term(
                        VecMonomial::new(
                            ma.exp_x + mb.exp_x,
                            ma.exp_y + mb.exp_y - 1,
                            mb.component,
                        ),
                        c * Rational::from_integer(mb.exp_y.into()),
                    ),
                    _ => {}
                }
            }
        }
    };
    directional(f, g, 1);
    directional(g, f, -1);
    out
}

/// Bargmann scalar product. Distinct monomials are orthogonal;
/// `⟨x^{m1} y^{m2} e_α, x^{m1} y^{m2} e_α⟩ = m1!·m2!`.
///
/// Fields of different grades are orthogonal by definition.
pub fn bargmann_inner(f: &HomVF, g: &HomVF) -> Rational {
    if f.grade() != g.grade() {
        return Rational::zero();
    }
    let mut acc = Rational::zero();
    for (m, cf) in f.terms() {
        let cg = g.coeff(m);
        if !cg.is_zero() {
            let weight = factorial(m.exp_x) * factorial(m.exp_y);
            acc += cf.clone() * cg * Rational::from_integer(weight);
        }
    }
    acc
}

/// `s`-fold iterated bracket `[h, [h, … [h, w]]]`; `s = 0` returns `w`.
pub fn ad_iter(h: &HomVF, w: &HomVF, s: u32) -> HomVF {
    let mut acc = w.clone();
    for _ in 0..s {
        acc = bracket(h, &acc);
    }
    acc
}
