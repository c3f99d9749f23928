use std::collections::BTreeMap;
use std::fmt;

use super::homvf::{bracket, HomVF};
use super::monomial::{Axis, VecMonomial};
use super::Rational;

/// A graded, truncated vector field `Σ W_k`, grades `0..=order`.
///
/// Grade 0 is the linear part. Parts are stored sparsely; a missing grade
/// is the zero field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JetSeries {
    order: i64,
    parts: BTreeMap<i64, HomVF>,
}

impl JetSeries {
    pub fn new(order: i64) -> Self {
        assert!(order >= 1, "truncation order must be at least 1");
        JetSeries {
            order,
            parts: BTreeMap::new(),
        }
    }

    pub fn from_fields<I>(order: i64, fields: I) -> Self
    where
        I: IntoIterator<Item = HomVF>,
    {
        let mut jet = JetSeries::new(order);
        for f in fields {
            jet.add_field(&f);
        }
        jet
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn part(&self, grade: i64) -> HomVF {
        self.parts
            .get(&grade)
            .cloned()
            .unwrap_or_else(|| HomVF::zero(grade))
    }

    pub fn part_ref(&self, grade: i64) -> Option<&HomVF> {
        self.parts.get(&grade)
    }

    pub fn set_part(&mut self, f: HomVF) {
        assert!(
            (0..=self.order).contains(&f.grade()),
            "grade {} outside 0..={}",
            f.grade(),
            self.order
        );
        if f.is_zero() {
            self.parts.remove(&f.grade());
        } else {
            self.parts.insert(f.grade(), f);
        }
    }

    /// Add a homogeneous field into the matching grade; silently drops
    /// grades beyond the truncation.
    pub fn add_field(&mut self, f: &HomVF) {
        if f.grade() > self.order || f.is_zero() {
            return;
        }
        let cur = self.part(f.grade());
        self.set_part(cur.add(f));
    }

    pub fn grades(&self) -> impl Iterator<Item = i64> + '_ {
        self.parts.keys().copied()
    }

    pub fn is_linear(&self) -> bool {
        self.parts.keys().all(|k| *k == 0)
    }

    pub fn truncated(&self, order: i64) -> JetSeries {
        let mut jet = JetSeries::new(order);
        for (g, f) in &self.parts {
            if *g <= order {
                jet.set_part(f.clone());
            }
        }
        jet
    }

    /// The 2×2 matrix `A` of the linear part, rows indexed by component,
    /// columns by variable.
    pub fn linear_matrix(&self) -> [[Rational; 2]; 2] {
        let f0 = self.part(0);
        let entry = |comp: Axis, ex: u32, ey: u32| f0.coeff(&VecMonomial::new(ex, ey, comp));
        [
            [entry(Axis::X, 1, 0), entry(Axis::X, 0, 1)],
            [entry(Axis::Y, 1, 0), entry(Axis::Y, 0, 1)],
        ]
    }

    /// Nonlinear support as `(grade, monomial)` pairs, for shape checks.
    pub fn support(&self) -> Vec<(i64, VecMonomial)> {
        let mut out = Vec::new();
        for (g, f) in &self.parts {
            for (m, _) in f.terms() {
                out.push((*g, *m));
            }
        }
        out
    }
}

impl fmt::Display for JetSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, part) in &self.parts {
            if !first {
                writeln!(f)?;
            }
            write!(f, "W_{g} = {part}")?;
            first = false;
        }
        Ok(())
    }
}

/// Conjugate a jet by the time-one flow of the generator `h`:
/// `w ↦ Σ_s (1/s!) [h, [h, … [h, w]]]`, truncated at the jet's order.
///
/// The generator must have grade at least 1; parts of grade below
/// `h.grade()` are returned bit-identical (near-identity property).
pub fn bch_conjugate(w: &JetSeries, h: &HomVF) -> JetSeries {
    assert!(h.grade() >= 1, "generator grade must be at least 1");
    let order = w.order();
    let mut out = w.clone();
    if h.is_zero() {
        return out;
    }
    let mut layer: Vec<HomVF> = w
        .grades()
        .map(|g| w.part(g))
        .filter(|f| !f.is_zero())
        .collect();
    let mut s_factorial = Rational::from_integer(1.into());
    let mut s: u64 = 0;
    while !layer.is_empty() {
        s += 1;
        s_factorial *= Rational::from_integer(s.into());
        layer = layer
            .iter()
            .map(|f| bracket(h, f))
            .filter(|f| !f.is_zero() && f.grade() <= order)
            .collect();
        let inv = Rational::from_integer(1.into()) / s_factorial.clone();
        for f in &layer {
            out.add_field(&f.scaled(&inv));
        }
    }
    out
}
