//! Exact rational matrices with fraction-free (Bareiss) elimination.
//!
//! Forward elimination runs over integers after clearing row denominators,
//! which keeps intermediate entries from blowing up; back substitution is
//! rational. Pivots are chosen left to right, so underdetermined solves with
//! `solve_free_zero` assign zero to every non-pivot column — callers encode
//! their free-choice convention in the column order.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = QMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = QMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    if !self.get(i, k).is_zero() && !other.get(k, j).is_zero() {
                        acc += self.get(i, k).clone() * other.get(k, j);
                    }
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    if !self.get(i, j).is_zero() && !v[j].is_zero() {
                        acc += self.get(i, j).clone() * &v[j];
                    }
                }
                acc
            })
            .collect()
    }
}

/// Row echelon data from fraction-free forward elimination of an augmented
/// system.
struct Echelon {
    /// Integer matrix after Bareiss elimination, rows*width, row-major.
    m: Vec<BigInt>,
    width: usize,
    /// Pivot column per eliminated row, ascending.
    pivots: Vec<usize>,
}

impl Echelon {
    fn at(&self, i: usize, j: usize) -> &BigInt {
        &self.m[i * self.width + j]
    }

    /// Back-substitute the triangularized system for the pivot variables,
    /// given fixed values for all non-pivot variables. `ncols` counts the
    /// coefficient columns; `rhs_col` names the augmented right-hand-side
    /// column, if the system has one.
    fn back_substitute(
        &self,
        ncols: usize,
        free_values: &[Rational],
        rhs_col: Option<usize>,
    ) -> Vec<Rational> {
        let mut x = free_values.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate().rev() {
            let mut acc = match rhs_col {
                Some(c) => Rational::from_integer(self.at(r, c).clone()),
                None => Rational::zero(),
            };
            for j in (pc + 1)..ncols {
                if !x[j].is_zero() && !self.at(r, j).is_zero() {
                    acc -= Rational::from_integer(self.at(r, j).clone()) * &x[j];
                }
            }
            x[pc] = acc / Rational::from_integer(self.at(r, pc).clone());
        }
        x
    }
}

/// Clear denominators row-wise and run Bareiss fraction-free forward
/// elimination on the first `ncols` columns (any extra columns ride along
/// as augmentation). Only rows below the pivot are updated, which keeps the
/// exact-division property of one-step Bareiss.
fn bareiss(rows: &[Vec<Rational>], ncols: usize) -> Echelon {
    let width = if rows.is_empty() {
        ncols
    } else {
        rows[0].len()
    };
    let mut m: Vec<BigInt> = Vec::with_capacity(rows.len() * width);
    for row in rows {
        assert_eq!(row.len(), width);
        let mut lcm = BigInt::one();
        for v in row {
            if !v.is_zero() {
                let d = v.denom();
                let g = gcd_big(&lcm, d);
                lcm = &lcm / g * d;
            }
        }
        for v in row {
            m.push(v.numer() * (&lcm / v.denom()));
        }
    }
    let nrows = rows.len();
    let at = |m: &Vec<BigInt>, i: usize, j: usize| m[i * width + j].clone();
    let mut pivots = Vec::new();
    let mut prev = BigInt::one();
    let mut r = 0usize;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        // partial pivot: smallest nonzero magnitude keeps numbers small
        let mut best: Option<(usize, BigInt)> = None;
        for i in r..nrows {
            let v = at(&m, i, c);
            if !v.is_zero() {
                let mag = v.magnitude().clone();
                match &best {
                    Some((_, b)) if b.magnitude() <= &mag => {}
                    _ => best = Some((i, v)),
                }
            }
        }
        let Some((pr, _)) = best else { continue };
        if pr != r {
            for j in 0..width {
                m.swap(r * width + j, pr * width + j);
            }
        }
        let pivot = at(&m, r, c);
        for i in (r + 1)..nrows {
            let factor = at(&m, i, c);
            for j in 0..width {
                let v = &m[i * width + j] * &pivot - &factor * &m[r * width + j];
                debug_assert!(
                    (&v % &prev).is_zero(),
                    "fraction-free elimination produced a non-exact division"
                );
                m[i * width + j] = v / &prev;
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }
    Echelon { m, width, pivots }
}

fn gcd_big(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    if a.is_zero() {
        BigInt::one()
    } else {
        a
    }
}

pub fn rank(m: &QMatrix) -> usize {
    let rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect();
    bareiss(&rows, m.cols()).pivots.len()
}

/// Basis of the null space `{x : M x = 0}`. Non-pivot (free) columns each
/// yield one basis vector with that coordinate set to 1.
pub fn kernel(m: &QMatrix) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let ech = bareiss(&rows, m.cols());
    let piv = &ech.pivots;
    let free: Vec<usize> = (0..m.cols()).filter(|c| !piv.contains(c)).collect();
    let mut out = Vec::new();
    for &fc in &free {
        let mut seed = vec![Rational::zero(); m.cols()];
        seed[fc] = Rational::one();
        out.push(ech.back_substitute(m.cols(), &seed, None));
    }
    out
}

/// Solve `M x = b` exactly; free variables are set to zero. Returns `None`
/// when the system is inconsistent.
pub fn solve_free_zero(m: &QMatrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(b.len(), m.rows());
    let rows: Vec<Vec<Rational>> = (0..m.rows())
        .map(|i| {
            let mut row: Vec<Rational> = (0..m.cols()).map(|j| m.get(i, j).clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let ech = bareiss(&rows, m.cols());
    // consistency: rows beyond the pivot count must have zero augmentation
    for i in ech.pivots.len()..m.rows() {
        if !ech.m[i * ech.width + m.cols()].is_zero() {
            return None;
        }
    }
    let seed = vec![Rational::zero(); m.cols()];
    Some(ech.back_substitute(m.cols(), &seed, Some(m.cols())))
}
