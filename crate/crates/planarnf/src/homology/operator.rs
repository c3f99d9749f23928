use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{bracket, factorial, HomVF, Rational, VecMonomial};
use crate::linalg::{self, QMatrix};

#[derive(Debug, Error)]
pub enum HomologyError {
    #[error("domain basis elements must share one grade")]
    MixedDomainGrades,
    #[error("domain basis is linearly dependent")]
    DependentDomain,
    #[error("bracket images land in grade {actual}, not the requested target grade {requested}")]
    TargetGradeMismatch { requested: i64, actual: i64 },
    #[error("right-hand side has grade {actual}, expected the operator target {expected}")]
    RhsGradeMismatch { expected: i64, actual: i64 },
    #[error("chain stage {requested} exceeds the stabilized prefix {stable}")]
    StaleChain { requested: usize, stable: usize },
}

/// The restriction of a bracket operator `{f, ·}` to a chosen subspace of a
/// graded slice, materialized as an exact matrix.
///
/// Columns are the images of `domain_basis` elements, expanded in the
/// canonical monomial basis of the target grade.
#[derive(Clone, Debug)]
pub struct GradedOperator {
    generator_field: HomVF,
    source_grade: i64,
    target_grade: i64,
    domain_basis: Vec<HomVF>,
    codomain: Vec<VecMonomial>,
    matrix: QMatrix,
}

/// Materialize `{generator_field, ·}` on `domain`, mapping into
/// `target_grade`. The domain must be linearly independent.
pub fn operator_matrix(
    generator_field: &HomVF,
    domain: &[HomVF],
    target_grade: i64,
) -> Result<GradedOperator, HomologyError> {
    let source_grade = match domain.first() {
        Some(f) => f.grade(),
        None => target_grade - generator_field.grade(),
    };
    if domain.iter().any(|f| f.grade() != source_grade) {
        return Err(HomologyError::MixedDomainGrades);
    }
    let actual = generator_field.grade() + source_grade;
    if actual != target_grade {
        return Err(HomologyError::TargetGradeMismatch {
            requested: target_grade,
            actual,
        });
    }
    if !domain.is_empty() {
        let dom_rows = VecMonomial::basis_of_grade(source_grade).len();
        let expansion = QMatrix::from_columns(
            dom_rows,
            &domain.iter().map(HomVF::coords).collect::<Vec<_>>(),
        );
        if linalg::rank(&expansion) != domain.len() {
            return Err(HomologyError::DependentDomain);
        }
    }
    let codomain = VecMonomial::basis_of_grade(target_grade);
    let columns: Vec<Vec<Rational>> = domain
        .iter()
        .map(|d| bracket(generator_field, d).coords())
        .collect();
    let matrix = QMatrix::from_columns(codomain.len(), &columns);
    Ok(GradedOperator {
        generator_field: generator_field.clone(),
        source_grade,
        target_grade,
        domain_basis: domain.to_vec(),
        codomain,
        matrix,
    })
}

impl GradedOperator {
    pub fn generator_field(&self) -> &HomVF {
        &self.generator_field
    }

    pub fn source_grade(&self) -> i64 {
        self.source_grade
    }

    pub fn target_grade(&self) -> i64 {
        self.target_grade
    }

    pub fn domain_basis(&self) -> &[HomVF] {
        &self.domain_basis
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_basis.len()
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.matrix)
    }

    /// Apply to a domain-coefficient vector, returning the image field.
    pub fn apply_coords(&self, coords: &[Rational]) -> HomVF {
        let img = self.matrix.mul_vec(coords);
        HomVF::from_coords(self.target_grade, &img)
    }

    /// Combine domain coefficients into a domain element.
    pub fn domain_element(&self, coords: &[Rational]) -> HomVF {
        let mut out = HomVF::zero(self.source_grade);
        for (c, d) in coords.iter().zip(&self.domain_basis) {
            if !c.is_zero() {
                out = out.add(&d.scaled(c));
            }
        }
        out
    }

    /// Exact basis of the null space, expressed as domain elements.
    pub fn kernel_basis(&self) -> Vec<HomVF> {
        linalg::kernel(&self.matrix)
            .iter()
            .map(|v| self.domain_element(v))
            .collect()
    }

    /// Kernel as coordinate vectors over the domain basis.
    pub fn kernel_coords(&self) -> Vec<Vec<Rational>> {
        linalg::kernel(&self.matrix)
    }

    /// The Bargmann adjoint: the operator `M⁺` from the target slice back
    /// into the span of the domain, satisfying `⟨M f, g⟩ = ⟨f, M⁺ g⟩`.
    ///
    /// `M⁺ = G_dom⁻¹ Mᵀ G_cod` with `G_cod` the diagonal Gram matrix of the
    /// Bargmann product on target monomials and `G_dom` the (dense) Gram
    /// matrix of the domain basis. The result is expanded in the monomial
    /// basis of the source grade; `generator_field` is carried over from the
    /// primal operator unchanged.
    pub fn adjoint_matrix(&self) -> GradedOperator {
        let n = self.domain_dim();
        let target_basis = VecMonomial::basis_of_grade(self.target_grade);
        // G_dom over the domain basis
        let mut gdom = QMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                gdom.set(
                    i,
                    j,
                    crate::algebra::bargmann_inner(&self.domain_basis[i], &self.domain_basis[j]),
                );
            }
        }
        // Mt G_cod
        let mut mtg = QMatrix::zeros(n, target_basis.len());
        for i in 0..n {
            for (j, m) in target_basis.iter().enumerate() {
                let w = Rational::from_integer(factorial(m.exp_x) * factorial(m.exp_y));
                mtg.set(i, j, self.matrix.get(j, i).clone() * w);
            }
        }
        // columns of the adjoint in domain coordinates: solve G_dom X = Mt G_cod
        let mut adj_coords = QMatrix::zeros(n, target_basis.len());
        for j in 0..target_basis.len() {
            let b = mtg.column(j);
            let x = linalg::solve_free_zero(&gdom, &b)
                .expect("Gram matrix of an independent basis is invertible");
            for i in 0..n {
                adj_coords.set(i, j, x[i].clone());
            }
        }
        // expand to source-monomial rows
        let src_basis = VecMonomial::basis_of_grade(self.source_grade);
        let mut matrix = QMatrix::zeros(src_basis.len(), target_basis.len());
        for j in 0..target_basis.len() {
            let elt = self.domain_element(&adj_coords.column(j));
            for (i, m) in src_basis.iter().enumerate() {
                matrix.set(i, j, elt.coeff(m));
            }
        }
        GradedOperator {
            generator_field: self.generator_field.clone(),
            source_grade: self.target_grade,
            target_grade: self.source_grade,
            domain_basis: target_basis
                .iter()
                .map(|m| HomVF::monomial(*m, Rational::from_integer(1.into())))
                .collect(),
            codomain: src_basis,
            matrix,
        }
    }

    /// Bargmann-orthogonal projection of `rhs` onto the range.
    pub fn project_onto_range(&self, rhs: &HomVF) -> Result<HomVF, HomologyError> {
        if rhs.grade() != self.target_grade {
            return Err(HomologyError::RhsGradeMismatch {
                expected: self.target_grade,
                actual: rhs.grade(),
            });
        }
        Ok(project_onto_columns(&self.matrix, &self.codomain, rhs))
    }

    /// Does `rhs` have zero Bargmann product against every column image?
    pub fn orthogonal_to_range(&self, rhs: &HomVF) -> bool {
        (0..self.matrix.cols()).all(|j| {
            let col = HomVF::from_coords(self.target_grade, &self.matrix.column(j));
            crate::algebra::bargmann_inner(&col, rhs).is_zero()
        })
    }
}

/// Orthogonal projection of `rhs` onto the column span of `m` under the
/// Bargmann product, via the normal equations `(Cᵀ G C) x = Cᵀ G rhs`.
pub(crate) fn project_onto_columns(m: &QMatrix, codomain: &[VecMonomial], rhs: &HomVF) -> HomVF {
    let n = m.cols();
    let grade = rhs.grade();
    if n == 0 {
        return HomVF::zero(grade);
    }
    let weights: Vec<Rational> = codomain
        .iter()
        .map(|mon| Rational::from_integer(factorial(mon.exp_x) * factorial(mon.exp_y)))
        .collect();
    let rhs_coords: Vec<Rational> = codomain.iter().map(|mon| rhs.coeff(mon)).collect();
    let mut normal = QMatrix::zeros(n, n);
    let mut v = vec![Rational::zero(); n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = Rational::zero();
            for (r, w) in weights.iter().enumerate() {
                if !m.get(r, i).is_zero() && !m.get(r, j).is_zero() {
                    acc += m.get(r, i).clone() * w * m.get(r, j);
                }
            }
            normal.set(i, j, acc);
        }
        let mut acc = Rational::zero();
        for (r, w) in weights.iter().enumerate() {
            if !m.get(r, i).is_zero() && !rhs_coords[r].is_zero() {
                acc += m.get(r, i).clone() * w * &rhs_coords[r];
            }
        }
        v[i] = acc;
    }
    let x = linalg::solve_free_zero(&normal, &v).expect("normal equations are always consistent");
    let img = m.mul_vec(&x);
    let mut out = HomVF::zero(grade);
    for (mon, c) in codomain.iter().zip(img) {
        out.add_term(*mon, c);
    }
    out
}
