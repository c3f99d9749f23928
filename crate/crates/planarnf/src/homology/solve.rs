use num_traits::Zero;

use crate::algebra::{bargmann_inner, HomVF, Rational, VecMonomial};
use crate::linalg::{self, QMatrix};

use super::operator::{project_onto_columns, GradedOperator, HomologyError};

/// How to fix the kernel component of an underdetermined homological solve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreePolicy {
    /// Free (non-pivot) domain coordinates are set to zero; the domain
    /// basis order therefore encodes the convention.
    ZeroFree,
    /// The solution Bargmann-orthogonal to the operator kernel.
    MinNorm,
}

#[derive(Clone, Debug)]
pub struct HomologicalSolution {
    /// Generator coordinates over the operator's domain basis.
    pub coords: Vec<Rational>,
    /// The generator itself.
    pub generator: HomVF,
    /// The range component of the right-hand side that the generator removes.
    pub projected: HomVF,
    /// `rhs − projected`; Bargmann-orthogonal to the range.
    pub residual: HomVF,
}

/// Solve `op(h) = P(rhs)` where `P` is Bargmann-orthogonal projection onto
/// the range. The projected equation is always solvable; the kernel
/// freedom is resolved by `policy`.
pub fn solve_homological(
    op: &GradedOperator,
    rhs: &HomVF,
    policy: FreePolicy,
) -> Result<HomologicalSolution, HomologyError> {
    let projected = op.project_onto_range(rhs)?;
    let mut coords = linalg::solve_free_zero(op.matrix(), &projected.coords())
        .expect("projected rhs lies in the range by construction");
    if policy == FreePolicy::MinNorm {
        coords = min_norm_adjust(coords, &op.kernel_coords(), op.domain_basis());
    }
    let generator = op.domain_element(&coords);
    let residual = rhs.sub(&projected);
    Ok(HomologicalSolution {
        coords,
        generator,
        projected,
        residual,
    })
}

/// Joint solve over several operators sharing one target grade: finds
/// generators `h_i` with `Σ op_i(h_i) = P(rhs)`, `P` the projection onto
/// the sum of the ranges.
///
/// Columns are concatenated in operator order, so earlier operators take
/// pivot priority where ranges overlap; later operators only pick up what
/// earlier ones cannot reach. Returns one generator per operator.
pub fn solve_joint(
    ops: &[&GradedOperator],
    rhs: &HomVF,
    policy: FreePolicy,
) -> Result<(Vec<HomVF>, HomVF), HomologyError> {
    if ops.is_empty() {
        return Ok((Vec::new(), rhs.clone()));
    }
    let target = ops[0].target_grade();
    for op in ops {
        if op.target_grade() != target {
            return Err(HomologyError::TargetGradeMismatch {
                requested: target,
                actual: op.target_grade(),
            });
        }
    }
    if rhs.grade() != target {
        return Err(HomologyError::RhsGradeMismatch {
            expected: target,
            actual: rhs.grade(),
        });
    }
    let codomain = VecMonomial::basis_of_grade(target);
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for op in ops {
        for j in 0..op.matrix().cols() {
            columns.push(op.matrix().column(j));
        }
    }
    let big = QMatrix::from_columns(codomain.len(), &columns);
    let projected = project_onto_columns(&big, &codomain, rhs);
    let mut coords = linalg::solve_free_zero(&big, &projected.coords())
        .expect("projected rhs lies in the combined range");
    if policy == FreePolicy::MinNorm {
        let mut all_domain: Vec<HomVF> = Vec::new();
        for op in ops {
            all_domain.extend(op.domain_basis().iter().cloned());
        }
        coords = min_norm_adjust(coords, &linalg::kernel(&big), &all_domain);
    }
    let mut generators = Vec::with_capacity(ops.len());
    let mut offset = 0usize;
    for op in ops {
        let n = op.domain_dim();
        generators.push(op.domain_element(&coords[offset..offset + n]));
        offset += n;
    }
    let residual = rhs.sub(&projected);
    Ok((generators, residual))
}

/// Subtract the kernel projection so the solution is Bargmann-orthogonal
/// to the kernel. Domain elements of different grades are orthogonal, so
/// the Gram matrix over a mixed-grade domain is still exact and block
/// structured.
fn min_norm_adjust(
    coords: Vec<Rational>,
    kernel: &[Vec<Rational>],
    domain: &[HomVF],
) -> Vec<Rational> {
    if kernel.is_empty() {
        return coords;
    }
    let n = domain.len();
    let mut gram = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram.set(i, j, bargmann_inner(&domain[i], &domain[j]));
        }
    }
    let k = kernel.len();
    // Solve (Kᵀ G K) t = Kᵀ G x, then x := x − K t
    let mut ktgk = QMatrix::zeros(k, k);
    let mut ktgx = vec![Rational::zero(); k];
    let gx = gram.mul_vec(&coords);
    for a in 0..k {
        let gka = gram.mul_vec(&kernel[a]);
        for b in 0..k {
            let mut acc = Rational::zero();
            for i in 0..n {
                acc += kernel[b][i].clone() * &gka[i];
            }
            ktgk.set(a, b, acc);
        }
        let mut acc = Rational::zero();
        for i in 0..n {
            acc += kernel[a][i].clone() * &gx[i];
        }
        ktgx[a] = acc;
    }
    let t = linalg::solve_free_zero(&ktgk, &ktgx).expect("kernel Gram is invertible");
    let mut out = coords;
    for (a, ta) in t.iter().enumerate() {
        if ta.is_zero() {
            continue;
        }
        for i in 0..out.len() {
            out[i] = out[i].clone() - ta.clone() * &kernel[a][i];
        }
    }
    out
}
