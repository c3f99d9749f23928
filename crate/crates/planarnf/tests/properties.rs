//! Property tests for the algebra and homology layers: exact structural
//! identities on randomized inputs.

use num_traits::Zero;
use proptest::prelude::*;

use planarnf::algebra::{
    ad_iter, bargmann_inner, bch_conjugate, bracket, rat, Axis, HomVF, JetSeries, Rational,
    VecMonomial,
};
use planarnf::coordmap::{eval_jet, BigFloat, FlowDirection, FlowMap};
use planarnf::homology::{operator_matrix, solve_homological, FreePolicy};

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn homvf_strategy(grade: i64) -> impl Strategy<Value = HomVF> {
    let basis = VecMonomial::basis_of_grade(grade);
    proptest::collection::vec(rational_strategy(), basis.len())
        .prop_map(move |coeffs| HomVF::from_terms(grade, basis.iter().copied().zip(coeffs)))
}

fn graded_pair() -> impl Strategy<Value = (HomVF, HomVF)> {
    (0i64..=4, 0i64..=4).prop_flat_map(|(k, m)| (homvf_strategy(k), homvf_strategy(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_antisymmetric((f, g) in graded_pair()) {
        let fg = bracket(&f, &g);
        let gf = bracket(&g, &f);
        prop_assert!(fg.add(&gf).is_zero());
    }

    #[test]
    fn bracket_is_graded((f, g) in graded_pair()) {
        let fg = bracket(&f, &g);
        prop_assert_eq!(fg.grade(), f.grade() + g.grade());
        for (m, _) in fg.terms() {
            prop_assert_eq!(m.grade(), fg.grade());
        }
    }

    #[test]
    fn jacobi_identity(
        f in homvf_strategy(1),
        g in homvf_strategy(2),
        h in homvf_strategy(3),
    ) {
        // grades 1 + 2 + 3 = 6
        let term1 = bracket(&f, &bracket(&g, &h));
        let term2 = bracket(&g, &bracket(&h, &f));
        let term3 = bracket(&h, &bracket(&f, &g));
        prop_assert!(term1.add(&term2).add(&term3).is_zero());
    }

    #[test]
    fn bargmann_is_symmetric_and_positive(
        f in homvf_strategy(3),
        g in homvf_strategy(3),
    ) {
        prop_assert_eq!(bargmann_inner(&f, &g), bargmann_inner(&g, &f));
        let norm = bargmann_inner(&f, &f);
        prop_assert!(norm >= Rational::zero());
        prop_assert_eq!(norm.is_zero(), f.is_zero());
    }

    #[test]
    fn ad_iter_matches_repeated_bracket(
        h in homvf_strategy(1),
        w in homvf_strategy(2),
    ) {
        let twice = bracket(&h, &bracket(&h, &w));
        prop_assert_eq!(ad_iter(&h, &w, 2), twice);
        prop_assert_eq!(ad_iter(&h, &w, 0), w);
    }

    #[test]
    fn bch_fixes_grades_below_generator(
        h in homvf_strategy(2),
        lin in homvf_strategy(0),
        quad in homvf_strategy(1),
        cubic in homvf_strategy(2),
    ) {
        let jet = JetSeries::from_fields(6, [lin, quad, cubic]);
        let out = bch_conjugate(&jet, &h);
        prop_assert_eq!(out.part(0), jet.part(0));
        prop_assert_eq!(out.part(1), jet.part(1));
    }

    #[test]
    fn solver_contract_for_s3_operator(rhs in homvf_strategy(2)) {
        let f0 = HomVF::monomial(VecMonomial::new(0, 1, Axis::Y), rat(1, 1));
        let domain: Vec<HomVF> = VecMonomial::basis_of_grade(2)
            .into_iter()
            .map(|m| HomVF::monomial(m, rat(1, 1)))
            .collect();
        let op = operator_matrix(&f0, &domain, 2).unwrap();
        let sol = solve_homological(&op, &rhs, FreePolicy::ZeroFree).unwrap();
        // op(h) = P(rhs), exactly
        prop_assert_eq!(op.apply_coords(&sol.coords), sol.projected.clone());
        // projection idempotent, residual orthogonal to the range
        let p2 = op.project_onto_range(&sol.projected).unwrap();
        prop_assert_eq!(p2, sol.projected.clone());
        prop_assert!(op.orthogonal_to_range(&sol.residual));
        // rank-nullity
        prop_assert_eq!(op.rank() + op.kernel_basis().len(), op.domain_dim());
    }

    #[test]
    fn adjointness_identity(
        f in homvf_strategy(3),
        g in homvf_strategy(3),
    ) {
        // nilpotent upper block: a case where L0 is not self-adjoint
        let a = HomVF::monomial(VecMonomial::new(0, 1, Axis::X), rat(1, 1));
        let domain: Vec<HomVF> = VecMonomial::basis_of_grade(3)
            .into_iter()
            .map(|m| HomVF::monomial(m, rat(1, 1)))
            .collect();
        let op = operator_matrix(&a, &domain, 3).unwrap();
        let adj = op.adjoint_matrix();
        let lf = bracket(&a, &f);
        let adj_g = adj.apply_coords(&g.coords());
        prop_assert_eq!(bargmann_inner(&lf, &g), bargmann_inner(&f, &adj_g));
    }
}

/// Numeric cross-validation of the graded conjugation: evaluating the
/// conjugated jet as a polynomial agrees with pushing the original field
/// through the closed-form coordinate change.
#[test]
fn bch_matches_flow_pushforward() {
    const PREC: u32 = 240;
    let tol = {
        let ten = BigFloat::from_i64(10, PREC);
        BigFloat::one(PREC).div(&ten.powi(20))
    };
    let cases = [
        (1i64, rat(1, 1), rat(0, 1)),
        (1, rat(-1, 2), rat(1, 3)),
        (2, rat(2, 3), rat(-1, 2)),
        (3, rat(0, 1), rat(3, 4)),
    ];
    for (k, alpha, beta) in cases {
        // a jet with linear part y∂y plus a couple of resonant terms
        let order = 14;
        let jet = JetSeries::from_fields(
            order,
            [
                HomVF::monomial(VecMonomial::new(0, 1, Axis::Y), rat(1, 1)),
                HomVF::monomial(VecMonomial::new(1, 1, Axis::Y), rat(2, 5)),
                HomVF::monomial(VecMonomial::new(3, 0, Axis::X), rat(-3, 7)),
            ],
        );
        let h = HomVF::monomial(VecMonomial::new(k as u32 + 1, 0, Axis::X), alpha.clone()).add(
            &HomVF::monomial(VecMonomial::new(k as u32, 1, Axis::Y), beta.clone()),
        );
        let transformed = bch_conjugate(&jet, &h);
        let map = FlowMap::new(k, alpha.clone(), beta.clone());
        for (zx, zy) in [(1i64, 1i64), (-1, 2), (2, -1)] {
            // sample point small enough that the truncation error sits far
            // below the tolerance
            let x0 = BigFloat::from_rational(&rat(zx, 100), PREC);
            let y0 = BigFloat::from_rational(&rat(zy, 100), PREC);
            // forward image
            let (fx, fy) = map.eval(FlowDirection::Forward, &x0, &y0).unwrap();
            // original field at the forward image
            let (wx, wy) = eval_jet(&jet, &fx, &fy);
            // Jacobian of the inverse map at the forward image
            let kk = k as u32;
            let one = BigFloat::one(PREC);
            let (j11, j21, j22);
            if alpha.is_zero() {
                let e = fx
                    .powi(kk)
                    .mul(&BigFloat::from_rational(&beta, PREC))
                    .neg()
                    .exp();
                j11 = one.clone();
                j21 = fy
                    .mul(&BigFloat::from_rational(&(-beta.clone() * rat(k, 1)), PREC))
                    .mul(&fx.powi(kk - 1))
                    .mul(&e);
                j22 = e;
            } else {
                let u = one.add(
                    &fx.powi(kk)
                        .mul(&BigFloat::from_rational(&(alpha.clone() * rat(k, 1)), PREC)),
                );
                j11 = u.pow_rational(&(rat(-1, k) - rat(1, 1))).unwrap();
                let expo = beta.clone() / (rat(k, 1) * alpha.clone());
                j21 = fy
                    .mul(&BigFloat::from_rational(&(-beta.clone() * rat(k, 1)), PREC))
                    .mul(&fx.powi(kk - 1))
                    .mul(&u.pow_rational(&(-expo.clone() - rat(1, 1))).unwrap());
                j22 = u.pow_rational(&-expo).unwrap();
            }
            let push_x = j11.mul(&wx);
            let push_y = j21.mul(&wx).add(&j22.mul(&wy));
            // conjugated jet evaluated at the source point
            let (tx, ty) = eval_jet(&transformed, &x0, &y0);
            let dx = tx.sub(&push_x).abs();
            let dy = ty.sub(&push_y).abs();
            assert!(
                dx.cmp_value(&tol) == std::cmp::Ordering::Less
                    && dy.cmp_value(&tol) == std::cmp::Ordering::Less,
                "pushforward mismatch for k={k}: dx={} dy={}",
                dx.to_f64(),
                dy.to_f64()
            );
        }
    }
}
