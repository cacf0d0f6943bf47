//! The modular-equation solver against frozen equations and its own
//! contract: homogeneity, normalization, denominator support, residuals,
//! and stability under precision changes.

use polycore::{denom_is_smooth_2_3, frac, rat, MultiPoly, WeightedDegree};
use qmod::{
    eval_on_series, leaf_param, modeq_residual, modeq_ring, modeq_solve, modeq_solve_at, QSeries,
};

/// (2,1) is small enough to pin by hand: with monomials y^3, y*x2, x3 the
/// q^0 and q^1 coefficient conditions alone force the two free coefficients,
/// giving y^3 - 1/16 y x2 - 1/32 x3. The solver must land exactly there.
#[test]
fn level_two_linear_equation_matches_hand_elimination() {
    let eq = modeq_solve(2, 1).unwrap();
    assert_eq!(
        eq.solver.to_canonical_string(),
        "-1/32*x3 + -1/16*y1*x2 + 1*y1^3"
    );
    assert_eq!(
        eq.chart.to_canonical_string(),
        "1/32*x3 + -1/16*y1*x2 + 1*y1^3"
    );
}

#[test]
fn frozen_equations() {
    let q22 = modeq_solve(2, 2).unwrap();
    assert_eq!(
        q22.solver.to_canonical_string(),
        "-3375/16*x3^2 + 121/16*x2^3 + 33/16*y2*x2^2 + -9/2*y2^2*x2 + 1*y2^3"
    );
    // i = 2 needs no sign transport.
    assert_eq!(q22.solver, q22.chart);

    let q31 = modeq_solve(3, 1).unwrap();
    assert_eq!(
        q31.solver.to_canonical_string(),
        "-1/243*x2^2 + -8/27*y1*x3 + -2/9*y1^2*x2 + 1*y1^4"
    );
    // psi(3) = 4 is even: only odd powers of y flip.
    assert_eq!(
        q31.chart.to_canonical_string(),
        "-1/243*x2^2 + 8/27*y1*x3 + -2/9*y1^2*x2 + 1*y1^4"
    );

    let q23 = modeq_solve(2, 3).unwrap();
    assert_eq!(
        q23.solver.to_canonical_string(),
        "-1331/64*x3^3 + 49/64*x2^3*x3 + 363/16*y3*x3^2 + -49/64*y3*x2^3 + -33/4*y3^2*x3 + 1*y3^3"
    );
}

#[test]
fn solver_contract_for_small_levels() {
    for d in [2u64, 3] {
        for i in 1..=3u32 {
            let eq = modeq_solve(d, i).unwrap();
            let target = (i as u64 * eq.psi) as i64;
            assert_eq!(
                eq.solver.weighted_degree().unwrap(),
                WeightedDegree::Homogeneous(target),
                "({d},{i}) homogeneity"
            );
            assert_eq!(
                eq.chart.weighted_degree().unwrap(),
                WeightedDegree::Homogeneous(target)
            );
            // Normalized pure power of y.
            let lead = eq.solver.coeff(&[eq.psi as u32, 0, 0]);
            assert_eq!(lead, rat(1), "({d},{i}) leading coefficient");
            assert_eq!(eq.chart.coeff(&[eq.psi as u32, 0, 0]), rat(1));
            // Denominators supported at 2 and 3 only.
            for (_, c) in eq.solver.terms() {
                assert!(denom_is_smooth_2_3(c), "({d},{i}) coefficient {c}");
            }
            // Residual vanishes well past the solving precision.
            let r = modeq_residual(&eq.solver, d, 2 * eq.order_used + 11).unwrap();
            assert!(r.is_zero(), "({d},{i}) residual {r}");
        }
    }
}

/// Chart-form equations vanish on the affine leaf series: y1 is pinned to 1
/// in the chart, y2 and y3 carry their chart signs.
#[test]
fn chart_equations_vanish_on_the_affine_leaf() {
    for d in [2u64, 3] {
        let lp = leaf_param(d, 30).unwrap();
        for i in 1..=3u32 {
            let eq = modeq_solve(d, i).unwrap();
            let yarg = match i {
                1 => QSeries::one(30),
                2 => lp.y2.clone(),
                _ => lp.y3.clone(),
            };
            let r = eval_on_series(&eq.chart, &[yarg, lp.x2.clone(), lp.x3.clone()]).unwrap();
            assert!(r.is_zero(), "({d},{i}) affine residual {r}");
        }
    }
}

#[test]
fn solutions_are_stable_under_precision() {
    let low = modeq_solve_at(2, 2, 30).unwrap();
    let high = modeq_solve_at(2, 2, 60).unwrap();
    assert_eq!(low.solver, high.solver);
    assert_eq!(low.order_used, 30);
    assert_eq!(high.order_used, 60);
}

#[test]
fn wrong_equations_leave_residue() {
    let ring = modeq_ring(2);
    let wrong = MultiPoly::var(&ring, "y2").unwrap();
    let r = modeq_residual(&wrong, 2, 20).unwrap();
    assert_eq!(r.coeff(0), &frac(1, 3));
    // Perturbing one coefficient of the true equation breaks it.
    let eq = modeq_solve(2, 2).unwrap();
    let bumped = &eq.solver + &MultiPoly::var(&ring, "x3").unwrap().pow(2);
    let r2 = modeq_residual(&bumped, 2, 20).unwrap();
    assert!(!r2.is_zero());
}

#[test]
fn monomial_count_table() {
    // (d, i) -> m, the dimension of the weighted-monomial space.
    for &(d, i, m) in &[
        (2u64, 1u32, 3usize),
        (2, 2, 5),
        (2, 3, 6),
        (3, 1, 4),
        (3, 2, 7),
        (3, 3, 9),
    ] {
        let eq = modeq_solve(d, i).unwrap();
        assert_eq!(eq.monomial_count, m, "({d},{i})");
        assert!(eq.solver.num_terms() <= m);
    }
}

#[test]
fn residual_of_zero_is_zero_and_low_order_refused() {
    let zero = MultiPoly::zero(&modeq_ring(3));
    assert!(modeq_residual(&zero, 2, 15).unwrap().is_zero());
    assert!(modeq_solve_at(2, 2, 12).is_err());
}

/// The y-series the solver uses must agree with the leaf denominators:
/// for i = 1 the solver argument is the negative of the chart's Y series.
#[test]
fn solver_and_chart_conventions_are_mirror_images() {
    let lp = leaf_param(2, 25).unwrap();
    let y_solver = qmod::solver_y_series(2, 1, 25).unwrap();
    assert_eq!(y_solver.neg(), lp.y1series);
    // i = 2: same series up to the Y^2 normalization.
    let y2_solver = qmod::solver_y_series(2, 2, 25).unwrap();
    let y2sq = lp.y1series.mul(&lp.y1series);
    assert_eq!(y2_solver, lp.y2.mul(&y2sq), "d^2 g2(q^d) = y2_chart * Y^2");
}
