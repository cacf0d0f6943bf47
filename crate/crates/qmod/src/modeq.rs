//! The nullspace modular-equation solver.
//!
//! For level d and weight index i, the leaf closure satisfies one weighted-
//! homogeneous polynomial relation in (y_i, x2, x3) with weights (i, 2, 3).
//! The solver recovers it from series data alone: evaluate every monomial of
//! weighted degree i*psi(d) on the modular series, stack the q-coefficients
//! into an exact matrix, and intersect — a 1-dimensional rational nullspace
//! is the equation, anything else is an error to report, not to paper over.

use std::sync::Arc;

use num_traits::{One, Zero};
use polycore::{nullspace_rational, weighted_monomials, MultiPoly, Rat, RatMatrix, VarSet};

use crate::arith::dedekind_psi;
use crate::eis::eisenstein_basis;
use crate::series::{eval_on_series, QSeries};
use crate::{Error, Result};

/// The (y_i, x2, x3) ring with weights (i, 2, 3).
pub fn modeq_ring(i: u32) -> Arc<VarSet> {
    assert!((1..=3).contains(&i), "weight index must be 1, 2, or 3");
    let yname = format!("y{i}");
    VarSet::new(&[(yname.as_str(), i as i64), ("x2", 2), ("x3", 3)])
}

/// The series substituted for y_i in the solver convention:
/// i=1: d g1(q^d) - g1(q);  i=2: d^2 g2(q^d);  i=3: d^3 g3(q^d).
pub fn solver_y_series(d: u64, i: u32, order: usize) -> Result<QSeries> {
    let b = eisenstein_basis(order);
    let di = (d as i64).pow(i);
    Ok(match i {
        1 => b.g1.spread(d, order)?.scale(&Rat::from_integer(di.into())).sub(&b.g1),
        2 => b.g2.spread(d, order)?.scale(&Rat::from_integer(di.into())),
        3 => b.g3.spread(d, order)?.scale(&Rat::from_integer(di.into())),
        _ => unreachable!("validated by modeq_ring"),
    })
}

/// A solved leaf-closure equation, in both sign conventions.
///
/// `solver` vanishes on the raw series of `solver_y_series`; `chart` is the
/// same equation transported to chart coordinates (y_1 and y_3 flip sign
/// there), renormalized so the y^psi coefficient is again 1.
#[derive(Debug, Clone)]
pub struct ModularEquation {
    pub d: u64,
    pub i: u32,
    pub psi: u64,
    pub monomial_count: usize,
    pub order_used: usize,
    pub solver: MultiPoly,
    pub chart: MultiPoly,
}

/// Default solving order: max(3 i psi(d), m + 15), comfortably past the
/// m + 10 minimum the solver insists on.
pub fn default_order(d: u64, i: u32) -> usize {
    let psi = dedekind_psi(d);
    let m = monomial_exponents(d, i).len();
    ((3 * i as u64 * psi) as usize).max(m + 15)
}

fn monomial_exponents(d: u64, i: u32) -> Vec<Vec<u32>> {
    let target = (i as u64 * dedekind_psi(d)) as i64;
    weighted_monomials(&[i as i64, 2, 3], target)
}

/// Solve at the default order.
pub fn modeq_solve(d: u64, i: u32) -> Result<ModularEquation> {
    modeq_solve_at(d, i, default_order(d, i))
}

/// Solve at an explicit order (must be at least m + 10). Every solve is
/// re-verified at twice the order before it is returned.
pub fn modeq_solve_at(d: u64, i: u32, order: usize) -> Result<ModularEquation> {
    if d < 2 {
        return Err(Error::LevelTooSmall(d));
    }
    let ring = modeq_ring(i);
    let psi = dedekind_psi(d);
    let monos = monomial_exponents(d, i);
    let m = monos.len();
    if order < m + 10 {
        return Err(Error::PrecisionTooLow { d, i, n: order });
    }

    let mono_series = monomial_series(d, i, &monos, order)?;
    let mat = RatMatrix::from_fn(order + 1, m, |n, j| mono_series[j].coeff(n).clone());
    let kernel = nullspace_rational(&mat);
    match kernel.len() {
        0 => return Err(Error::PrecisionTooLow { d, i, n: order }),
        1 => {}
        dim => return Err(Error::Underdetermined { d, i, n: order, dim }),
    }

    let raw = MultiPoly::from_terms(
        &ring,
        monos
            .iter()
            .cloned()
            .zip(kernel[0].iter().cloned())
            .collect::<Vec<_>>(),
    );
    let lead = raw.coeff(&[psi as u32, 0, 0]);
    if lead.is_zero() {
        return Err(Error::MissingLeadingTerm { d, i });
    }
    let solver = raw.scale(&(Rat::one() / lead));

    // Cross-validation at doubled precision: the equation must keep
    // vanishing far beyond the data that determined it.
    let verify_n = 2 * order;
    if !modeq_residual(&solver, d, verify_n)?.is_zero() {
        return Err(Error::Unverified { d, i, n: order, verify_n });
    }

    let chart = to_chart_form(&solver, i, psi);
    Ok(ModularEquation {
        d,
        i,
        psi,
        monomial_count: m,
        order_used: order,
        solver,
        chart,
    })
}

/// Evaluate an equation on the solver-convention series at the given order;
/// a correct equation returns the zero series.
pub fn modeq_residual(q: &MultiPoly, d: u64, order: usize) -> Result<QSeries> {
    let i = ring_weight_index(q)?;
    let b = eisenstein_basis(order);
    let args = [solver_y_series(d, i, order)?, b.g2, b.g3];
    eval_on_series(q, &args).map_err(Into::into)
}

/// Identify i from the ring of a polynomial and insist the ring has the
/// exact (y_i, x2, x3) shape the solver emits.
fn ring_weight_index(q: &MultiPoly) -> Result<u32> {
    let vars = q.vars();
    let bad = |msg: &str| Error::WrongRing(format!("{msg} (got {:?})", vars.names()));
    if vars.len() != 3 || vars.name(1) != "x2" || vars.name(2) != "x3" {
        return Err(bad("expected three variables y_i, x2, x3"));
    }
    let i = vars.weight(0);
    if !(1..=3).contains(&i) || vars.name(0) != format!("y{i}") {
        return Err(bad("first variable must be y_i with weight i"));
    }
    Ok(i as u32)
}

fn monomial_series(
    d: u64,
    i: u32,
    monos: &[Vec<u32>],
    order: usize,
) -> Result<Vec<QSeries>> {
    let b = eisenstein_basis(order);
    let args = [solver_y_series(d, i, order)?, b.g2, b.g3];
    // Shared power tables across monomials.
    let max_exp: Vec<u32> = (0..3)
        .map(|v| monos.iter().map(|e| e[v]).max().unwrap_or(0))
        .collect();
    let tables: Vec<Vec<QSeries>> = args
        .iter()
        .zip(&max_exp)
        .map(|(a, &top)| {
            let mut t = vec![QSeries::one(order)];
            for e in 1..=top {
                t.push(t[(e - 1) as usize].mul(a));
            }
            t
        })
        .collect();
    Ok(monos
        .iter()
        .map(|e| {
            tables[0][e[0] as usize]
                .mul(&tables[1][e[1] as usize])
                .mul(&tables[2][e[2] as usize])
        })
        .collect())
}

/// Transport a solver-convention equation to chart coordinates: y flips
/// sign for i = 1 and i = 3, and the result is rescaled so the coefficient
/// of y^psi is 1 again (a sign when psi is odd).
fn to_chart_form(solver: &MultiPoly, i: u32, psi: u64) -> MultiPoly {
    if i == 2 {
        return solver.clone();
    }
    let flipped: Vec<(Vec<u32>, Rat)> = solver
        .terms()
        .map(|(exps, c)| {
            let mut sign_exp = exps[0]; // y-exponent
            if psi % 2 == 1 {
                sign_exp += 1; // overall renormalization by -1
            }
            let c = if sign_exp % 2 == 1 { -c } else { c.clone() };
            (exps.clone(), c)
        })
        .collect();
    MultiPoly::from_terms(solver.vars(), flipped)
}
