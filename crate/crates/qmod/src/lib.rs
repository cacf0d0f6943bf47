//! Exact q-expansion arithmetic and the modular-equation solver.
//!
//! Everything here is rational: the Eisenstein data is normalized once and
//! for all as `(E2/12, E4/12, E6/216)`, which absorbs every transcendental
//! period factor and turns the classical derivation identities into exact
//! statements about truncated series with `BigRational` coefficients. On top
//! of that sit the level-`d` leaf parametrizations, the tangency check
//! against the quadratic field, and a nullspace solver that recovers the
//! defining equations of a leaf closure from nothing but series data.

mod arith;
mod eis;
mod leaf;
mod modeq;
mod series;

pub use arith::{
    bernoulli_abs, coset_family, coset_reps, cusp_count, cusp_count_brute_force, dedekind_psi,
    divisors, euler_phi, sigma,
};
pub use eis::{eisenstein, eisenstein_basis, ramanujan_residuals, EisensteinBasis};
pub use leaf::{leaf_cusp_values, leaf_param, tangency_minors, LeafParam};
pub use modeq::{
    default_order, modeq_residual, modeq_ring, modeq_solve, modeq_solve_at, solver_y_series,
    ModularEquation,
};
pub use series::{eval_on_series, QSeries};

/// Errors from series arithmetic and the solver.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] polycore::Error),
    /// Division by a series whose constant term vanishes.
    #[error("division requires a unit constant term (valuation {0} > 0)")]
    NonUnitDivisor(usize),
    /// Dividing out q^k from a series with a nonzero lower-order term.
    #[error("cannot shift valuation down by {shift}: coefficient of q^{offender} is nonzero")]
    ValuationShift { shift: usize, offender: usize },
    /// f(q^d) requested past the precision the input supports.
    #[error("q^{d} substitution to order {needed} needs input order {required}, have {available}")]
    SpreadTooFar {
        d: u64,
        needed: usize,
        required: usize,
        available: usize,
    },
    /// Leaf parametrizations need d >= 2; at d = 1 the denominator series
    /// vanishes identically.
    #[error("level {0} has no leaf parametrization (need d >= 2)")]
    LevelTooSmall(u64),
    /// The solver's coefficient matrix had a trivial kernel.
    #[error("precision too low for ({d},{i}): kernel is 0-dimensional at order {n}")]
    PrecisionTooLow { d: u64, i: u32, n: usize },
    /// The solver's kernel was too big to pin down one equation.
    #[error("underdetermined for ({d},{i}): kernel dimension {dim} at order {n} — increase the order")]
    Underdetermined { d: u64, i: u32, n: usize, dim: usize },
    /// The kernel vector lacks the distinguished pure power of y_i, so the
    /// normalization dividing by that coefficient is impossible.
    #[error("solved equation for ({d},{i}) has no y^psi term to normalize")]
    MissingLeadingTerm { d: u64, i: u32 },
    /// The solved equation failed re-verification at doubled precision.
    #[error("equation for ({d},{i}) solved at order {n} does not vanish at order {verify_n}")]
    Unverified {
        d: u64,
        i: u32,
        n: usize,
        verify_n: usize,
    },
    /// A polynomial was handed to the solver over the wrong ring.
    #[error("expected a polynomial over (y_i, x2, x3): {0}")]
    WrongRing(String),
}

pub type Result<T> = std::result::Result<T, Error>;
