//! Polynomial vector fields treated as derivations.
//!
//! A `VectorField` is a derivation of the polynomial ring fixed by its
//! variable set: one polynomial component per variable. On top of that this
//! crate provides Lie brackets, the named fields of the modular-foliation
//! setup (the sl2 triple, the quadratic field on the degree-weighted chart,
//! the Halphen family, the Picard field), chart quotients of doubled fields
//! with a built-in well-definedness proof, invariance cofactors, and the
//! singular-curve bookkeeping around the quadratic field.

pub mod builtins;
pub mod chart;
pub mod field;
pub mod singular;

pub use builtins::{
    chart_ring, discriminants, eis_field_e, eis_field_f, eis_field_h, halphen, halphen_chart,
    halphen_quotient_expected, halphen_ring, halphen_symbolic, halphen_symbolic_ring, join_ring,
    modular_field_v, picard_field, picard_ring, ramanujan, ramanujan_chart, t_ring, HalphenY2,
};
pub use chart::{self_join, ChartSpec};
pub use field::VectorField;
pub use singular::{singular_curve_point, CurvePoint};

/// Errors for derivation and chart work.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Core(#[from] polycore::Error),
    #[error("variable mismatch: {0}")]
    VarMismatch(String),
    #[error("point is not a singularity of the field")]
    NotSingular,
    #[error("polynomial is not invariant: no cofactor exists")]
    NotInvariant,
    #[error("ill-formed chart: {0}")]
    ChartInvalid(String),
    #[error("derivative of `{0}` is not divisor-divisible into the chart ring")]
    NotDivisorDivisible(String),
    #[error("chart not invariant: `{0}` fails the identity check in the source variables")]
    ChartNotInvariant(String),
    #[error("parameter at infinity is not supported")]
    InfiniteParameter,
}

pub type Result<T> = std::result::Result<T, Error>;
