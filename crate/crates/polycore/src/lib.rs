//! Exact computational kernel: arbitrary-precision rationals, sparse
//! multivariate polynomials over a weighted variable set, rational functions
//! compared by cross-multiplication, and fraction-free linear algebra
//! (Bareiss determinants, rational nullspaces and ranks).
//!
//! Everything here is immutable after construction and allocation-exact:
//! no floating point, no implicit reduction of rational functions, no
//! fixed-width integer fallback.

pub mod matrix;
pub mod poly;
pub mod rat;
pub mod ratfn;
pub mod vars;

pub use matrix::{
    bareiss_det, char_poly, cofactor_det, matmul, matvec, nullspace_rational, rank_rational,
    rat_matrix, ExactMatrix, PolyMatrix, RatMatrix,
};
pub use poly::weighted_monomials;
pub use poly::{MultiPoly, WeightedDegree};
pub use rat::{denom_is_smooth_2_3, frac, parse_rat, rat, rat_to_string, Rat};
pub use ratfn::RationalFunction;
pub use vars::VarSet;

/// Errors shared by the exact-arithmetic layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("undefined degree: zero polynomial")]
    ZeroDegree,
    #[error("variable mismatch: {0}")]
    VarMismatch(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("division by zero denominator")]
    ZeroDenominator,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("exact division failed")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
