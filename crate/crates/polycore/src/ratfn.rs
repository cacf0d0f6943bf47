//! Rational functions as unreduced numerator/denominator pairs.
//!
//! No gcd computation ever happens implicitly: arithmetic multiplies things
//! out and equality is decided by cross-multiplication, which is exact and
//! avoids multivariate gcds entirely. `reduce_by` exists for callers that
//! know a common factor.

use std::fmt;
use std::sync::Arc;

use num_traits::One;

use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::vars::{same_vars, VarSet};
use crate::{Error, Result};

/// Quotient of two polynomials over one ring; denominator nonzero.
#[derive(Debug, Clone)]
pub struct RationalFunction {
    num: MultiPoly,
    den: MultiPoly,
}

impl RationalFunction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if !same_vars(num.vars(), den.vars()) {
            return Err(Error::VarMismatch(
                "numerator and denominator over different rings".into(),
            ));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let one = MultiPoly::one(p.vars());
        RationalFunction { num: p, den: one }
    }

    pub fn zero(vars: &Arc<VarSet>) -> Self {
        Self::from_poly(MultiPoly::zero(vars))
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::from_poly(MultiPoly::one(vars))
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rat) -> Self {
        Self::from_poly(MultiPoly::constant(vars, c))
    }

    pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Self> {
        Ok(Self::from_poly(MultiPoly::var(vars, name)?))
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.num
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// Divide numerator and denominator by a known common factor.
    pub fn reduce_by(&self, factor: &MultiPoly) -> Result<Self> {
        Self::new(self.num.div_exact(factor)?, self.den.div_exact(factor)?)
    }

    /// Reduce to a polynomial: exact when the denominator divides the
    /// numerator, `Err(InexactDivision)` otherwise.
    pub fn to_polynomial(&self) -> Result<MultiPoly> {
        if self.den.is_constant() {
            let c = self.den.constant_part();
            return Ok(self.num.scale(&(Rat::one() / c)));
        }
        self.num.div_exact(&self.den)
    }

    pub fn is_polynomial(&self) -> bool {
        self.to_polynomial().is_ok()
    }
}

/// Cross-multiplied equality: `a/b == c/d` iff `a*d == c*b`.
impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFunction {}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() && self.den.constant_part().is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl std::ops::Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl std::ops::Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            den: &self.den * &rhs.den,
        }
    }
}

impl std::ops::Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }
}

impl std::ops::Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl std::ops::Div for &RationalFunction {
    type Output = RationalFunction;
    /// Panics when `rhs` is zero; use `recip` for a checked path.
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.num.is_zero(), "division by zero rational function");
        RationalFunction {
            num: &self.num * &rhs.den,
            den: &self.den * &rhs.num,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vars::VarSet;

    fn ring() -> Arc<VarSet> {
        VarSet::new(&[("a", 1), ("b", 1)])
    }

    fn rf(vs: &Arc<VarSet>, num: &str, den: &str) -> RationalFunction {
        RationalFunction::new(
            MultiPoly::parse(vs, num).unwrap(),
            MultiPoly::parse(vs, den).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn cross_multiplied_equality() {
        let vs = ring();
        // a/b == a^2*b / a*b^2 without any reduction.
        let x = rf(&vs, "a", "b");
        let y = rf(&vs, "a^2*b", "a*b^2");
        assert_eq!(x, y);
        assert_ne!(x, rf(&vs, "b", "a"));
    }

    #[test]
    fn field_arithmetic() {
        let vs = ring();
        let x = rf(&vs, "a", "b");
        let y = rf(&vs, "b", "a");
        let s = &x + &y;
        assert_eq!(s, rf(&vs, "a^2 + b^2", "a*b"));
        let p = &x * &y;
        assert_eq!(p, RationalFunction::one(&vs));
        let d = &x - &x;
        assert!(d.is_zero());
    }

    #[test]
    fn polynomial_detection() {
        let vs = ring();
        assert!(rf(&vs, "a^2 + -1*b^2", "a + b").is_polynomial());
        assert!(!rf(&vs, "a", "b").is_polynomial());
        assert_eq!(
            rf(&vs, "a^2 + -1*b^2", "a + b")
                .to_polynomial()
                .unwrap()
                .to_canonical_string(),
            "-1*b + 1*a"
        );
    }

    #[test]
    fn zero_denominator_rejected() {
        let vs = ring();
        let z = MultiPoly::zero(&vs);
        let a = MultiPoly::var(&vs, "a").unwrap();
        assert_eq!(
            RationalFunction::new(a, z).unwrap_err(),
            Error::ZeroDenominator
        );
    }
}
