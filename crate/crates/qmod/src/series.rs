//! Truncated power series in q with exact rational coefficients.
//!
//! A `QSeries` of order N stores c_0..c_N and stands for
//! `sum c_n q^n + O(q^{N+1})`. Arithmetic never claims more precision than
//! its inputs support: binary operations truncate to the smaller order.

use std::fmt;

use num_traits::Zero;
use polycore::{rat_to_string, MultiPoly, Rat};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rat>, // c_0 ..= c_order; never empty
}

impl QSeries {
    /// Wrap explicit coefficients c_0..c_N.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least a constant term");
        QSeries { coeffs }
    }

    /// Build c_n = f(n) for n = 0..=order.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize) -> Rat) -> Self {
        QSeries::new((0..=order).map(|n| f(n)).collect())
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = c;
        QSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        QSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        QSeries::constant(Rat::from_integer(1.into()), order)
    }

    /// Highest exponent with a stored coefficient.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of q^n; n must be within the stored precision.
    pub fn coeff(&self, n: usize) -> &Rat {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Index of the first nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Forget precision: keep c_0..c_new_order.
    pub fn trim(&self, new_order: usize) -> Self {
        assert!(
            new_order <= self.order(),
            "trim cannot extend precision ({} > {})",
            new_order,
            self.order()
        );
        QSeries {
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }

    pub fn neg(&self) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        QSeries {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        QSeries::from_fn(n, |k| &self.coeffs[k] + &rhs.coeffs[k])
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        QSeries::from_fn(n, |k| &self.coeffs[k] - &rhs.coeffs[k])
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let n = self.order().min(rhs.order());
        let mut out = vec![Rat::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        QSeries { coeffs: out }
    }

    /// Division; the divisor must have a nonzero constant term.
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        if rhs.coeffs[0].is_zero() {
            return Err(Error::NonUnitDivisor(rhs.valuation().unwrap_or(rhs.order() + 1)));
        }
        let n = self.order().min(rhs.order());
        let mut out: Vec<Rat> = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = self.coeffs[k].clone();
            for (j, c) in out.iter().enumerate() {
                acc -= c * &rhs.coeffs[k - j];
            }
            out.push(acc / &rhs.coeffs[0]);
        }
        Ok(QSeries { coeffs: out })
    }

    /// The derivation q d/dq: c_n -> n c_n. Precision is preserved.
    pub fn qdq(&self) -> Self {
        QSeries::from_fn(self.order(), |n| {
            &self.coeffs[n] * Rat::from_integer((n as u64).into())
        })
    }

    /// Multiply by q^k; the result legitimately knows k more coefficients.
    pub fn mul_qpow(&self, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QSeries { coeffs }
    }

    /// Divide by q^k; the first k coefficients must vanish.
    pub fn div_qpow(&self, k: usize) -> Result<Self> {
        if let Some(offender) = self.coeffs.iter().take(k).position(|c| !c.is_zero()) {
            return Err(Error::ValuationShift { shift: k, offender });
        }
        if k > self.order() {
            return Err(Error::ValuationShift {
                shift: k,
                offender: self.order(),
            });
        }
        Ok(QSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// f(q) -> f(q^d), exact coefficient spreading, to the requested order.
    /// Needs c_m for every m <= out_order/d, so the input order must cover
    /// that range.
    pub fn spread(&self, d: u64, out_order: usize) -> Result<Self> {
        assert!(d >= 1);
        let d_us = d as usize;
        let required = out_order / d_us;
        if required > self.order() {
            return Err(Error::SpreadTooFar {
                d,
                needed: out_order,
                required,
                available: self.order(),
            });
        }
        let mut coeffs = vec![Rat::zero(); out_order + 1];
        for (m, c) in self.coeffs.iter().enumerate() {
            let k = m * d_us;
            if k > out_order {
                break;
            }
            coeffs[k] = c.clone();
        }
        Ok(QSeries { coeffs })
    }

    /// Integer power with precision equal to self's order.
    pub fn pow(&self, e: u32) -> Self {
        let mut acc = QSeries::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for QSeries {
    /// "c0 + c1*q + c2*q^2 + O(q^{N+1})", zero terms skipped, coefficients
    /// as reduced fractions with the sign attached (same register as the
    /// canonical polynomial format).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = rat_to_string(c);
            parts.push(match n {
                0 => cs,
                1 => format!("{cs}*q"),
                _ => format!("{cs}*q^{n}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        write!(f, "{} + O(q^{})", parts.join(" + "), self.order() + 1)
    }
}

/// Evaluate a polynomial on series arguments, one per ring variable, with
/// memoized powers. The result's order is the minimum argument order.
pub fn eval_on_series(p: &MultiPoly, args: &[QSeries]) -> Result<QSeries> {
    if args.len() != p.vars().len() {
        return Err(Error::Core(polycore::Error::VarMismatch(format!(
            "{} series arguments for {} variables",
            args.len(),
            p.vars().len()
        ))));
    }
    let order = args.iter().map(QSeries::order).min().unwrap_or(0);
    // Power tables, built lazily up to the largest exponent that occurs.
    let mut tables: Vec<Vec<QSeries>> = args
        .iter()
        .map(|a| vec![QSeries::one(order), a.trim(order)])
        .collect();
    let mut acc = QSeries::zero(order);
    for (exps, coeff) in p.terms() {
        let mut term = QSeries::constant(coeff.clone(), order);
        for (v, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let table = &mut tables[v];
            while table.len() <= e as usize {
                let next = table.last().expect("table seeded").mul(&table[1]);
                table.push(next);
            }
            term = term.mul(&table[e as usize]);
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::{frac, rat, VarSet};

    fn s(v: &[i64]) -> QSeries {
        QSeries::new(v.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn display_format() {
        let f = QSeries::new(vec![rat(1), rat(-24), rat(0), frac(1, 2)]);
        assert_eq!(f.to_string(), "1 + -24*q + 1/2*q^3 + O(q^4)");
        assert_eq!(QSeries::zero(2).to_string(), "0 + O(q^3)");
    }

    #[test]
    fn arithmetic_truncates_to_min_order() {
        let a = s(&[1, 1, 1, 1, 1]);
        let b = s(&[1, 2]);
        assert_eq!(a.add(&b).order(), 1);
        assert_eq!(a.mul(&b).coeffs(), &[rat(1), rat(3)]);
    }

    #[test]
    fn geometric_series_inverts() {
        // 1/(1-q) = 1 + q + q^2 + ...
        let one = QSeries::one(6);
        let den = s(&[1, -1, 0, 0, 0, 0, 0]);
        let inv = one.div(&den).unwrap();
        assert_eq!(inv, s(&[1, 1, 1, 1, 1, 1, 1]));
        assert!(den.mul(&inv).sub(&one).is_zero());
    }

    #[test]
    fn division_needs_a_unit() {
        let a = s(&[1, 2, 3]);
        let q = s(&[0, 1, 0]);
        assert!(matches!(a.div(&q), Err(Error::NonUnitDivisor(1))));
    }

    #[test]
    fn valuation_shifts() {
        let f = s(&[0, 0, 3, 4]);
        assert_eq!(f.div_qpow(2).unwrap(), s(&[3, 4]));
        assert!(matches!(
            f.div_qpow(3),
            Err(Error::ValuationShift { shift: 3, offender: 2 })
        ));
        assert_eq!(s(&[3, 4]).mul_qpow(2), s(&[0, 0, 3, 4]));
    }

    #[test]
    fn spreading_is_exact_and_bounded() {
        let f = s(&[5, 7, 11]);
        let g = f.spread(3, 8).unwrap();
        assert_eq!(g, s(&[5, 0, 0, 7, 0, 0, 11, 0, 0]).trim(8));
        assert!(matches!(f.spread(3, 9), Err(Error::SpreadTooFar { .. })));
    }

    #[test]
    fn qdq_is_a_derivation() {
        let a = s(&[1, 2, 3, 4]);
        let b = s(&[5, 6, 7, 8]);
        let lhs = a.mul(&b).qdq();
        let rhs = a.qdq().mul(&b).add(&a.mul(&b.qdq()));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn polynomial_evaluation_on_series() {
        let vars = VarSet::new(&[("u", 1), ("w", 1)]);
        let p = MultiPoly::parse(&vars, "u^2 + -1*w").unwrap();
        let u = s(&[0, 1, 0, 0]); // q
        let w = s(&[0, 0, 1, 0]); // q^2
        let val = eval_on_series(&p, &[u, w]).unwrap();
        assert!(val.is_zero(), "q^2 - q^2 = 0, got {val}");
    }
}
