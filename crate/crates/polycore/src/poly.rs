//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so a polynomial is
//! automatically in normal form: zero coefficients are never stored and the
//! term list is deterministic. The text form sorts terms by weighted degree
//! (descending), ties broken by exponent vector (lexicographic ascending),
//! and always prints an explicit coefficient: `1*x2^3 + -6*x3`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::rat::{parse_rat, rat_to_string, Rat};
use crate::ratfn::RationalFunction;
use crate::vars::{same_vars, VarSet};
use crate::{Error, Result};

/// Weighted degree of a nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightedDegree {
    /// Every term has this weighted degree.
    Homogeneous(i64),
    /// Terms span several degrees.
    Mixed { min: i64, max: i64 },
}

/// Sparse polynomial over `Rat` in the ring fixed by its `VarSet`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Arc<VarSet>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(vars: &Arc<VarSet>) -> Self {
        MultiPoly {
            vars: Arc::clone(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, Rat::one())
    }

    pub fn constant(vars: &Arc<VarSet>, c: Rat) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    /// The variable `name` as a polynomial.
    pub fn var(vars: &Arc<VarSet>, name: &str) -> Result<Self> {
        let i = vars.index_of(name)?;
        let mut exps = vec![0; vars.len()];
        exps[i] = 1;
        Ok(Self::monomial(vars, exps, Rat::one()))
    }

    /// Single term `c * x^exps`.
    pub fn monomial(vars: &Arc<VarSet>, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), vars.len(), "exponent vector length");
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Fold an iterator of terms, summing duplicates and dropping zeros.
    pub fn from_terms<I>(vars: &Arc<VarSet>, iter: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rat)>,
    {
        let mut p = Self::zero(vars);
        for (exps, c) in iter {
            p.add_term(exps, c);
        }
        p
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rat) {
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Coefficient of the constant term.
    pub fn constant_part(&self) -> Rat {
        self.coeff(&vec![0; self.vars.len()])
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in exponent-lex order (the storage order).
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of an exponent vector (zero if absent).
    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Highest power of variable `i` appearing in any term.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    /// Weighted degree across all terms; `Err` on the zero polynomial.
    pub fn weighted_degree(&self) -> Result<WeightedDegree> {
        let mut degs = self.terms.keys().map(|e| self.vars.wdeg(e));
        let first = degs.next().ok_or(Error::ZeroDegree)?;
        let (mut lo, mut hi) = (first, first);
        for d in degs {
            lo = lo.min(d);
            hi = hi.max(d);
        }
        Ok(if lo == hi {
            WeightedDegree::Homogeneous(lo)
        } else {
            WeightedDegree::Mixed { min: lo, max: hi }
        })
    }

    /// True when nonzero and every term has weighted degree `d`.
    pub fn is_homogeneous_of(&self, d: i64) -> bool {
        self.weighted_degree() == Ok(WeightedDegree::Homogeneous(d))
    }

    /// Largest weighted degree of any term; `Err` on zero.
    pub fn wdeg_max(&self) -> Result<i64> {
        Ok(match self.weighted_degree()? {
            WeightedDegree::Homogeneous(d) => d,
            WeightedDegree::Mixed { max, .. } => max,
        })
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, k)| (e.clone(), k * c))
            .collect();
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < self.vars.len(), "variable index");
        let mut out = Self::zero(&self.vars);
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = exps.clone();
            e[i] -= 1;
            out.add_term(e, c * Rat::from_integer(exps[i].into()));
        }
        out
    }

    /// Partial derivative with respect to the variable called `name`.
    pub fn partial_named(&self, name: &str) -> Result<Self> {
        Ok(self.partial(self.vars.index_of(name)?))
    }

    /// Exact evaluation at a rational point (one value per variable).
    pub fn eval_rat(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let pows = power_table(point, &self.max_exps());
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    t *= &pows[i][e as usize];
                }
            }
            acc += t;
        }
        acc
    }

    fn max_exps(&self) -> Vec<u32> {
        let mut m = vec![0u32; self.vars.len()];
        for exps in self.terms.keys() {
            for (mi, &e) in m.iter_mut().zip(exps) {
                *mi = (*mi).max(e);
            }
        }
        m
    }

    /// Substitute a rational function for every variable. All images must
    /// share one variable set; the result is not reduced.
    pub fn substitute(&self, images: &[RationalFunction]) -> Result<RationalFunction> {
        if images.len() != self.vars.len() {
            return Err(Error::VarMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let target = images
            .first()
            .map(|r| Arc::clone(r.numer().vars()))
            .ok_or_else(|| Error::VarMismatch("no images".into()))?;
        for r in images {
            if !same_vars(r.numer().vars(), &target) {
                return Err(Error::VarMismatch("images over different rings".into()));
            }
        }
        let caps = self.max_exps();
        let num_pows: Vec<Vec<MultiPoly>> = images
            .iter()
            .enumerate()
            .map(|(i, r)| poly_power_table(r.numer(), caps[i]))
            .collect();
        let den_pows: Vec<Vec<MultiPoly>> = images
            .iter()
            .enumerate()
            .map(|(i, r)| poly_power_table(r.denom(), caps[i]))
            .collect();
        let mut num = MultiPoly::zero(&target);
        for (exps, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                t = &t * &num_pows[i][e as usize];
                t = &t * &den_pows[i][(caps[i] - e) as usize];
            }
            num = &num + &t;
        }
        let mut den = MultiPoly::one(&target);
        for (i, &cap) in caps.iter().enumerate() {
            den = &den * &den_pows[i][cap as usize];
        }
        RationalFunction::new(num, den)
    }

    /// Substitute a polynomial for every variable (composition).
    pub fn subst_polys(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.vars.len() {
            return Err(Error::VarMismatch(format!(
                "{} images for {} variables",
                images.len(),
                self.vars.len()
            )));
        }
        let target = images
            .first()
            .map(|p| Arc::clone(p.vars()))
            .ok_or_else(|| Error::VarMismatch("no images".into()))?;
        for p in images {
            if !same_vars(p.vars(), &target) {
                return Err(Error::VarMismatch("images over different rings".into()));
            }
        }
        let caps = self.max_exps();
        let pows: Vec<Vec<MultiPoly>> = images
            .iter()
            .enumerate()
            .map(|(i, p)| poly_power_table(p, caps[i]))
            .collect();
        let mut out = MultiPoly::zero(&target);
        for (exps, c) in &self.terms {
            let mut t = MultiPoly::constant(&target, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    t = &t * &pows[i][e as usize];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Fix the named variables to rational values; the ring is unchanged.
    pub fn subst_partial(&self, assignment: &[(&str, Rat)]) -> Result<Self> {
        let mut fixed: Vec<Option<Rat>> = vec![None; self.vars.len()];
        for (name, v) in assignment {
            fixed[self.vars.index_of(name)?] = Some(v.clone());
        }
        let mut out = Self::zero(&self.vars);
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e = exps.clone();
            for (i, f) in fixed.iter().enumerate() {
                if let Some(v) = f {
                    for _ in 0..e[i] {
                        coeff *= v;
                    }
                    e[i] = 0;
                }
            }
            out.add_term(e, coeff);
        }
        Ok(out)
    }

    /// Re-express over `target`, matching variables by name. Variables absent
    /// from `target` must not occur in any term.
    pub fn project(&self, target: &Arc<VarSet>) -> Result<Self> {
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| target.index_of(n).ok())
            .collect();
        let mut out = Self::zero(target);
        for (exps, c) in &self.terms {
            let mut e = vec![0u32; target.len()];
            for (i, &k) in exps.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match map[i] {
                    Some(j) => e[j] = k,
                    None => {
                        return Err(Error::VarMismatch(format!(
                            "variable `{}` has no image in target ring",
                            self.vars.name(i)
                        )))
                    }
                }
            }
            out.add_term(e, c.clone());
        }
        Ok(out)
    }

    /// Leading term under graded-lex order (total degree, then exponent lex).
    fn leading_grlex(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms
            .iter()
            .max_by_key(|(e, _)| (e.iter().map(|&k| k as u64).sum::<u64>(), (*e).clone()))
    }

    /// Exact quotient `self / divisor`, or `Err(InexactDivision)` when the
    /// divisor does not divide evenly. Long division under graded-lex order;
    /// exactness makes every reduction step land on a divisible leading term.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        assert!(
            same_vars(&self.vars, &divisor.vars),
            "division across different rings"
        );
        let (dm, dc) = match divisor.leading_grlex() {
            Some(t) => (t.0.clone(), t.1.clone()),
            None => return Err(Error::ZeroDenominator),
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.vars);
        while !rem.is_zero() {
            let (rm, rc) = rem.leading_grlex().expect("nonzero remainder");
            if rm.iter().zip(&dm).any(|(a, b)| a < b) {
                return Err(Error::InexactDivision);
            }
            let exps: Vec<u32> = rm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            let c = rc / &dc;
            let step = Self::monomial(&self.vars, exps, c);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Ok(quot)
    }

    /// Parse the canonical text form (also accepts omitted coefficients and
    /// extra whitespace). Terms are joined with `+`; a minus sign binds to
    /// the coefficient, so write `a + -2*b`, not `a - 2*b`.
    pub fn parse(vars: &Arc<VarSet>, input: &str) -> Result<Self> {
        let input = input.trim();
        if input.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Self::zero(vars);
        for piece in input.split('+') {
            let piece = piece.trim();
            if piece.is_empty() {
                return Err(Error::Parse("empty term".into()));
            }
            let mut coeff = Rat::one();
            let mut exps = vec![0u32; vars.len()];
            for factor in piece.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(Error::Parse("empty factor".into()));
                }
                if factor
                    .chars()
                    .next()
                    .map(|ch| ch.is_ascii_digit() || ch == '-')
                    .unwrap_or(false)
                {
                    coeff *= parse_rat(factor)?;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    None => (factor, 1u32),
                    Some((n, e)) => (
                        n.trim(),
                        e.trim()
                            .parse::<u32>()
                            .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?,
                    ),
                };
                let i = vars.index_of(name)?;
                exps[i] += exp;
            }
            out.add_term(exps, coeff);
        }
        Ok(out)
    }

    /// Canonical text form; see the module docs.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Vec<u32>, &Rat)> = self.terms.iter().collect();
        terms.sort_by_key(|(e, _)| (std::cmp::Reverse(self.vars.wdeg(e)), (*e).clone()));
        let rendered: Vec<String> = terms
            .into_iter()
            .map(|(exps, c)| {
                let mut parts = vec![rat_to_string(c)];
                for (i, &e) in exps.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => parts.push(self.vars.name(i).to_string()),
                        _ => parts.push(format!("{}^{}", self.vars.name(i), e)),
                    }
                }
                parts.join("*")
            })
            .collect();
        rendered.join(" + ")
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

fn power_table(point: &[Rat], caps: &[u32]) -> Vec<Vec<Rat>> {
    point
        .iter()
        .zip(caps)
        .map(|(v, &cap)| {
            let mut col = Vec::with_capacity(cap as usize + 1);
            col.push(Rat::one());
            for k in 1..=cap as usize {
                let next = &col[k - 1] * v;
                col.push(next);
            }
            col
        })
        .collect()
}

fn poly_power_table(p: &MultiPoly, cap: u32) -> Vec<MultiPoly> {
    let mut col = Vec::with_capacity(cap as usize + 1);
    col.push(MultiPoly::one(p.vars()));
    for k in 1..=cap as usize {
        let next = &col[k - 1] * p;
        col.push(next);
    }
    col
}

impl std::ops::Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| (e.clone(), -c.clone()))
            .collect();
        MultiPoly {
            vars: Arc::clone(&self.vars),
            terms,
        }
    }
}

impl std::ops::Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(
            same_vars(&self.vars, &rhs.vars),
            "addition across different rings"
        );
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl std::ops::Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(
            same_vars(&self.vars, &rhs.vars),
            "subtraction across different rings"
        );
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl std::ops::Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert!(
            same_vars(&self.vars, &rhs.vars),
            "multiplication across different rings"
        );
        let mut out = MultiPoly::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }
}

/// All exponent vectors `e` with `sum(e[i] * weights[i]) == target`, in
/// lexicographic ascending order. Weights must be positive.
pub fn weighted_monomials(weights: &[i64], target: i64) -> Vec<Vec<u32>> {
    assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
    let mut out = Vec::new();
    let mut current = vec![0u32; weights.len()];
    fn rec(weights: &[i64], target: i64, i: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == weights.len() {
            if target == 0 {
                out.push(current.clone());
            }
            return;
        }
        let mut e = 0u32;
        loop {
            let used = e as i64 * weights[i];
            if used > target {
                break;
            }
            current[i] = e;
            rec(weights, target - used, i + 1, current, out);
            e += 1;
        }
        current[i] = 0;
    }
    if target >= 0 {
        rec(weights, target, 0, &mut current, &mut out);
    }
    out
}
