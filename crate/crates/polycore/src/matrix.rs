//! Exact linear algebra: fraction-free determinants over any exact ring,
//! plus rational nullspace, rank, and characteristic polynomial.

use num_traits::{One, Signed, Zero};

use crate::poly::MultiPoly;
use crate::rat::Rat;
use crate::vars::VarSet;
use crate::{Error, Result};

/// Operations Bareiss elimination needs from a coefficient ring.
pub trait Exact: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Exact quotient; `None` when `other` does not divide `self`.
    fn div_exact(&self, other: &Self) -> Option<Self>;
}

impl Exact for Rat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            None
        } else {
            Some(self / other)
        }
    }
}

impl Exact for MultiPoly {
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_exact(&self, other: &Self) -> Option<Self> {
        MultiPoly::div_exact(self, other).ok()
    }
}

/// Dense row-major matrix over an exact ring.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = ExactMatrix<Rat>;
pub type PolyMatrix = ExactMatrix<MultiPoly>;

impl<T: Clone> ExactMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map(Vec::len).unwrap_or(0);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(ExactMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        ExactMatrix::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> ExactMatrix<U> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|t| f(t)).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Fraction-free (Bareiss) determinant. Every intermediate division is exact
/// by Sylvester's identity, so this works over polynomial rings too.
pub fn bareiss_det<T: Exact>(m: &ExactMatrix<T>) -> Result<T> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Err(Error::Shape("empty matrix".into()));
    }
    let zero = m.at(0, 0).sub(m.at(0, 0));
    if n == 1 {
        return Ok(m.at(0, 0).clone());
    }
    let mut a = m.clone();
    let mut negate = false;
    let mut prev: Option<T> = None;
    for k in 0..n - 1 {
        if a.at(k, k).is_zero() {
            match (k + 1..n).find(|&i| !a.at(i, k).is_zero()) {
                Some(i) => {
                    a.swap_rows(k, i);
                    negate = !negate;
                }
                None => return Ok(zero),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a.at(i, j).mul(a.at(k, k)).sub(&a.at(i, k).mul(a.at(k, j)));
                let v = match &prev {
                    None => num,
                    Some(p) => num.div_exact(p).ok_or(Error::InexactDivision)?,
                };
                a.set(i, j, v);
            }
            a.set(i, k, zero.clone());
        }
        prev = Some(a.at(k, k).clone());
    }
    let det = a.at(n - 1, n - 1).clone();
    Ok(if negate { det.neg() } else { det })
}

/// Determinant by cofactor expansion along the first row. Exponential; kept
/// as an independent cross-check for small matrices.
pub fn cofactor_det<T: Exact>(m: &ExactMatrix<T>) -> Result<T> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let n = m.rows;
    if n == 0 {
        return Err(Error::Shape("empty matrix".into()));
    }
    if n == 1 {
        return Ok(m.at(0, 0).clone());
    }
    let mut acc: Option<T> = None;
    for c in 0..n {
        if m.at(0, c).is_zero() {
            continue;
        }
        let minor = ExactMatrix::from_fn(n - 1, n - 1, |i, j| {
            m.at(i + 1, if j < c { j } else { j + 1 }).clone()
        });
        let mut term = m.at(0, c).mul(&cofactor_det(&minor)?);
        if c % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    Ok(acc.unwrap_or_else(|| m.at(0, 0).sub(m.at(0, 0))))
}

/// Reduced row echelon form in place; returns pivot column indices.
fn rref(a: &mut RatMatrix) -> Vec<usize> {
    let (nr, nc) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        // Partial pivot by magnitude is pointless over exact rationals, but
        // preferring a nonzero entry with small numerator/denominator keeps
        // intermediate growth down; simplest is the first nonzero.
        let Some(p) = (r..nr).find(|&i| !Zero::is_zero(a.at(i, c))) else {
            continue;
        };
        a.swap_rows(r, p);
        let inv = {
            let v = a.at(r, c).clone();
            Rat::one() / v
        };
        for j in c..nc {
            let v = a.at(r, j) * &inv;
            a.set(r, j, v);
        }
        for i in 0..nr {
            if i == r || Zero::is_zero(a.at(i, c)) {
                continue;
            }
            let f = a.at(i, c).clone();
            for j in c..nc {
                let v = a.at(i, j) - &(&f * a.at(r, j));
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank over the rationals.
pub fn rank_rational(m: &RatMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of the right nullspace `{k : M k = 0}`, one vector per free column.
///
/// Each basis vector is scaled to integer entries with content 1 and its
/// first nonzero entry positive, so the output is canonical: for
/// `[[1,1],[2,2]]` the basis is `[(1, -1)]`.
pub fn nullspace_rational(m: &RatMatrix) -> Vec<Vec<Rat>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let nc = m.cols;
    let free: Vec<usize> = (0..nc).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![Rat::zero(); nc];
        v[fc] = Rat::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = -a.at(r, fc).clone();
        }
        basis.push(normalize_vector(v));
    }
    basis
}

/// Scale to primitive integer entries with positive leading sign.
fn normalize_vector(v: Vec<Rat>) -> Vec<Rat> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * &lcm / x.denom()).collect();
    let mut gcd = BigInt::zero();
    for i in &ints {
        gcd = gcd.gcd(i);
    }
    if gcd.is_zero() {
        return v;
    }
    let mut scaled: Vec<BigInt> = ints.into_iter().map(|i| i / &gcd).collect();
    if let Some(first) = scaled.iter().find(|i| !i.is_zero()) {
        if first.is_negative() {
            for s in &mut scaled {
                *s = -s.clone();
            }
        }
    }
    scaled.into_iter().map(Rat::from_integer).collect()
}

/// Characteristic polynomial `det(lambda*I - M)` in the variable `lam`,
/// computed fraction-free over the univariate polynomial ring.
pub fn char_poly(m: &RatMatrix) -> Result<MultiPoly> {
    if m.rows != m.cols {
        return Err(Error::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    let ring = VarSet::new(&[("lam", 1)]);
    let lam = MultiPoly::var(&ring, "lam").expect("lam in ring");
    let pm = ExactMatrix::from_fn(m.rows, m.cols, |r, c| {
        let a = MultiPoly::constant(&ring, -m.at(r, c).clone());
        if r == c {
            &lam + &a
        } else {
            a
        }
    });
    bareiss_det(&pm)
}

/// Matrix product over the rationals.
pub fn matmul(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    if a.cols != b.rows {
        return Err(Error::Shape(format!(
            "{}x{} times {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(ExactMatrix::from_fn(a.rows, b.cols, |r, c| {
        let mut acc = Rat::zero();
        for k in 0..a.cols {
            acc += a.at(r, k) * b.at(k, c);
        }
        acc
    }))
}

/// Convenience: build a rational matrix from integer literals.
pub fn rat_matrix(rows: &[&[i64]]) -> RatMatrix {
    ExactMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&x| crate::rat::rat(x)).collect())
            .collect(),
    )
    .expect("literal rows are rectangular")
}

/// Apply a rational matrix to a vector.
pub fn matvec(a: &RatMatrix, v: &[Rat]) -> Result<Vec<Rat>> {
    if a.cols != v.len() {
        return Err(Error::Shape(format!(
            "{}x{} times vector of length {}",
            a.rows,
            a.cols,
            v.len()
        )));
    }
    Ok((0..a.rows)
        .map(|r| {
            let mut acc = Rat::zero();
            for c in 0..a.cols {
                acc += a.at(r, c) * &v[c];
            }
            acc
        })
        .collect())
}
