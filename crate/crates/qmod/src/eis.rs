//! Eisenstein expansions and the normalized basis `(E2/12, E4/12, E6/216)`.
//!
//! The division by 12, 12, 216 is what makes the whole crate rational: in
//! this normalization the classical weight-2/4/6 derivation identities hold
//! with coefficients in Q and no transcendental period appears anywhere.

use num_traits::One;
use polycore::{frac, rat, Rat};

use crate::arith::{bernoulli_abs, sigma};
use crate::series::QSeries;

/// The weight-2k Eisenstein series 1 + (-1)^k (4k/B_k) sum sigma_{2k-1}(n) q^n
/// to order N, where B_k is the absolute value of the (2k)-th Bernoulli
/// number. Weights 2, 4, 6 give the classical -24, 240, -504.
pub fn eisenstein(weight: u32, order: usize) -> QSeries {
    assert!(weight >= 2 && weight % 2 == 0, "even weight >= 2 required");
    let k = weight / 2;
    let sign = if k % 2 == 1 { rat(-1) } else { rat(1) };
    let factor = sign * rat(4 * k as i64) / bernoulli_abs(k);
    QSeries::from_fn(order, |n| {
        if n == 0 {
            Rat::one()
        } else {
            &factor * Rat::from_integer(sigma(weight - 1, n as u64))
        }
    })
}

/// The three normalized series at a common order.
#[derive(Debug, Clone)]
pub struct EisensteinBasis {
    pub g1: QSeries,
    pub g2: QSeries,
    pub g3: QSeries,
}

impl EisensteinBasis {
    pub fn order(&self) -> usize {
        self.g1.order()
    }
}

/// (E2/12, E4/12, E6/216) at the given order.
pub fn eisenstein_basis(order: usize) -> EisensteinBasis {
    EisensteinBasis {
        g1: eisenstein(2, order).scale(&frac(1, 12)),
        g2: eisenstein(4, order).scale(&frac(1, 12)),
        g3: eisenstein(6, order).scale(&frac(1, 216)),
    }
}

/// Residuals of the three q d/dq identities the basis satisfies:
///
/// ```text
/// q g1' - (g1^2 - g2/12),  q g2' - (4 g1 g2 - 6 g3),  q g3' - (6 g1 g3 - g2^2/3)
/// ```
///
/// All three must be identically zero to full stored precision; this is the
/// certificate that the normalization constants are right.
pub fn ramanujan_residuals(b: &EisensteinBasis) -> [QSeries; 3] {
    let EisensteinBasis { g1, g2, g3 } = b;
    let r1 = g1.qdq().sub(&g1.mul(g1).sub(&g2.scale(&frac(1, 12))));
    let r2 = g2.qdq().sub(&g1.mul(g2).scale(&rat(4)).sub(&g3.scale(&rat(6))));
    let r3 = g3.qdq().sub(&g1.mul(g3).scale(&rat(6)).sub(&g2.mul(g2).scale(&frac(1, 3))));
    [r1, r2, r3]
}
