//! Arbitrary-precision rational scalars and their text form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar used throughout the workspace.
pub type Rat = num_rational::BigRational;

/// Integer as a `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Reduced fraction `n/d` as a `Rat`. Panics on `d == 0`.
pub fn frac(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Canonical text form: `p/q` in lowest terms with the sign on `p`, or just
/// `p` when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q` (optional leading `-` on either part).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
    }
}

/// True when the reduced denominator has no prime factor other than 2 and 3.
///
/// Coefficients of the modular-equation polynomials must live in Z[1/6];
/// this is the check that enforces it.
pub fn denom_is_smooth_2_3(r: &Rat) -> bool {
    let mut d = r.denom().abs();
    let two = BigInt::from(2);
    let three = BigInt::from(3);
    for p in [&two, &three] {
        while (&d % p).is_zero() {
            d /= p;
        }
    }
    d.is_one()
}
