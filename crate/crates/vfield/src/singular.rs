//! The rational curve of singularities of the quadratic chart field.
//!
//! The curve is the image of `[t:s] -> [3t^2 : t^3 : 3s^2 : s^3 : (s+t)/2]`
//! in the weight-(2,3,2,3,1) projective space; the working affine chart is
//! the last coordinate set to 1, so a parameter pair lands at
//! `(12t^2/(s+t)^2, 8t^3/(s+t)^3, 12s^2/(s+t)^2, 8s^3/(s+t)^3)` unless
//! `s + t = 0`, which is the point at infinity of the chart.

use num_traits::Zero;
use polycore::Rat;

use crate::{Error, Result};

/// Where a parameter pair lands: in the affine chart or at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurvePoint {
    Affine([Rat; 4]),
    AtInfinity,
}

/// Evaluate the curve parametrization at `[t:s]`, converting to the affine
/// chart by dividing each weight-w coordinate by `((s+t)/2)^w`.
pub fn singular_curve_point(t: &Rat, s: &Rat) -> Result<CurvePoint> {
    if t.is_zero() && s.is_zero() {
        return Err(Error::VarMismatch(
            "curve parameter [0:0] is not a projective point".into(),
        ));
    }
    let half_sum = (s + t) / Rat::from_integer(2.into());
    if half_sum.is_zero() {
        return Ok(CurvePoint::AtInfinity);
    }
    let w2 = &half_sum * &half_sum;
    let w3 = &w2 * &half_sum;
    let three = Rat::from_integer(3.into());
    Ok(CurvePoint::Affine([
        &three * t * t / &w2,
        t * t * t / &w3,
        &three * s * s / &w2,
        s * s * s / &w3,
    ]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use polycore::rat;

    #[test]
    fn unit_parameters_give_integer_point() {
        let p = singular_curve_point(&rat(1), &rat(1)).unwrap();
        assert_eq!(
            p,
            CurvePoint::Affine([rat(3), rat(1), rat(3), rat(1)])
        );
    }

    #[test]
    fn antipodal_parameters_go_to_infinity() {
        assert_eq!(
            singular_curve_point(&rat(1), &rat(-1)).unwrap(),
            CurvePoint::AtInfinity
        );
    }

    #[test]
    fn origin_rejected() {
        assert!(singular_curve_point(&rat(0), &rat(0)).is_err());
    }

    #[test]
    fn two_minus_one_example() {
        let p = singular_curve_point(&rat(2), &rat(-1)).unwrap();
        assert_eq!(
            p,
            CurvePoint::Affine([rat(48), rat(64), rat(12), rat(-8)])
        );
    }
}
