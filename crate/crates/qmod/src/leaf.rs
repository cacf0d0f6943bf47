//! Level-d leaf parametrizations and the tangency certificate.
//!
//! For d >= 2 the four chart coordinates are parametrized by series built
//! from the normalized Eisenstein basis at arguments q and q^d, divided by
//! powers of Y = g1(q) - d g1(q^d). Tangency of the parametrized curve to
//! the quadratic field is then a statement about 2x2 minors of series.

use num_traits::Zero;
use polycore::{rat, Rat};

use crate::eis::eisenstein_basis;
use crate::series::{eval_on_series, QSeries};
use crate::{Error, Result};

/// The four chart series of the level-d leaf, plus the denominator series.
#[derive(Debug, Clone)]
pub struct LeafParam {
    pub d: u64,
    pub x2: QSeries,
    pub x3: QSeries,
    pub y2: QSeries,
    pub y3: QSeries,
    /// Y = g1(q) - d g1(q^d); constant term (1-d)/12.
    pub y1series: QSeries,
}

impl LeafParam {
    pub fn order(&self) -> usize {
        self.x2.order()
    }

    /// Series in the chart-ring variable order (x2, x3, y2, y3).
    pub fn chart_series(&self) -> [QSeries; 4] {
        [
            self.x2.clone(),
            self.x3.clone(),
            self.y2.clone(),
            self.y3.clone(),
        ]
    }
}

/// Parametrize the level-d leaf to the given order. d = 1 is refused: the
/// denominator series Y vanishes identically there.
pub fn leaf_param(d: u64, order: usize) -> Result<LeafParam> {
    if d <= 1 {
        return Err(Error::LevelTooSmall(d));
    }
    let b = eisenstein_basis(order);
    let g1d = b.g1.spread(d, order)?;
    let g2d = b.g2.spread(d, order)?;
    let g3d = b.g3.spread(d, order)?;
    let y = b.g1.sub(&g1d.scale(&rat(d as i64)));
    debug_assert!(!y.coeff(0).is_zero());
    let y2pow = y.mul(&y);
    let y3pow = y2pow.mul(&y);
    let d2 = rat((d * d) as i64);
    let d3 = rat((d * d * d) as i64);
    Ok(LeafParam {
        d,
        x2: b.g2.div(&y2pow)?,
        x3: b.g3.div(&y3pow)?,
        y2: g2d.scale(&d2).div(&y2pow)?,
        y3: g3d.scale(&-d3).div(&y3pow)?,
        y1series: y,
    })
}

/// Closed-form constant terms of the four leaf series:
/// `12/(1-d)^2, 8/(1-d)^3, 12d^2/(1-d)^2, -8d^3/(1-d)^3`.
pub fn leaf_cusp_values(d: u64) -> [Rat; 4] {
    assert!(d >= 2);
    let one_minus = rat(1 - d as i64);
    let sq = &one_minus * &one_minus;
    let cu = &sq * &one_minus;
    [
        rat(12) / &sq,
        rat(8) / &cu,
        rat((12 * d * d) as i64) / &sq,
        rat(-8 * (d * d * d) as i64) / &cu,
    ]
}

/// The six 2x2 minors of the matrix whose rows are the quadratic field
/// evaluated on the leaf series and the q d/dq derivative of those series.
/// Each minor is returned at order N-2; tangency means they all vanish.
pub fn tangency_minors(d: u64, order: usize) -> Result<Vec<QSeries>> {
    let lp = leaf_param(d, order)?;
    let args = lp.chart_series();
    let v = vfield::modular_field_v();
    let mut along_field = Vec::with_capacity(4);
    for comp in v.components() {
        along_field.push(eval_on_series(comp, &args)?);
    }
    let along_param: Vec<QSeries> = args.iter().map(QSeries::qdq).collect();
    let out_order = order.saturating_sub(2);
    let mut minors = Vec::with_capacity(6);
    for j in 0..4 {
        for k in (j + 1)..4 {
            let m = along_field[j]
                .mul(&along_param[k])
                .sub(&along_field[k].mul(&along_param[j]));
            minors.push(m.trim(out_order));
        }
    }
    Ok(minors)
}
