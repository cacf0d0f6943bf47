//! Quotient charts for doubled vector fields.
//!
//! The construction: run two copies of a 3-variable field side by side on a
//! `(t, s)` block, differentiate each chart function along the doubled
//! field, divide by the chart's divisor, and read the result off on a slice
//! of the group action. The slice shortcut is only trusted after an exact
//! identity check back in the source variables, so a successful `self_join`
//! is also a proof that the chart really is invariant.

use std::sync::Arc;

use polycore::{MultiPoly, Rat, RationalFunction, VarSet};

use crate::field::VectorField;
use crate::{Error, Result};

/// A chart for the quotient of a doubled 3-variable system.
///
/// `source` lists the doubled variables: three `t_block` names, three
/// `s_block` names, and optionally trailing parameter variables that pass
/// through the chart unchanged. `images[j]` expresses target variable `j` in
/// source variables; `inverse[i]` expresses source variable `i` in target
/// variables, valid on the slice; `slice` pins the section of the action.
#[derive(Debug, Clone)]
pub struct ChartSpec {
    pub source: Arc<VarSet>,
    pub target: Arc<VarSet>,
    pub t_block: [String; 3],
    pub s_block: [String; 3],
    pub images: Vec<RationalFunction>,
    pub divisor: MultiPoly,
    pub slice: Vec<(String, Rat)>,
    pub inverse: Vec<MultiPoly>,
}

impl ChartSpec {
    /// Check internal consistency; every `self_join` call runs this first.
    ///
    /// Enforced: blocks and parameters tile the source ring; the inverse
    /// respects the slice; chart-then-inverse is the identity on target
    /// variables; the divisor does not vanish on the slice.
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::ChartInvalid(msg));
        if self.images.len() != self.target.len() {
            return fail("one image per target variable required".into());
        }
        if self.inverse.len() != self.source.len() {
            return fail("one inverse entry per source variable required".into());
        }
        for name in self.t_block.iter().chain(&self.s_block) {
            if self.source.index_of(name).is_err() {
                return fail(format!("block variable `{name}` not in source ring"));
            }
        }
        for rf in &self.images {
            if !polycore::vars::same_vars(rf.vars(), &self.source) {
                return fail("image not over the source ring".into());
            }
        }
        for p in &self.inverse {
            if !polycore::vars::same_vars(p.vars(), &self.target) {
                return fail("inverse entry not over the target ring".into());
            }
        }
        // The inverse must commit to the slice values on sliced variables.
        for (name, value) in &self.slice {
            let i = self
                .source
                .index_of(name)
                .map_err(|_| Error::ChartInvalid(format!("sliced variable `{name}` unknown")))?;
            let inv = &self.inverse[i];
            if !(inv.is_constant() && inv.constant_part() == *value) {
                return fail(format!(
                    "inverse entry for sliced `{name}` must be the constant {value}"
                ));
            }
        }
        // Chart composed with inverse is the identity on the target ring.
        let inverse_imgs: Vec<RationalFunction> = self
            .inverse
            .iter()
            .map(|p| RationalFunction::from_poly(p.clone()))
            .collect();
        for (j, rf) in self.images.iter().enumerate() {
            let num = rf.numer().substitute(&inverse_imgs)?;
            let den = rf.denom().substitute(&inverse_imgs)?;
            if den.is_zero() {
                return fail(format!(
                    "image denominator for `{}` vanishes on the slice",
                    self.target.name(j)
                ));
            }
            let composed = &num / &den;
            let expected = RationalFunction::var(&self.target, self.target.name(j))?;
            if composed != expected {
                return fail(format!(
                    "chart then inverse is not the identity on `{}`",
                    self.target.name(j)
                ));
            }
        }
        // The divided-out factor must be invertible on the slice.
        let divisor_on_slice = self
            .divisor
            .subst_polys(&self.inverse)
            .map_err(Error::Core)?;
        if divisor_on_slice.is_zero() {
            return fail("divisor vanishes on the slice".into());
        }
        Ok(())
    }

    /// Double a 3-variable field onto the source ring: the t-block carries
    /// one copy, the s-block the other, parameters get zero components.
    pub fn doubled_field(&self, base: &VectorField) -> Result<VectorField> {
        let base_names = base.vars().names();
        if base.components().iter().enumerate().any(|(i, c)| {
            !c.is_zero() && i >= 3 // parameters must be inert in the base field
        }) {
            return Err(Error::VarMismatch(
                "base field must only move its first three variables".into(),
            ));
        }
        if base_names.len() < 3 {
            return Err(Error::VarMismatch(
                "base field needs at least three variables".into(),
            ));
        }
        // Parameters of the base ring (anything after the first three
        // variables) must appear verbatim in the source ring.
        let mut components = vec![MultiPoly::zero(&self.source); self.source.len()];
        for copy in 0..2 {
            let block = if copy == 0 { &self.t_block } else { &self.s_block };
            let rename = |n: &str| -> Result<String> {
                if let Some(k) = base_names[..3].iter().position(|bn| bn == n) {
                    Ok(block[k].clone())
                } else {
                    Ok(n.to_string()) // parameter: same name in source ring
                }
            };
            for (i, comp) in base.components().iter().take(3).enumerate() {
                let tgt = self.source.index_of(&block[i])?;
                components[tgt] = transplant(comp, &self.source, &rename)?;
            }
        }
        VectorField::new(&self.source, components)
    }
}

/// Rewrite `p` over `target`, sending each variable through `rename`.
pub fn transplant(
    p: &MultiPoly,
    target: &Arc<VarSet>,
    rename: &dyn Fn(&str) -> Result<String>,
) -> Result<MultiPoly> {
    let src = p.vars();
    let mut index_map = Vec::with_capacity(src.len());
    for name in src.names() {
        index_map.push(target.index_of(&rename(name)?)?);
    }
    let mut out = Vec::new();
    for (exps, c) in p.terms() {
        let mut e = vec![0u32; target.len()];
        for (i, &k) in exps.iter().enumerate() {
            e[index_map[i]] += k;
        }
        out.push((e, c.clone()));
    }
    Ok(MultiPoly::from_terms(target, out))
}

/// Push a doubled field through a chart.
///
/// For each target variable with chart image `phi`, computes
/// `W(phi) / divisor` in the source ring, reads it off on the slice via the
/// inverse map, and demands (1) the slice answer is a polynomial and (2) the
/// answer composed with the chart equals the pre-slice expression as an
/// exact rational identity in the source variables. Anything less than both
/// is an error, not a warning.
pub fn self_join(base: &VectorField, chart: &ChartSpec) -> Result<VectorField> {
    chart.validate()?;
    let doubled = chart.doubled_field(base)?;
    let divisor_rf = RationalFunction::from_poly(chart.divisor.clone());
    let chart_imgs = &chart.images;
    let inverse_imgs: Vec<RationalFunction> = chart
        .inverse
        .iter()
        .map(|p| RationalFunction::from_poly(p.clone()))
        .collect();

    let mut components = Vec::with_capacity(chart.target.len());
    for (j, phi) in chart_imgs.iter().enumerate() {
        let name = chart.target.name(j).to_string();
        // Derivative along the doubled field, then the chart's division.
        let pre_slice = &doubled.apply_rational(phi)? / &divisor_rf;
        // Read off on the slice.
        let num = pre_slice.numer().substitute(&inverse_imgs)?;
        let den = pre_slice.denom().substitute(&inverse_imgs)?;
        if den.is_zero() {
            return Err(Error::NotDivisorDivisible(name));
        }
        let on_slice = &num / &den;
        let component = on_slice
            .to_polynomial()
            .map_err(|_| Error::NotDivisorDivisible(name.clone()))?;
        // Well-definedness: the slice answer must pull back to the
        // pre-slice expression identically.
        let pulled_num = component.substitute(chart_imgs)?;
        if pulled_num != pre_slice {
            return Err(Error::ChartNotInvariant(name));
        }
        components.push(component);
    }
    VectorField::new(&chart.target, components)
}
