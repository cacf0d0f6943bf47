//! The derivation type and its calculus.

use std::sync::Arc;

use num_traits::Zero;
use polycore::{char_poly, ExactMatrix, MultiPoly, Rat, RatMatrix, RationalFunction, VarSet};

use crate::{Error, Result};

/// A polynomial vector field: one component per variable of its ring,
/// acting on polynomials as the derivation `p -> sum_i comp_i * dp/dx_i`.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorField {
    vars: Arc<VarSet>,
    components: Vec<MultiPoly>,
}

impl VectorField {
    pub fn new(vars: &Arc<VarSet>, components: Vec<MultiPoly>) -> Result<Self> {
        if components.len() != vars.len() {
            return Err(Error::VarMismatch(format!(
                "{} components for {} variables",
                components.len(),
                vars.len()
            )));
        }
        for c in &components {
            if !polycore::vars::same_vars(c.vars(), vars) {
                return Err(Error::VarMismatch(
                    "component over a different ring".into(),
                ));
            }
        }
        Ok(VectorField {
            vars: Arc::clone(vars),
            components,
        })
    }

    /// Build from `(variable, component-source)` pairs, parsing each
    /// component in the given ring. Unlisted variables get component 0.
    pub fn parse(vars: &Arc<VarSet>, pairs: &[(&str, &str)]) -> Result<Self> {
        let mut components = vec![MultiPoly::zero(vars); vars.len()];
        for (name, src) in pairs {
            let i = vars.index_of(name).map_err(polycore::Error::from)?;
            components[i] = MultiPoly::parse(vars, src)?;
        }
        Self::new(vars, components)
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &MultiPoly {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(MultiPoly::is_zero)
    }

    /// Apply the derivation once.
    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly> {
        if !polycore::vars::same_vars(p.vars(), &self.vars) {
            return Err(Error::VarMismatch(
                "polynomial over a different ring".into(),
            ));
        }
        let mut out = MultiPoly::zero(&self.vars);
        for (i, comp) in self.components.iter().enumerate() {
            if comp.is_zero() {
                continue;
            }
            out = &out + &(comp * &p.partial(i));
        }
        Ok(out)
    }

    /// Apply the derivation `r` times; `r = 0` returns `p` unchanged.
    pub fn iterate(&self, p: &MultiPoly, r: u32) -> Result<MultiPoly> {
        let mut acc = p.clone();
        for _ in 0..r {
            acc = self.apply(&acc)?;
        }
        Ok(acc)
    }

    /// Apply the derivation to a rational function by the quotient rule.
    pub fn apply_rational(&self, rf: &RationalFunction) -> Result<RationalFunction> {
        let n = rf.numer();
        let d = rf.denom();
        let num = &(&self.apply(n)? * d) - &(n * &self.apply(d)?);
        let den = d * d;
        Ok(RationalFunction::new(num, den)?)
    }

    /// Lie bracket `[self, other]`, the commutator of the derivations.
    pub fn lie_bracket(&self, other: &VectorField) -> Result<VectorField> {
        if !polycore::vars::same_vars(&self.vars, &other.vars) {
            return Err(Error::VarMismatch("bracket across different rings".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(vi, wi)| Ok(&self.apply(wi)? - &other.apply(vi)?))
            .collect::<Result<Vec<_>>>()?;
        VectorField::new(&self.vars, components)
    }

    pub fn scale(&self, c: &Rat) -> VectorField {
        VectorField {
            vars: Arc::clone(&self.vars),
            components: self.components.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn add(&self, other: &VectorField) -> Result<VectorField> {
        if !polycore::vars::same_vars(&self.vars, &other.vars) {
            return Err(Error::VarMismatch("sum across different rings".into()));
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a + b)
            .collect();
        VectorField::new(&self.vars, components)
    }

    pub fn neg(&self) -> VectorField {
        self.scale(&-Rat::from_integer(1.into()))
    }

    /// Evaluate all components at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Vec<Rat> {
        self.components.iter().map(|p| p.eval_rat(point)).collect()
    }

    /// True when every component vanishes at the point.
    pub fn vanishes_at(&self, point: &[Rat]) -> bool {
        self.eval(point).iter().all(Zero::is_zero)
    }

    /// Jacobian matrix `d comp_i / d x_j` at a singular point. Errors when
    /// the field does not vanish there: the linear part is only
    /// basis-independent at a singularity.
    pub fn linear_part(&self, at: &[Rat]) -> Result<RatMatrix> {
        if !self.vanishes_at(at) {
            return Err(Error::NotSingular);
        }
        let n = self.vars.len();
        Ok(ExactMatrix::from_fn(n, n, |i, j| {
            self.components[i].partial(j).eval_rat(at)
        }))
    }

    /// Characteristic polynomial of the linear part at a singular point.
    pub fn linear_part_char_poly(&self, at: &[Rat]) -> Result<MultiPoly> {
        Ok(char_poly(&self.linear_part(at)?)?)
    }

    /// Cofactor `Q` with `V(P) = Q*P`, or an error when `P` is not
    /// invariant. The zero of an invariant polynomial is tangent to the field.
    pub fn invariance_cofactor(&self, p: &MultiPoly) -> Result<MultiPoly> {
        let image = self.apply(p)?;
        if image.is_zero() {
            return Ok(MultiPoly::zero(&self.vars));
        }
        image.div_exact(p).map_err(|_| Error::NotInvariant)
    }
}
