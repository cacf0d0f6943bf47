//! Named variables with integer weights.
//!
//! A `VarSet` fixes the ambient polynomial ring: the ordered list of variable
//! names and the weight each one carries. Polynomials hold an `Arc<VarSet>`
//! so ring membership is a pointer-or-value equality check, not a convention.

use std::sync::Arc;

use crate::{Error, Result};

/// Ordered, weighted variable list shared by all polynomials of one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
    weights: Vec<i64>,
}

impl VarSet {
    /// Build a variable set; names must be distinct and nonempty.
    pub fn new(pairs: &[(&str, i64)]) -> Arc<Self> {
        let names: Vec<String> = pairs.iter().map(|(n, _)| n.to_string()).collect();
        let weights: Vec<i64> = pairs.iter().map(|(_, w)| *w).collect();
        for (i, n) in names.iter().enumerate() {
            assert!(!n.is_empty(), "empty variable name");
            assert!(
                !names[..i].contains(n),
                "duplicate variable name `{n}`"
            );
        }
        Arc::new(VarSet { names, weights })
    }

    /// All variables with weight 1.
    pub fn unweighted(names: &[&str]) -> Arc<Self> {
        let pairs: Vec<(&str, i64)> = names.iter().map(|n| (*n, 1)).collect();
        Self::new(&pairs)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn weight(&self, i: usize) -> i64 {
        self.weights[i]
    }

    /// Index of a variable by name.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Weighted degree of an exponent vector.
    pub fn wdeg(&self, exps: &[u32]) -> i64 {
        debug_assert_eq!(exps.len(), self.weights.len());
        exps.iter()
            .zip(&self.weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }
}

/// Cheap same-ring check: pointer equality first, then structural equality.
pub fn same_vars(a: &Arc<VarSet>, b: &Arc<VarSet>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}
