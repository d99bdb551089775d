//! Coarse types: the sign of the specialized involution at each fixed point.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rings::RationalPoint;

use super::matrix_algebra::MatrixAlgebra;
use super::structure::{InvolutionType, StructureAlgebra};

/// Point name to `+1` (orthogonal) or `-1` (symplectic).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoarseType(BTreeMap<String, i8>);

impl CoarseType {
    pub fn new() -> CoarseType {
        CoarseType::default()
    }

    pub fn insert(&mut self, point: impl Into<String>, value: i8) -> Result<()> {
        if value != 1 && value != -1 {
            return Err(Error::Constraint(format!("coarse type values are ±1, got {value}")));
        }
        self.0.insert(point.into(), value);
        Ok(())
    }

    pub fn get(&self, point: &str) -> Option<i8> {
        self.0.get(point).copied()
    }

    pub fn values(&self) -> &BTreeMap<String, i8> {
        &self.0
    }

    pub fn is_constant(&self) -> bool {
        let mut it = self.0.values();
        match it.next() {
            Some(first) => it.all(|v| v == first),
            None => true,
        }
    }

    /// Pointwise product over a common set of points.
    pub fn product(&self, other: &CoarseType) -> Result<CoarseType> {
        if self.0.keys().ne(other.0.keys()) {
            return Err(Error::Constraint("coarse types are defined on different points".into()));
        }
        Ok(CoarseType(self.0.iter().map(|(k, v)| (k.clone(), v * other.0[k])).collect()))
    }
}

impl fmt::Display for CoarseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}: {v:+}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Anything that can be pulled back to a `λ`-fixed rational point.
pub trait Specialize {
    fn specialize_at(&self, z: &RationalPoint) -> Result<StructureAlgebra>;
}

impl Specialize for MatrixAlgebra {
    fn specialize_at(&self, z: &RationalPoint) -> Result<StructureAlgebra> {
        self.specialize(z)
    }
}

/// The tensor product of several algebras, specialized factor by factor.
pub struct TensorProduct<'a> {
    factors: Vec<&'a (dyn Specialize + Sync)>,
}

impl<'a> TensorProduct<'a> {
    pub fn new(factors: Vec<&'a (dyn Specialize + Sync)>) -> Result<TensorProduct<'a>> {
        if factors.is_empty() {
            return Err(Error::Input("a tensor product needs at least one factor".into()));
        }
        Ok(TensorProduct { factors })
    }

    pub fn power(factor: &'a (dyn Specialize + Sync), exponent: usize) -> Result<TensorProduct<'a>> {
        TensorProduct::new(vec![factor; exponent])
    }
}

impl Specialize for TensorProduct<'_> {
    fn specialize_at(&self, z: &RationalPoint) -> Result<StructureAlgebra> {
        let mut acc = self.factors[0].specialize_at(z)?;
        for f in &self.factors[1..] {
            acc = acc.tensor(&f.specialize_at(z)?)?;
        }
        Ok(acc)
    }
}

fn sign_at<A: Specialize + ?Sized>(alg: &A, z: &RationalPoint) -> Result<i8> {
    let ty = alg.specialize_at(z)?.classify()?;
    match ty {
        InvolutionType::Unitary => Err(Error::UnitaryAtFixedPoint(z.name().to_string())),
        other => Ok(other.sign().expect("first-kind types carry a sign")),
    }
}

/// Specializes at each point and records `+1` for orthogonal, `-1` for
/// symplectic.
pub fn coarse_type<A: Specialize + ?Sized>(alg: &A, points: &[RationalPoint]) -> Result<CoarseType> {
    let mut out = CoarseType::new();
    for z in points {
        out.insert(z.name(), sign_at(alg, z)?)?;
    }
    Ok(out)
}

/// [`coarse_type`] with the points evaluated in parallel. The result and any
/// reported error do not depend on scheduling.
pub fn coarse_type_parallel<A: Specialize + Sync + ?Sized>(alg: &A, points: &[RationalPoint]) -> Result<CoarseType> {
    let signs: Vec<Result<i8>> = points.par_iter().map(|z| sign_at(alg, z)).collect();
    let mut out = CoarseType::new();
    for (z, s) in points.iter().zip(signs) {
        out.insert(z.name(), s?)?;
    }
    Ok(out)
}
