//! Projective modules presented by idempotent matrices.
//!
//! A square idempotent `E` over `R` presents the module `M = ker E = im(I − E)`.
//! Functionals on `M` are rows; two rows agree on `M` exactly when they agree
//! after right multiplication by `I − E`, which gives canonical representatives.

use super::element::Element;
use super::matrix::Matrix;
use crate::error::{Error, Result};
use crate::rings::{RationalPoint, RingElement};

#[derive(Debug, Clone)]
pub struct IdempotentModule {
    idempotent: Matrix<RingElement>,
    complement: Matrix<RingElement>,
    /// `(point name, rank of I − E(z))` for each supplied point.
    ranks: Vec<(String, usize)>,
}

/// Validates `E² = E` and records the pointwise rank of `I − E`.
pub fn module_from_idempotent(e: &Matrix<RingElement>, points: &[RationalPoint]) -> Result<IdempotentModule> {
    if !e.is_square() {
        return Err(Error::Shape("idempotent must be square".into()));
    }
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let one = RingElement::one(e.ring());
    let complement = Matrix::identity(e.rows(), &one).sub(e)?;
    let mut ranks = Vec::with_capacity(points.len());
    for z in points {
        ranks.push((z.name().to_string(), complement.eval_at(z)?.rank()));
    }
    if let Some((_, first)) = ranks.first() {
        if ranks.iter().any(|(_, r)| r != first) {
            let listing = ranks.iter().map(|(n, r)| format!("{n}: {r}")).collect::<Vec<_>>().join(", ");
            return Err(Error::RankVaries(listing));
        }
    }
    Ok(IdempotentModule { idempotent: e.clone(), complement, ranks })
}

impl IdempotentModule {
    pub fn idempotent(&self) -> &Matrix<RingElement> {
        &self.idempotent
    }

    /// `I − E`, whose image is the module.
    pub fn complement(&self) -> &Matrix<RingElement> {
        &self.complement
    }

    pub fn ranks(&self) -> &[(String, usize)] {
        &self.ranks
    }

    /// The common rank at the supplied points, if any were supplied.
    pub fn rank(&self) -> Option<usize> {
        self.ranks.first().map(|(_, r)| *r)
    }

    /// Whether the column `m` lies in `ker E`.
    pub fn contains(&self, m: &Matrix<RingElement>) -> Result<bool> {
        Ok(self.idempotent.mul(m)?.is_zero())
    }

    /// Projects an arbitrary column onto the module: `(I − E)·v`.
    pub fn project(&self, v: &Matrix<RingElement>) -> Result<Matrix<RingElement>> {
        self.complement.mul(v)
    }

    pub fn canonicalize(&self, row: &Matrix<RingElement>) -> Result<Matrix<RingElement>> {
        dual_canonicalize(row, &self.idempotent)
    }
}

/// Canonical representative `v·(I − E)` of the functional `v` restricted to `ker E`.
pub fn dual_canonicalize<T: Element>(v: &Matrix<T>, e: &Matrix<T>) -> Result<Matrix<T>> {
    if v.rows() != 1 || v.cols() != e.rows() || !e.is_square() {
        return Err(Error::Shape(format!(
            "row of length {} against a {}×{} idempotent",
            v.cols(),
            e.rows(),
            e.cols()
        )));
    }
    let one = e.get(0, 0).one_like();
    let complement = Matrix::identity(e.rows(), &one).sub(e)?;
    v.mul(&complement)
}
