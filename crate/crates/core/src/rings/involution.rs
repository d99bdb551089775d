//! Ring involutions given by generator images, and rational points.

use std::sync::Arc;

use super::field::{FieldInvolution, Scalar};
use super::poly::Polynomial;
use super::quotient::{QuotientRing, RingElement};
use crate::error::{Error, Result};
use crate::validation::Validation;

/// An order-two ring automorphism: `x_i ↦ images[i]`, with scalars acted on
/// by `field_involution`.
#[derive(Debug, Clone, PartialEq)]
pub struct RingInvolution {
    ring: Arc<QuotientRing>,
    images: Vec<RingElement>,
    field_involution: FieldInvolution,
}

impl RingInvolution {
    /// Builds the map without validating it; see [`RingInvolution::validate`].
    pub fn new_unchecked(
        ring: &Arc<QuotientRing>,
        images: Vec<RingElement>,
        field_involution: FieldInvolution,
    ) -> Result<RingInvolution> {
        if images.len() != ring.nvars() {
            return Err(Error::VariableCount { expected: ring.nvars(), found: images.len() });
        }
        if images.iter().any(|im| im.ring().as_ref() != ring.as_ref()) {
            return Err(Error::RingMismatch);
        }
        if field_involution == FieldInvolution::Conjugation && !ring.field().is_quadratic() {
            return Err(Error::InvalidInvolution(format!(
                "field {} has no nontrivial conjugation",
                ring.field()
            )));
        }
        Ok(RingInvolution { ring: ring.clone(), images, field_involution })
    }

    /// Builds the map and rejects it unless every axiom holds.
    pub fn new(
        ring: &Arc<QuotientRing>,
        images: Vec<RingElement>,
        field_involution: FieldInvolution,
    ) -> Result<RingInvolution> {
        let inv = RingInvolution::new_unchecked(ring, images, field_involution)?;
        let report = inv.validate();
        if !report.passed() {
            return Err(Error::InvalidInvolution(report.failure_summary()));
        }
        Ok(inv)
    }

    pub fn identity(ring: &Arc<QuotientRing>) -> RingInvolution {
        let images = (0..ring.nvars()).map(|i| RingElement::var(ring, i)).collect();
        RingInvolution { ring: ring.clone(), images, field_involution: FieldInvolution::Identity }
    }

    /// The field conjugation acting on coefficients only.
    pub fn conjugation(ring: &Arc<QuotientRing>) -> Result<RingInvolution> {
        let images = (0..ring.nvars()).map(|i| RingElement::var(ring, i)).collect();
        RingInvolution::new(ring, images, FieldInvolution::Conjugation)
    }

    /// `x0 ↦ x0`, `x_i ↦ −x_i` for `i ≥ 1`; a `k`-linear involution of the sphere ring.
    pub fn sphere(ring: &Arc<QuotientRing>) -> RingInvolution {
        let images = (0..ring.nvars())
            .map(|i| {
                let x = RingElement::var(ring, i);
                if i == 0 {
                    x
                } else {
                    x.neg()
                }
            })
            .collect();
        RingInvolution { ring: ring.clone(), images, field_involution: FieldInvolution::Identity }
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn images(&self) -> &[RingElement] {
        &self.images
    }

    pub fn field_involution(&self) -> FieldInvolution {
        self.field_involution
    }

    fn apply_poly(&self, p: &Polynomial) -> Polynomial {
        let images: Vec<Polynomial> = self.images.iter().map(|e| e.poly().clone()).collect();
        p.map_coefficients(self.field_involution).substitute(&images)
    }

    pub fn apply(&self, a: &RingElement) -> Result<RingElement> {
        if a.ring().as_ref() != self.ring.as_ref() {
            return Err(Error::RingMismatch);
        }
        Ok(self.apply_unchecked(a))
    }

    /// [`RingInvolution::apply`] for elements already known to be in the ring.
    pub fn apply_unchecked(&self, a: &RingElement) -> RingElement {
        if let Some(c) = a.as_constant() {
            return RingElement::constant(&self.ring, c.apply(self.field_involution));
        }
        wrap(&self.ring, &self.apply_poly(a.poly()))
    }

    pub fn apply_scalar(&self, s: &Scalar) -> Scalar {
        s.apply(self.field_involution)
    }

    /// Checks `λ² = id` on generators, `λ(relation) ≡ 0` and that the field
    /// involution has order dividing two.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::new();
        let mut bad = Vec::new();
        for (i, im) in self.images.iter().enumerate() {
            let twice = self.apply_unchecked(im);
            if twice != RingElement::var(&self.ring, i) {
                bad.push(format!("λ(λ(x{i})) = {twice}"));
            }
        }
        v.record("involution_squared_is_identity", bad.is_empty(), bad.join("; "));

        match self.ring.relation() {
            Some(rel) => {
                let image = self.ring.reduce(&self.apply_poly(rel));
                let ok = image.is_zero();
                let witness = if ok { String::new() } else { format!("λ(relation) ≡ {image}") };
                v.record("relation_preserved", ok, witness);
            }
            None => v.record("relation_preserved", true, ""),
        }

        let field = self.ring.field();
        let ok = match field.elements() {
            Some(all) => all
                .iter()
                .all(|s| s.apply(self.field_involution).apply(self.field_involution) == *s),
            None => field
                .generator()
                .is_none_or(|t| t.apply(self.field_involution).apply(self.field_involution) == t),
        };
        v.record("field_involution_order_divides_two", ok, "");
        v
    }
}

fn wrap(ring: &Arc<QuotientRing>, p: &Polynomial) -> RingElement {
    super::quotient::normal_form(p, ring).expect("substitution preserves arity")
}

/// A `k`-rational point of a quotient ring.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalPoint {
    name: String,
    values: Vec<Scalar>,
}

impl RationalPoint {
    /// Validates the point against the ring's relation.
    pub fn new(name: impl Into<String>, values: Vec<Scalar>, ring: &QuotientRing) -> Result<RationalPoint> {
        let name = name.into();
        if values.len() != ring.nvars() {
            return Err(Error::VariableCount { expected: ring.nvars(), found: values.len() });
        }
        if values.iter().any(|v| v.field() != ring.field()) {
            return Err(Error::FieldMismatch);
        }
        if let Some(rel) = ring.relation() {
            if !rel.eval(&values).is_zero() {
                return Err(Error::PointNotOnRing(name));
            }
        }
        Ok(RationalPoint { name, values })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[Scalar] {
        &self.values
    }
}

/// The image of `a` under the evaluation homomorphism `R → k` at `z`.
pub fn eval_at_point(a: &RingElement, z: &RationalPoint) -> Result<Scalar> {
    let ring = a.ring();
    if z.values.len() != ring.nvars() {
        return Err(Error::VariableCount { expected: ring.nvars(), found: z.values.len() });
    }
    if let Some(rel) = ring.relation() {
        if !rel.eval(&z.values).is_zero() {
            return Err(Error::PointNotOnRing(z.name.clone()));
        }
    }
    Ok(a.poly().eval(&z.values))
}

/// Whether `λ` fixes `z` and acts trivially on its residue field.
///
/// For a rational point the residue field is `k` itself, so a nontrivial
/// field involution never fixes a point.
pub fn is_fixed_point(z: &RationalPoint, lambda: &RingInvolution) -> bool {
    if lambda.field_involution != FieldInvolution::Identity {
        return false;
    }
    lambda
        .images
        .iter()
        .enumerate()
        .all(|(i, im)| im.poly().eval(&z.values) == z.values[i])
}
