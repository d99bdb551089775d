use std::fmt;

use crate::rings::{RingElement, Scalar};

/// Commutative ring arithmetic needed by the dense matrix routines.
///
/// Elements carry their own ring context, so constants are produced from an
/// existing element (`zero_like`, `one_like`).
pub trait Element: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
}

pub trait FieldElement: Element {
    fn inverse(&self) -> Option<Self>;
}

impl Element for Scalar {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}

impl FieldElement for Scalar {
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
}

impl Element for RingElement {
    fn zero_like(&self) -> Self {
        RingElement::zero(self.ring())
    }
    fn one_like(&self) -> Self {
        RingElement::one(self.ring())
    }
    fn is_zero(&self) -> bool {
        RingElement::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
}
