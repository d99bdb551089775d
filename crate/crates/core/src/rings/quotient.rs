//! Quotient rings `k[x0..x_{n-1}] / (relation)` with canonical normal forms.
//!
//! The relation's graded-lex leading monomial must be a pure power `x_j^e`.
//! A single polynomial is a Gröbner basis of the ideal it generates, so
//! rewriting `x_j^e` by the relation's tail is confluent and the remainder
//! is a canonical representative.

use std::fmt;
use std::sync::Arc;

use rand::Rng;

use super::field::{Field, Scalar};
use super::parse::parse_polynomial;
use super::poly::{default_names, Monomial, Polynomial};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
struct Rewrite {
    head: Monomial,
    /// `head ≡ tail` modulo the relation.
    tail: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientRing {
    field: Field,
    names: Vec<String>,
    relation: Option<Polynomial>,
    rewrite: Option<Rewrite>,
}

impl QuotientRing {
    /// The polynomial ring itself (no relation). With zero variables this is
    /// the base field.
    pub fn polynomial_ring(field: Field, nvars: usize) -> Arc<QuotientRing> {
        Arc::new(QuotientRing { field, names: default_names(nvars), relation: None, rewrite: None })
    }

    pub fn new(field: Field, nvars: usize, relation: Polynomial) -> Result<Arc<QuotientRing>> {
        if relation.nvars() != nvars {
            return Err(Error::VariableCount { expected: nvars, found: relation.nvars() });
        }
        if relation.field() != field {
            return Err(Error::FieldMismatch);
        }
        let (lm, lc) = relation
            .leading_term()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or_else(|| Error::InvalidRelation("relation is zero".into()))?;
        if lm.as_pure_power().is_none() {
            return Err(Error::InvalidRelation(format!(
                "leading monomial of `{relation}` is not a pure power of one variable"
            )));
        }
        let lc_inv = lc.inv().expect("leading coefficient is nonzero");
        let mut tail = relation.clone();
        tail.pop_leading();
        let tail = tail.scale(&lc_inv.neg());
        Ok(Arc::new(QuotientRing {
            field,
            names: default_names(nvars),
            relation: Some(relation),
            rewrite: Some(Rewrite { head: lm, tail }),
        }))
    }

    pub fn parse(field: Field, nvars: usize, relation: &str) -> Result<Arc<QuotientRing>> {
        QuotientRing::new(field, nvars, parse_polynomial(relation, field, nvars)?)
    }

    /// `R_n = k[x0..xn] / (1 − Σ x_i²)`, the coordinate ring of the n-sphere.
    pub fn sphere(field: Field, n: usize) -> Arc<QuotientRing> {
        let nvars = n + 1;
        let mut rel = Polynomial::constant(field.one(), nvars);
        for i in 0..nvars {
            let x = Polynomial::var(field, nvars, i);
            rel = rel.sub(&x.mul(&x));
        }
        QuotientRing::new(field, nvars, rel).expect("sphere relation has leading monomial x0^2")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn relation(&self) -> Option<&Polynomial> {
        self.relation.as_ref()
    }

    /// The rewrite head (leading monomial of the relation).
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.rewrite.as_ref().map(|r| &r.head)
    }

    /// Reduces `p` modulo the relation. Terms are processed from the largest
    /// down; every rewrite produces strictly smaller monomials, so each
    /// monomial is settled exactly once.
    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        let Some(rw) = &self.rewrite else {
            return p.clone();
        };
        let mut work = p.clone();
        let mut out = Polynomial::zero(self.field, self.nvars());
        while let Some((m, c)) = work.pop_leading() {
            if rw.head.divides(&m) {
                let q = rw.head.quotient_of(&m);
                for (tm, tc) in rw.tail.terms() {
                    work.add_term(q.mul(tm), c.mul(tc));
                }
            } else {
                out.push_fresh(m, c);
            }
        }
        out
    }

    pub fn is_reduced(&self, p: &Polynomial) -> bool {
        match &self.rewrite {
            None => true,
            Some(rw) => p.terms().all(|(m, _)| !rw.head.divides(m)),
        }
    }
}

/// Canonical representative of `p` in `ring`.
pub fn normal_form(p: &Polynomial, ring: &Arc<QuotientRing>) -> Result<RingElement> {
    if p.nvars() != ring.nvars() {
        return Err(Error::VariableCount { expected: ring.nvars(), found: p.nvars() });
    }
    if p.field() != ring.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(RingElement { ring: ring.clone(), poly: ring.reduce(p) })
}

/// An element of a quotient ring, always stored in normal form.
#[derive(Clone)]
pub struct RingElement {
    ring: Arc<QuotientRing>,
    poly: Polynomial,
}

impl RingElement {
    pub fn zero(ring: &Arc<QuotientRing>) -> RingElement {
        RingElement { ring: ring.clone(), poly: Polynomial::zero(ring.field(), ring.nvars()) }
    }

    pub fn one(ring: &Arc<QuotientRing>) -> RingElement {
        RingElement::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &Arc<QuotientRing>, c: Scalar) -> RingElement {
        RingElement { ring: ring.clone(), poly: Polynomial::constant(c, ring.nvars()) }
    }

    pub fn from_i64(ring: &Arc<QuotientRing>, n: i64) -> RingElement {
        RingElement::constant(ring, ring.field().from_i64(n))
    }

    pub fn var(ring: &Arc<QuotientRing>, i: usize) -> RingElement {
        let p = Polynomial::var(ring.field(), ring.nvars(), i);
        RingElement { ring: ring.clone(), poly: ring.reduce(&p) }
    }

    pub fn parse(ring: &Arc<QuotientRing>, src: &str) -> Result<RingElement> {
        normal_form(&parse_polynomial(src, ring.field(), ring.nvars())?, ring)
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn as_constant(&self) -> Option<Scalar> {
        self.poly.as_constant()
    }

    /// The inverse when the element is a nonzero constant. Nonconstant units
    /// are not recognized.
    pub fn unit_inverse(&self) -> Option<RingElement> {
        let c = self.as_constant()?.inv()?;
        Some(RingElement::constant(&self.ring, c))
    }

    fn same_ring(&self, other: &RingElement) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring
    }

    fn check(&self, other: &RingElement) {
        assert!(self.same_ring(other), "ring element from a different ring");
    }

    fn wrap(&self, poly: Polynomial) -> RingElement {
        RingElement { ring: self.ring.clone(), poly }
    }

    pub fn add(&self, other: &RingElement) -> RingElement {
        self.check(other);
        self.wrap(self.poly.add(&other.poly))
    }

    pub fn sub(&self, other: &RingElement) -> RingElement {
        self.check(other);
        self.wrap(self.poly.sub(&other.poly))
    }

    pub fn neg(&self) -> RingElement {
        self.wrap(self.poly.neg())
    }

    pub fn mul(&self, other: &RingElement) -> RingElement {
        self.check(other);
        self.wrap(self.ring.reduce(&self.poly.mul(&other.poly)))
    }

    pub fn scale(&self, c: &Scalar) -> RingElement {
        self.wrap(self.poly.scale(c))
    }

    pub fn pow(&self, mut exp: u32) -> RingElement {
        let mut acc = RingElement::one(&self.ring);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// A random element: normal form of a polynomial of total degree at most `max_degree`.
    pub fn random<R: Rng + ?Sized>(ring: &Arc<QuotientRing>, rng: &mut R, max_degree: u32) -> RingElement {
        let n = ring.nvars();
        let mut p = Polynomial::zero(ring.field(), n);
        let nterms = rng.gen_range(1..=4);
        for _ in 0..nterms {
            let mut exps = vec![0u32; n];
            let mut budget = rng.gen_range(0..=max_degree);
            while budget > 0 && n > 0 {
                exps[rng.gen_range(0..n)] += 1;
                budget -= 1;
            }
            p.add_term(Monomial::from_exponents(exps), ring.field().random_scalar(rng));
        }
        RingElement { ring: ring.clone(), poly: ring.reduce(&p) }
    }
}

/// `a == b` in the quotient ring, i.e. `normal_form(a − b) = 0`.
pub fn ring_equal(a: &RingElement, b: &RingElement) -> Result<bool> {
    if !a.same_ring(b) {
        return Err(Error::RingMismatch);
    }
    Ok(a.sub(b).is_zero())
}

impl PartialEq for RingElement {
    fn eq(&self, other: &Self) -> bool {
        self.same_ring(other) && self.poly == other.poly
    }
}

impl Eq for RingElement {}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingElement({})", self)
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.to_text(self.ring.names()))
    }
}

impl std::ops::Add for &RingElement {
    type Output = RingElement;
    fn add(self, rhs: &RingElement) -> RingElement {
        RingElement::add(self, rhs)
    }
}

impl std::ops::Sub for &RingElement {
    type Output = RingElement;
    fn sub(self, rhs: &RingElement) -> RingElement {
        RingElement::sub(self, rhs)
    }
}

impl std::ops::Mul for &RingElement {
    type Output = RingElement;
    fn mul(self, rhs: &RingElement) -> RingElement {
        RingElement::mul(self, rhs)
    }
}

impl std::ops::Neg for &RingElement {
    type Output = RingElement;
    fn neg(self) -> RingElement {
        RingElement::neg(self)
    }
}
