//! Matrix algebras `Mat_n(R)` with the twisted-transpose involution
//! `τ_m(n) = m⁻¹·λ(nᵀ)·m`, and adjoint involutions of forms over a field.
//!
//! When `det m` is not a unit of `R` (for example `m = diag(1, x0)` on the
//! sphere), `τ_m` is an involution of `Mat_n(R[1/det m])`. Elements are then
//! carried as [`LocalizedMatrix`] values `N / c`. All rings used here are
//! domains, so fractions are compared by cross-multiplication.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Element, Matrix};
use crate::rings::{
    eval_at_point, is_fixed_point, Field, FieldInvolution, QuotientRing, RationalPoint, RingElement, RingInvolution,
    Scalar,
};
use crate::sample::{random_ring_matrix, SampleRng};

use super::axioms::InvolutiveAlgebra;
use super::structure::StructureAlgebra;

/// A matrix with a common denominator, `numer / denom`.
#[derive(Debug, Clone)]
pub struct LocalizedMatrix {
    numer: Matrix<RingElement>,
    denom: RingElement,
}

impl LocalizedMatrix {
    pub fn new(numer: Matrix<RingElement>, denom: RingElement) -> Result<LocalizedMatrix> {
        if denom.is_zero() {
            return Err(Error::Constraint("zero denominator".into()));
        }
        if denom.ring().as_ref() != numer.ring().as_ref() {
            return Err(Error::RingMismatch);
        }
        Ok(LocalizedMatrix { numer, denom }.normalized())
    }

    pub fn from_matrix(m: Matrix<RingElement>) -> LocalizedMatrix {
        let denom = RingElement::one(m.ring());
        LocalizedMatrix { numer: m, denom }
    }

    pub fn numer(&self) -> &Matrix<RingElement> {
        &self.numer
    }

    pub fn denom(&self) -> &RingElement {
        &self.denom
    }

    /// Folds a constant denominator into the numerator.
    fn normalized(self) -> LocalizedMatrix {
        match self.denom.unit_inverse() {
            Some(inv) if !self.denom.as_constant().is_some_and(|c| c.is_one()) => {
                let one = RingElement::one(self.denom.ring());
                LocalizedMatrix { numer: self.numer.scale(&inv), denom: one }
            }
            _ => self,
        }
    }

    /// The plain matrix, when the denominator is `1`.
    pub fn to_matrix(&self) -> Option<Matrix<RingElement>> {
        self.denom.as_constant().is_some_and(|c| c.is_one()).then(|| self.numer.clone())
    }

    pub fn add(&self, other: &LocalizedMatrix) -> Result<LocalizedMatrix> {
        if self.denom == other.denom {
            return Ok(LocalizedMatrix { numer: self.numer.add(&other.numer)?, denom: self.denom.clone() });
        }
        let numer = self.numer.scale(&other.denom).add(&other.numer.scale(&self.denom))?;
        Ok(LocalizedMatrix { numer, denom: self.denom.mul(&other.denom) }.normalized())
    }

    pub fn mul(&self, other: &LocalizedMatrix) -> Result<LocalizedMatrix> {
        let numer = self.numer.mul(&other.numer)?;
        Ok(LocalizedMatrix { numer, denom: self.denom.mul(&other.denom) }.normalized())
    }

    pub fn equals(&self, other: &LocalizedMatrix) -> bool {
        if self.numer.rows() != other.numer.rows() || self.numer.cols() != other.numer.cols() {
            return false;
        }
        self.numer.scale(&other.denom) == other.numer.scale(&self.denom)
    }

    pub fn eval_at(&self, z: &RationalPoint) -> Result<Matrix<Scalar>> {
        let d = eval_at_point(&self.denom, z)?;
        let inv = d.inv().ok_or_else(|| Error::OutsideDomain(z.name().to_string()))?;
        Ok(self.numer.eval_at(z)?.scale(&inv))
    }
}

impl fmt::Display for LocalizedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{} / ({})", self.numer, self.denom)
        }
    }
}

/// `Mat_n(R)` with `τ_m`, where `λ(mᵀ) = f·m` for a unit `f`.
#[derive(Debug, Clone)]
pub struct MatrixAlgebra {
    lambda: RingInvolution,
    twist: Matrix<RingElement>,
    /// `twist · inv_numer = inv_denom · I`.
    inv_numer: Matrix<RingElement>,
    inv_denom: RingElement,
    f: RingElement,
}

/// Recovers `f` with `λ(mᵀ) = f·m` and builds `τ_m`.
pub fn make_transpose_involution(m: &Matrix<RingElement>, lambda: &RingInvolution) -> Result<MatrixAlgebra> {
    if !m.is_square() || m.rows() == 0 {
        return Err(Error::Shape(format!("twist must be a nonempty square matrix, got {}×{}", m.rows(), m.cols())));
    }
    if m.ring().as_ref() != lambda.ring().as_ref() {
        return Err(Error::RingMismatch);
    }
    let ring = lambda.ring().clone();
    let det = m.determinant()?;
    if det.is_zero() {
        return Err(Error::Singular);
    }
    let adj = m.adjugate()?;
    let (inv_numer, inv_denom) = match det.unit_inverse() {
        Some(d) => (adj.scale(&d), RingElement::one(&ring)),
        None => (adj, det),
    };
    let lt = m.transpose().apply_involution(lambda)?;
    let f = extract_factor(m, &lt)?;
    if f.unit_inverse().is_none() {
        return Err(Error::NoUnitFactor(format!("the entrywise comparison forces f = {f}, which is not a unit")));
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if f.mul(m.get(i, j)) != *lt.get(i, j) {
                return Err(Error::NoUnitFactor(format!(
                    "f = {f} fails at entry ({i}, {j}): f·m = {} but λ(mᵀ) = {}",
                    f.mul(m.get(i, j)),
                    lt.get(i, j)
                )));
            }
        }
    }
    Ok(MatrixAlgebra { lambda: lambda.clone(), twist: m.clone(), inv_numer, inv_denom, f })
}

/// Candidate `f` from the first nonzero entry of `m`.
fn extract_factor(m: &Matrix<RingElement>, lt: &Matrix<RingElement>) -> Result<RingElement> {
    let ring = m.ring().clone();
    let (i, j) = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .find(|&(i, j)| !m.get(i, j).is_zero())
        .expect("a nonsingular matrix has a nonzero entry");
    let (a, b) = (m.get(i, j), lt.get(i, j));
    if let Some(inv) = a.unit_inverse() {
        return Ok(b.mul(&inv));
    }
    let (Some((ma, ca)), Some((mb, cb))) = (a.poly().leading_term(), b.poly().leading_term()) else {
        return Err(Error::NoUnitFactor(format!("entry ({i}, {j}) of λ(mᵀ) vanishes but m's does not")));
    };
    if ma != mb {
        return Err(Error::NoUnitFactor(format!(
            "entry ({i}, {j}): {b} is not a constant multiple of {a}"
        )));
    }
    let c = cb.mul(&ca.inv().expect("leading coefficients are nonzero"));
    Ok(RingElement::constant(&ring, c))
}

impl MatrixAlgebra {
    pub fn ring(&self) -> &Arc<QuotientRing> {
        self.lambda.ring()
    }

    pub fn lambda(&self) -> &RingInvolution {
        &self.lambda
    }

    pub fn degree(&self) -> usize {
        self.twist.rows()
    }

    pub fn twist(&self) -> &Matrix<RingElement> {
        &self.twist
    }

    pub fn factor(&self) -> &RingElement {
        &self.f
    }

    /// Whether `det m` is a unit, so `τ_m` acts on `Mat_n(R)` itself.
    pub fn is_unimodular(&self) -> bool {
        self.inv_denom.as_constant().is_some_and(|c| c.is_one())
    }

    /// The element inverted to define `τ_m`; `1` when the twist is unimodular.
    pub fn localization_denominator(&self) -> &RingElement {
        &self.inv_denom
    }

    /// `λ(f)·f`, which is `1` for every valid algebra.
    pub fn factor_norm(&self) -> RingElement {
        self.lambda.apply_unchecked(&self.f).mul(&self.f)
    }

    fn check_shape(&self, n: &Matrix<RingElement>) -> Result<()> {
        let d = self.degree();
        if n.rows() != d || n.cols() != d {
            return Err(Error::Shape(format!("expected a {d}×{d} matrix, got {}×{}", n.rows(), n.cols())));
        }
        if n.ring().as_ref() != self.ring().as_ref() {
            return Err(Error::RingMismatch);
        }
        Ok(())
    }

    /// `τ_m(n)` over `R`; requires a unimodular twist.
    pub fn apply_tau(&self, n: &Matrix<RingElement>) -> Result<Matrix<RingElement>> {
        self.check_shape(n)?;
        if !self.is_unimodular() {
            return Err(Error::NonUnitDeterminant(self.inv_denom.to_string()));
        }
        self.inv_numer.mul(&n.transpose().apply_involution(&self.lambda)?)?.mul(&self.twist)
    }

    /// `τ_m` on `Mat_n(R[1/det m])`.
    pub fn apply_tau_localized(&self, x: &LocalizedMatrix) -> Result<LocalizedMatrix> {
        self.check_shape(&x.numer)?;
        let numer = self.inv_numer.mul(&x.numer.transpose().apply_involution(&self.lambda)?)?.mul(&self.twist)?;
        let denom = self.inv_denom.mul(&self.lambda.apply_unchecked(&x.denom));
        Ok(LocalizedMatrix { numer, denom }.normalized())
    }

    /// The fiber at `z` with the given action on scalars.
    fn fiber(&self, z: &RationalPoint, field_involution: FieldInvolution) -> Result<StructureAlgebra> {
        let denom_at = eval_at_point(&self.inv_denom, z)?;
        if denom_at.is_zero() {
            return Err(Error::OutsideDomain(z.name().to_string()));
        }
        let ring = self.ring().clone();
        StructureAlgebra::matrix_algebra(
            ring.field(),
            self.degree(),
            |e| {
                let lifted = LocalizedMatrix::from_matrix(e.map(|s| RingElement::constant(&ring, s.clone())));
                self.apply_tau_localized(&lifted)?.eval_at(z)
            },
            field_involution,
        )
    }

    /// The pullback to the residue field of a `λ`-fixed rational point.
    pub fn specialize(&self, z: &RationalPoint) -> Result<StructureAlgebra> {
        if !is_fixed_point(z, &self.lambda) {
            return Err(Error::NotFixed(z.name().to_string()));
        }
        self.fiber(z, FieldInvolution::Identity)
    }

    /// For an algebra over the field itself (no variables): the algebra with
    /// `σ` acting on scalars through the field involution.
    pub fn field_structure(&self) -> Result<StructureAlgebra> {
        if self.ring().nvars() != 0 {
            return Err(Error::Input("field_structure requires a zero-variable ring".into()));
        }
        let origin = RationalPoint::new("origin", Vec::new(), self.ring())?;
        self.fiber(&origin, self.lambda.field_involution())
    }

    /// `σ(M)` for a field-level algebra.
    pub fn apply_field(&self, m: &Matrix<Scalar>) -> Result<Matrix<Scalar>> {
        if self.ring().nvars() != 0 {
            return Err(Error::Input("apply_field requires a zero-variable ring".into()));
        }
        let origin = RationalPoint::new("origin", Vec::new(), self.ring())?;
        let lifted = LocalizedMatrix::from_matrix(m.lift(self.ring()));
        self.apply_tau_localized(&lifted)?.eval_at(&origin)
    }
}

/// `τ_{m_A ⊗ m_B}` with `f = f_A·f_B`.
pub fn tensor_involution(a: &MatrixAlgebra, b: &MatrixAlgebra) -> Result<MatrixAlgebra> {
    if a.lambda != b.lambda {
        return Err(Error::RingMismatch);
    }
    let twist = a.twist.kronecker(&b.twist);
    let inv_numer = a.inv_numer.kronecker(&b.inv_numer);
    let inv_denom = a.inv_denom.mul(&b.inv_denom);
    let f = a.f.mul(&b.f);
    Ok(MatrixAlgebra { lambda: a.lambda.clone(), twist, inv_numer, inv_denom, f })
}

/// A nondegenerate form `⟨v, w⟩ = φ(v)ᵀ·G·w` on `kⁿ`, with `φ` the field
/// involution (the identity for bilinear forms).
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearForm {
    gram: Matrix<Scalar>,
    involution: FieldInvolution,
}

impl BilinearForm {
    pub fn new(gram: Matrix<Scalar>, involution: FieldInvolution) -> Result<BilinearForm> {
        if !gram.is_square() || gram.rows() == 0 {
            return Err(Error::Shape(format!("gram matrix must be nonempty and square, got {}×{}", gram.rows(), gram.cols())));
        }
        if gram.field_determinant()?.is_zero() {
            return Err(Error::Singular);
        }
        Ok(BilinearForm { gram, involution })
    }

    pub fn gram(&self) -> &Matrix<Scalar> {
        &self.gram
    }

    pub fn field(&self) -> Field {
        self.gram.get(0, 0).field()
    }

    pub fn involution(&self) -> FieldInvolution {
        self.involution
    }

    pub fn pairing(&self, v: &[Scalar], w: &[Scalar]) -> Result<Scalar> {
        let n = self.gram.rows();
        if v.len() != n || w.len() != n {
            return Err(Error::Shape(format!("vectors must have length {n}")));
        }
        let mut acc = self.field().zero();
        for (i, vi) in v.iter().enumerate() {
            let vi = vi.apply(self.involution);
            for (j, wj) in w.iter().enumerate() {
                acc = acc.add(&vi.mul(self.gram.get(i, j)).mul(wj));
            }
        }
        Ok(acc)
    }
}

/// `σ(M) = G⁻¹·φ(Mᵀ)·G`, adjoint to `M` for the form. This is `τ_G` over the
/// field, so `G` must be symmetric or skew-symmetric (hermitian or
/// skew-hermitian under a conjugation).
pub fn adjoint_involution(form: &BilinearForm) -> Result<MatrixAlgebra> {
    let ring = QuotientRing::polynomial_ring(form.field(), 0);
    let lambda = RingInvolution::new(&ring, Vec::new(), form.involution)?;
    make_transpose_involution(&form.gram.lift(&ring), &lambda)
}

impl InvolutiveAlgebra for MatrixAlgebra {
    type Elem = LocalizedMatrix;

    fn random_element(&self, rng: &mut SampleRng) -> LocalizedMatrix {
        let d = self.degree();
        LocalizedMatrix::from_matrix(random_ring_matrix(self.ring(), rng, d, d, 2))
    }

    fn random_central_pair(&self, rng: &mut SampleRng) -> (LocalizedMatrix, LocalizedMatrix) {
        let r = RingElement::random(self.ring(), rng, 2);
        let lr = self.lambda.apply_unchecked(&r);
        let id = Matrix::identity(self.degree(), &RingElement::one(self.ring()));
        (LocalizedMatrix::from_matrix(id.scale(&r)), LocalizedMatrix::from_matrix(id.scale(&lr)))
    }

    fn add(&self, a: &LocalizedMatrix, b: &LocalizedMatrix) -> LocalizedMatrix {
        a.add(b).expect("same shape")
    }

    fn mul(&self, a: &LocalizedMatrix, b: &LocalizedMatrix) -> LocalizedMatrix {
        a.mul(b).expect("same shape")
    }

    fn sigma(&self, a: &LocalizedMatrix) -> LocalizedMatrix {
        self.apply_tau_localized(a).expect("same shape")
    }

    fn equal(&self, a: &LocalizedMatrix, b: &LocalizedMatrix) -> bool {
        a.equals(b)
    }

    fn describe(&self, a: &LocalizedMatrix) -> String {
        a.to_string()
    }

    fn basis(&self) -> Vec<LocalizedMatrix> {
        let d = self.degree();
        let one = RingElement::one(self.ring());
        (0..d * d).map(|k| LocalizedMatrix::from_matrix(Matrix::unit(d, k / d, k % d, &one))).collect()
    }
}

impl Element for LocalizedMatrix {
    fn zero_like(&self) -> Self {
        LocalizedMatrix::from_matrix(Matrix::zeros(self.numer.rows(), self.numer.cols(), &self.denom.zero_like()))
    }
    fn one_like(&self) -> Self {
        LocalizedMatrix::from_matrix(Matrix::identity(self.numer.rows(), &self.denom.one_like()))
    }
    fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }
    fn plus(&self, rhs: &Self) -> Self {
        self.add(rhs).expect("same shape")
    }
    fn minus(&self, rhs: &Self) -> Self {
        self.add(&rhs.negated()).expect("same shape")
    }
    fn times(&self, rhs: &Self) -> Self {
        self.mul(rhs).expect("same shape")
    }
    fn negated(&self) -> Self {
        LocalizedMatrix { numer: self.numer.neg(), denom: self.denom.clone() }
    }
}

impl PartialEq for LocalizedMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involutions::axioms::check_involution_axioms;
    use crate::involutions::structure::InvolutionType;
    use crate::linalg::symplectic_w;

    fn sphere() -> (Arc<QuotientRing>, RingInvolution) {
        let r = QuotientRing::sphere(Field::prime(5).unwrap(), 2);
        let l = RingInvolution::sphere(&r);
        (r, l)
    }

    fn points(r: &Arc<QuotientRing>) -> Vec<RationalPoint> {
        let f = r.field();
        vec![
            RationalPoint::new("p", vec![f.one(), f.zero(), f.zero()], r).unwrap(),
            RationalPoint::new("q", vec![f.from_i64(-1), f.zero(), f.zero()], r).unwrap(),
        ]
    }

    #[test]
    fn recovers_f_for_identity_and_w() {
        let (r, l) = sphere();
        let one = RingElement::one(&r);
        let a = make_transpose_involution(&Matrix::identity(2, &one), &l).unwrap();
        assert_eq!(a.factor(), &one);
        let b = make_transpose_involution(&symplectic_w(&one), &l).unwrap();
        assert_eq!(b.factor(), &one.neg());
        assert_eq!(b.factor_norm(), one);
    }

    #[test]
    fn rejects_non_unit_factor() {
        let (r, l) = sphere();
        let m = Matrix::from_rows(vec![
            vec![RingElement::zero(&r), RingElement::one(&r)],
            vec![RingElement::var(&r, 1), RingElement::zero(&r)],
        ])
        .unwrap();
        assert!(matches!(make_transpose_involution(&m, &l), Err(Error::NoUnitFactor(_))));
        let zero = Matrix::zeros(2, 2, &RingElement::zero(&r));
        assert_eq!(make_transpose_involution(&zero, &l).unwrap_err(), Error::Singular);
    }

    #[test]
    fn tau_examples() {
        let (r, l) = sphere();
        let one = RingElement::one(&r);
        let a = make_transpose_involution(&Matrix::identity(2, &one), &l).unwrap();
        let x1 = RingElement::var(&r, 1);
        let n = Matrix::from_rows(vec![vec![x1.clone(), RingElement::zero(&r)], vec![RingElement::zero(&r); 2]]).unwrap();
        let expected = Matrix::from_rows(vec![vec![x1.neg(), RingElement::zero(&r)], vec![RingElement::zero(&r); 2]]).unwrap();
        assert_eq!(a.apply_tau(&n).unwrap(), expected);
        assert!(matches!(a.apply_tau(&Matrix::identity(3, &one)), Err(Error::Shape(_))));

        let f = Field::prime(5).unwrap();
        let form = BilinearForm::new(symplectic_w(&f.one()), FieldInvolution::Identity).unwrap();
        let w = adjoint_involution(&form).unwrap();
        let e12 = Matrix::unit(2, 0, 1, &f.one());
        assert_eq!(w.apply_field(&e12).unwrap(), e12.neg());
        assert_eq!(w.apply_field(&Matrix::identity(2, &f.one())).unwrap(), Matrix::identity(2, &f.one()));
    }

    #[test]
    fn localized_twist_diag_1_x0() {
        let (r, l) = sphere();
        let one = RingElement::one(&r);
        let zero = RingElement::zero(&r);
        let m = Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero, RingElement::var(&r, 0)]]).unwrap();
        let a = make_transpose_involution(&m, &l).unwrap();
        assert_eq!(a.factor(), &one);
        assert!(!a.is_unimodular());
        assert!(matches!(a.apply_tau(&m), Err(Error::NonUnitDeterminant(_))));
        assert!(check_involution_axioms(&a, 20, 3).passed());
        for z in points(&r) {
            assert_eq!(a.specialize(&z).unwrap().classify().unwrap(), InvolutionType::Orthogonal);
        }
        let f = r.field();
        let off = RationalPoint::new("y", vec![f.zero(), f.one(), f.zero()], &r).unwrap();
        assert!(matches!(a.specialize(&off), Err(Error::NotFixed(_))));
    }

    #[test]
    fn tensor_of_w_with_w() {
        let (r, l) = sphere();
        let one = RingElement::one(&r);
        let w = make_transpose_involution(&symplectic_w(&one), &l).unwrap();
        let ww = tensor_involution(&w, &w).unwrap();
        assert_eq!(ww.factor(), &one);
        assert_eq!(ww.degree(), 4);
        for z in points(&r) {
            let s = ww.specialize(&z).unwrap();
            assert_eq!(s.fixed_subspace_dimension().unwrap(), 10);
        }
    }

    #[test]
    fn adjoint_rejects_singular_and_unsymmetric_grams() {
        let f = Field::prime(7).unwrap();
        let singular = Matrix::zeros(2, 2, &f.zero());
        assert_eq!(BilinearForm::new(singular, FieldInvolution::Identity).unwrap_err(), Error::Singular);
        let g = Matrix::from_rows(vec![vec![f.one(), f.one()], vec![f.zero(), f.one()]]).unwrap();
        let form = BilinearForm::new(g, FieldInvolution::Identity).unwrap();
        assert!(matches!(adjoint_involution(&form), Err(Error::NoUnitFactor(_))));
    }
}
