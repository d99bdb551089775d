//! Finite-dimensional algebras over a field, given by structure constants,
//! together with a semilinear involution `σ(v) = S·φ(v)`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rings::{Field, FieldInvolution, Scalar};
use crate::validation::Validation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InvolutionType {
    Orthogonal,
    Symplectic,
    Unitary,
}

impl InvolutionType {
    /// `+1` for orthogonal, `-1` for symplectic, `None` for unitary.
    pub fn sign(self) -> Option<i8> {
        match self {
            InvolutionType::Orthogonal => Some(1),
            InvolutionType::Symplectic => Some(-1),
            InvolutionType::Unitary => None,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            InvolutionType::Orthogonal => "orthogonal",
            InvolutionType::Symplectic => "symplectic",
            InvolutionType::Unitary => "unitary",
        }
    }
}

impl fmt::Display for InvolutionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `e_i·e_j = Σ_k mult[(i·N + j)·N + k]·e_k`; column `j` of `involution` holds
/// the coordinates of `σ(e_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct StructureAlgebra {
    field: Field,
    dim: usize,
    mult: Vec<Scalar>,
    unit: Vec<Scalar>,
    involution: Matrix<Scalar>,
    field_involution: FieldInvolution,
}

impl StructureAlgebra {
    /// Checks sizes only; the algebra and involution axioms are checked by
    /// [`StructureAlgebra::structure_checks`] and the axiom suite.
    pub fn new(
        field: Field,
        dim: usize,
        mult: Vec<Scalar>,
        unit: Vec<Scalar>,
        involution: Matrix<Scalar>,
        field_involution: FieldInvolution,
    ) -> Result<StructureAlgebra> {
        if dim == 0 {
            return Err(Error::Shape("algebra dimension must be positive".into()));
        }
        if mult.len() != dim * dim * dim {
            return Err(Error::Shape(format!("expected {} structure constants, found {}", dim * dim * dim, mult.len())));
        }
        if unit.len() != dim {
            return Err(Error::Shape(format!("unit has {} coordinates, expected {dim}", unit.len())));
        }
        if involution.rows() != dim || involution.cols() != dim {
            return Err(Error::Shape(format!(
                "involution matrix is {}×{}, expected {dim}×{dim}",
                involution.rows(),
                involution.cols()
            )));
        }
        let all_scalars = mult.iter().chain(unit.iter()).chain(involution.entries().iter());
        if all_scalars.into_iter().any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        if field_involution == FieldInvolution::Conjugation && !field.is_quadratic() {
            return Err(Error::InvalidInvolution(format!("field {field} has no nontrivial conjugation")));
        }
        Ok(StructureAlgebra { field, dim, mult, unit, involution, field_involution })
    }

    /// Builds an algebra from a product rule on basis indices and the images
    /// `σ(e_j)` in coordinates.
    pub fn from_operations(
        field: Field,
        dim: usize,
        unit: Vec<Scalar>,
        mut product: impl FnMut(usize, usize) -> Result<Vec<Scalar>>,
        mut sigma: impl FnMut(usize) -> Result<Vec<Scalar>>,
        field_involution: FieldInvolution,
    ) -> Result<StructureAlgebra> {
        let mut mult = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let c = product(i, j)?;
                if c.len() != dim {
                    return Err(Error::Shape("product coordinates have the wrong length".into()));
                }
                mult.extend(c);
            }
        }
        let mut columns = Vec::with_capacity(dim);
        for j in 0..dim {
            let c = sigma(j)?;
            if c.len() != dim {
                return Err(Error::Shape("involution coordinates have the wrong length".into()));
            }
            columns.push(c);
        }
        let involution = Matrix::from_fn(dim, dim, |r, c| columns[c][r].clone());
        StructureAlgebra::new(field, dim, mult, unit, involution, field_involution)
    }

    /// `Mat_n(k)` with basis `e_ij` at index `i·n + j` and `σ` given on
    /// matrices.
    pub fn matrix_algebra(
        field: Field,
        n: usize,
        mut sigma: impl FnMut(&Matrix<Scalar>) -> Result<Matrix<Scalar>>,
        field_involution: FieldInvolution,
    ) -> Result<StructureAlgebra> {
        let dim = n * n;
        let one = field.one();
        let zero = field.zero();
        let unit = (0..dim).map(|k| if k / n == k % n { one.clone() } else { zero.clone() }).collect();
        let product = |a: usize, b: usize| {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            let mut c = vec![zero.clone(); dim];
            if j == k {
                c[i * n + l] = one.clone();
            }
            Ok(c)
        };
        let sigma_basis = |a: usize| {
            let e = Matrix::unit(n, a / n, a % n, &one);
            let image = sigma(&e)?;
            if image.rows() != n || image.cols() != n {
                return Err(Error::Shape("σ changed the matrix size".into()));
            }
            Ok(image.into_entries())
        };
        StructureAlgebra::from_operations(field, dim, unit, product, sigma_basis, field_involution)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn involution_matrix(&self) -> &Matrix<Scalar> {
        &self.involution
    }

    pub fn field_involution(&self) -> FieldInvolution {
        self.field_involution
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim];
        v[i] = self.field.one();
        v
    }

    pub fn add(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
    }

    pub fn scale(&self, c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
        a.iter().map(|x| c.mul(x)).collect()
    }

    pub fn multiply(&self, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let coeff = ai.mul(bj);
                let base = (i * n + j) * n;
                for (k, o) in out.iter_mut().enumerate() {
                    let m = &self.mult[base + k];
                    if !m.is_zero() {
                        *o = o.add(&coeff.mul(m));
                    }
                }
            }
        }
        out
    }

    /// `σ(v) = S·φ(v)` where `φ` is the field involution.
    pub fn sigma(&self, v: &[Scalar]) -> Vec<Scalar> {
        let twisted: Vec<Scalar> = v.iter().map(|x| x.apply(self.field_involution)).collect();
        (0..self.dim)
            .map(|r| {
                self.involution
                    .row(r)
                    .iter()
                    .zip(&twisted)
                    .fold(self.field.zero(), |acc, (s, x)| acc.add(&s.mul(x)))
            })
            .collect()
    }

    /// Associativity and the unit law on all basis triples and pairs.
    pub fn structure_checks(&self) -> Validation {
        let mut v = Validation::new();
        let basis: Vec<Vec<Scalar>> = (0..self.dim).map(|i| self.basis_vector(i)).collect();
        let mut assoc_witness = None;
        'outer: for i in 0..self.dim {
            for j in 0..self.dim {
                let ij = self.multiply(&basis[i], &basis[j]);
                for k in 0..self.dim {
                    let left = self.multiply(&ij, &basis[k]);
                    let right = self.multiply(&basis[i], &self.multiply(&basis[j], &basis[k]));
                    if left != right {
                        assoc_witness = Some(format!("(e{i}·e{j})·e{k} ≠ e{i}·(e{j}·e{k})"));
                        break 'outer;
                    }
                }
            }
        }
        v.record("associative", assoc_witness.is_none(), assoc_witness.unwrap_or_default());
        let unit_witness = (0..self.dim).find_map(|i| {
            let l = self.multiply(&self.unit, &basis[i]);
            let r = self.multiply(&basis[i], &self.unit);
            (l != basis[i] || r != basis[i]).then(|| format!("1·e{i} or e{i}·1 differs from e{i}"))
        });
        v.record("unital", unit_witness.is_none(), unit_witness.unwrap_or_default());
        v
    }

    /// A basis of the center, as the common kernel of `v ↦ v·e_j − e_j·v`.
    pub fn center_basis(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim;
        let system = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            self.structure_constant(i, j, k).sub(self.structure_constant(j, i, k))
        });
        system.kernel()
    }

    /// Whether `σ` acts nontrivially on the center. Over a quadratic field with
    /// conjugation, `t·c` is tested alongside each basis element `c`.
    pub fn moves_center(&self) -> bool {
        let generator = match self.field_involution {
            FieldInvolution::Conjugation => self.field.generator(),
            FieldInvolution::Identity => None,
        };
        self.center_basis().iter().any(|c| {
            if self.sigma(c) != *c {
                return true;
            }
            match &generator {
                Some(t) => {
                    let tc = self.scale(t, c);
                    self.sigma(&tc) != tc
                }
                None => false,
            }
        })
    }

    /// `dim ker(S − I)`, defined for first-kind involutions.
    pub fn fixed_subspace_dimension(&self) -> Result<usize> {
        if self.field_involution != FieldInvolution::Identity || self.moves_center() {
            return Err(Error::SecondKind);
        }
        let shifted = self.involution.sub(&Matrix::identity(self.dim, &self.field.one()))?;
        Ok(self.dim - shifted.rank())
    }

    /// The degree `n` with `N = n²`.
    pub fn degree(&self) -> Result<usize> {
        let n = (self.dim as f64).sqrt().round() as usize;
        if n * n == self.dim {
            Ok(n)
        } else {
            Err(Error::NotSquareDimension(self.dim))
        }
    }

    pub fn classify(&self) -> Result<InvolutionType> {
        let n = self.degree()?;
        if self.moves_center() {
            return Ok(InvolutionType::Unitary);
        }
        if self.field_involution != FieldInvolution::Identity {
            // A conjugation that fixes the center pointwise cannot be k-linear
            // on a central algebra over k; report it rather than misclassify.
            return Err(Error::InvalidInvolution("field involution is nontrivial on a fixed center".into()));
        }
        let fixed = self.fixed_subspace_dimension()?;
        if fixed == (n * n + n) / 2 {
            Ok(InvolutionType::Orthogonal)
        } else if fixed == (n * n - n) / 2 {
            Ok(InvolutionType::Symplectic)
        } else {
            Err(Error::Unclassifiable { degree: n, fixed })
        }
    }

    /// `A ⊗ B` with basis `e_i ⊗ f_a` at index `i·dim(B) + a` and involution
    /// `σ_A ⊗ σ_B`.
    pub fn tensor(&self, other: &StructureAlgebra) -> Result<StructureAlgebra> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.field_involution != other.field_involution {
            return Err(Error::InvalidInvolution("tensor factors use different field involutions".into()));
        }
        let (n1, n2) = (self.dim, other.dim);
        let dim = n1 * n2;
        let zero = self.field.zero();
        let mut mult = vec![zero.clone(); dim * dim * dim];
        for i in 0..n1 {
            for j in 0..n1 {
                for k in 0..n1 {
                    let c1 = self.structure_constant(i, j, k);
                    if c1.is_zero() {
                        continue;
                    }
                    for a in 0..n2 {
                        for b in 0..n2 {
                            for c in 0..n2 {
                                let c2 = other.structure_constant(a, b, c);
                                if c2.is_zero() {
                                    continue;
                                }
                                let (x, y, z) = (i * n2 + a, j * n2 + b, k * n2 + c);
                                mult[(x * dim + y) * dim + z] = c1.mul(c2);
                            }
                        }
                    }
                }
            }
        }
        let unit = self
            .unit
            .iter()
            .flat_map(|u| other.unit.iter().map(move |v| u.mul(v)))
            .collect();
        let involution = self.involution.kronecker(&other.involution);
        StructureAlgebra::new(self.field, dim, mult, unit, involution, self.field_involution)
    }
}
