//! Dense row-major matrices over exact rings and fields.

use std::fmt;
use std::sync::Arc;

use super::element::{Element, FieldElement};
use crate::error::{Error, Result};
use crate::rings::{eval_at_point, QuotientRing, RationalPoint, RingElement, RingInvolution, Scalar};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Element> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Matrix<T>> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}×{cols} matrix", data.len())));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Matrix<T>> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::Shape("matrix must be nonempty".into()));
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("rows have different lengths".into()));
        }
        Ok(Matrix { rows: nrows, cols: ncols, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Matrix<T> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize, zero: &T) -> Matrix<T> {
        Matrix { rows, cols, data: vec![zero.zero_like(); rows * cols] }
    }

    pub fn identity(n: usize, one: &T) -> Matrix<T> {
        let zero = one.zero_like();
        let one = one.one_like();
        Matrix::from_fn(n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    /// The `n × n` matrix unit `e_ij`.
    pub fn unit(n: usize, i: usize, j: usize, one: &T) -> Matrix<T> {
        let zero = one.zero_like();
        let one = one.one_like();
        Matrix::from_fn(n, n, |a, b| if (a, b) == (i, j) { one.clone() } else { zero.clone() })
    }

    pub fn column(entries: Vec<T>) -> Matrix<T> {
        Matrix { rows: entries.len(), cols: 1, data: entries }
    }

    pub fn row_vector(entries: Vec<T>) -> Matrix<T> {
        Matrix { rows: 1, cols: entries.len(), data: entries }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<T> {
        self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn sample(&self) -> &T {
        &self.data[0]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Element::is_zero)
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn add(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.same_shape(other, "sum")?;
        Ok(self.zip(other, |a, b| a.plus(b)))
    }

    pub fn sub(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        self.same_shape(other, "difference")?;
        Ok(self.zip(other, |a, b| a.minus(b)))
    }

    fn same_shape(&self, other: &Matrix<T>, what: &str) -> Result<()> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::Shape(format!(
                "{what} of {}×{} and {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    fn zip(&self, other: &Matrix<T>, f: impl Fn(&T, &T) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn neg(&self) -> Matrix<T> {
        self.map(Element::negated)
    }

    pub fn scale(&self, c: &T) -> Matrix<T> {
        self.map(|a| c.times(a))
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "product of {}×{} and {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let zero = self.sample().zero_like();
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                acc = acc.plus(&a.times(other.get(k, j)));
            }
            acc
        }))
    }

    pub fn trace(&self) -> Result<T> {
        self.require_square()?;
        let mut acc = self.sample().zero_like();
        for i in 0..self.rows {
            acc = acc.plus(self.get(i, i));
        }
        Ok(acc)
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Shape(format!("{}×{} matrix is not square", self.rows, self.cols)));
        }
        Ok(())
    }

    /// `(a ⊗ b)[(i,k),(j,l)] = a[i,j] · b[k,l]`.
    pub fn kronecker(&self, other: &Matrix<T>) -> Matrix<T> {
        let (p, q) = (other.rows, other.cols);
        Matrix::from_fn(self.rows * p, self.cols * q, |r, c| {
            self.get(r / p, c / q).times(other.get(r % p, c % q))
        })
    }

    /// `a·a = a`.
    pub fn is_idempotent(&self) -> bool {
        self.is_square() && self.mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    /// Determinant without division, by Laplace expansion memoized over
    /// the set of used columns; valid over any commutative ring.
    pub fn determinant(&self) -> Result<T> {
        self.require_square()?;
        Ok(det_subset(self, &(0..self.rows).collect::<Vec<_>>(), &(0..self.cols).collect::<Vec<_>>()))
    }

    /// The classical adjugate, `a · adj(a) = det(a) · I`.
    pub fn adjugate(&self) -> Result<Matrix<T>> {
        self.require_square()?;
        let n = self.rows;
        let one = self.sample().one_like();
        if n == 1 {
            return Ok(Matrix::identity(1, &one));
        }
        Ok(Matrix::from_fn(n, n, |i, j| {
            // adj[i][j] = (−1)^{i+j} det(minor without row j and column i)
            let rows: Vec<usize> = (0..n).filter(|&r| r != j).collect();
            let cols: Vec<usize> = (0..n).filter(|&c| c != i).collect();
            let d = det_subset(self, &rows, &cols);
            if (i + j) % 2 == 0 {
                d
            } else {
                d.negated()
            }
        }))
    }
}

fn det_subset<T: Element>(a: &Matrix<T>, rows: &[usize], cols: &[usize]) -> T {
    let n = rows.len();
    let one = a.sample().one_like();
    if n == 0 {
        return one;
    }
    assert!(n <= 20, "determinant by subset expansion is limited to n ≤ 20");
    let zero = one.zero_like();
    let mut dp: Vec<Option<T>> = vec![None; 1 << n];
    dp[0] = Some(one);
    for mask in 0usize..(1 << n) {
        let Some(val) = dp[mask].take() else { continue };
        let r = mask.count_ones() as usize;
        if r == n {
            dp[mask] = Some(val);
            continue;
        }
        for c in 0..n {
            if mask & (1 << c) != 0 {
                continue;
            }
            let entry = a.get(rows[r], cols[c]);
            if entry.is_zero() {
                continue;
            }
            let above = (mask >> (c + 1)).count_ones();
            let mut term = val.times(entry);
            if above % 2 == 1 {
                term = term.negated();
            }
            let slot = &mut dp[mask | (1 << c)];
            *slot = Some(match slot.take() {
                Some(acc) => acc.plus(&term),
                None => term,
            });
        }
    }
    dp[(1 << n) - 1].take().unwrap_or(zero)
}

/// Gaussian elimination and friends over a field.
impl<T: FieldElement> Matrix<T> {
    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Matrix<T>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inverse().expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = m.get(r, j).times(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).minus(&factor.times(m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Matrix<T>> {
        self.require_square()?;
        let n = self.rows;
        let one = self.sample().one_like();
        let id = Matrix::identity(n, &one);
        let aug = Matrix::from_fn(n, 2 * n, |i, j| if j < n { self.get(i, j).clone() } else { id.get(i, j - n).clone() });
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| red.get(i, j + n).clone()))
    }

    /// Determinant by elimination.
    pub fn field_determinant(&self) -> Result<T> {
        self.require_square()?;
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.sample().one_like();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(det.zero_like());
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = det.negated();
            }
            let pivot = m.get(c, c).clone();
            det = det.times(&pivot);
            let inv = pivot.inverse().expect("nonzero pivot");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).times(&inv);
                for j in c..n {
                    let v = m.get(i, j).minus(&factor.times(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    /// A basis of `{v : a·v = 0}`, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (red, pivots) = self.rref();
        let zero = self.sample().zero_like();
        let one = self.sample().one_like();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![zero.clone(); self.cols];
                v[f] = one.clone();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = red.get(r, f).negated();
                }
                v
            })
            .collect()
    }

    /// Coordinates of `target` in the span of `basis` (all of one length), if it lies there.
    pub fn coordinates_in(basis: &[Vec<T>], target: &[T]) -> Option<Vec<T>> {
        let n = target.len();
        let k = basis.len();
        let zero = target.first()?.zero_like();
        if k == 0 {
            return target.iter().all(Element::is_zero).then(Vec::new);
        }
        let aug = Matrix::from_fn(n, k + 1, |i, j| if j < k { basis[j][i].clone() } else { target[i].clone() });
        let (red, pivots) = aug.rref();
        if pivots.contains(&k) {
            return None;
        }
        let mut out = vec![zero; k];
        for (r, &pc) in pivots.iter().enumerate() {
            out[pc] = red.get(r, k).clone();
        }
        Some(out)
    }
}

impl Matrix<Scalar> {
    /// Embeds a field matrix as constants of `ring`.
    pub fn lift(&self, ring: &Arc<QuotientRing>) -> Matrix<RingElement> {
        self.map(|s| RingElement::constant(ring, s.clone()))
    }
}

impl Matrix<RingElement> {
    pub fn ring(&self) -> &Arc<QuotientRing> {
        self.sample().ring()
    }

    pub fn eval_at(&self, z: &RationalPoint) -> Result<Matrix<Scalar>> {
        let data = self.data.iter().map(|e| eval_at_point(e, z)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    /// Entrywise `λ`.
    pub fn apply_involution(&self, lambda: &RingInvolution) -> Result<Matrix<RingElement>> {
        let data = self.data.iter().map(|e| lambda.apply(e)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// `w = [[0, −1], [1, 0]]`, with `w² = −I`.
pub fn symplectic_w<T: Element>(one: &T) -> Matrix<T> {
    let o = one.one_like();
    let z = o.zero_like();
    Matrix { rows: 2, cols: 2, data: vec![z.clone(), o.negated(), o, z] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn m(f: Field, rows: &[&[i64]]) -> Matrix<Scalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| f.from_i64(x)).collect()).collect()).unwrap()
    }

    fn random(f: Field, rng: &mut ChaCha8Rng, r: usize, c: usize) -> Matrix<Scalar> {
        Matrix::from_fn(r, c, |_, _| f.random_scalar(rng))
    }

    #[test]
    fn w_squares_to_minus_identity() {
        let f = gf(5);
        let w = symplectic_w(&f.one());
        let id = Matrix::identity(2, &f.one());
        assert_eq!(w.mul(&w).unwrap(), id.neg());
        assert!(!w.is_idempotent());
        assert!(id.is_idempotent());
    }

    #[test]
    fn shapes_are_checked() {
        let f = gf(5);
        let a = m(f, &[&[1, 2, 3]]);
        assert!(matches!(a.mul(&a), Err(Error::Shape(_))));
        assert!(matches!(a.determinant(), Err(Error::Shape(_))));
        assert!(Matrix::<Scalar>::from_rows(vec![vec![f.one()], vec![]]).is_err());
        assert!(matches!(m(f, &[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular)));
    }

    #[test]
    fn ranks() {
        let f = gf(5);
        assert_eq!(Matrix::identity(2, &f.one()).rank(), 2);
        assert_eq!(Matrix::zeros(3, 3, &f.zero()).rank(), 0);
        assert_eq!(m(f, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn kronecker_units() {
        let f = gf(7);
        let i2 = Matrix::identity(2, &f.one());
        assert_eq!(i2.kronecker(&i2), Matrix::identity(4, &f.one()));
        let e11 = Matrix::unit(2, 0, 0, &f.one());
        assert_eq!(e11.kronecker(&e11), Matrix::unit(4, 0, 0, &f.one()));
    }

    #[test]
    fn transpose_reverses_products() {
        let f = Field::Rational;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let a = random(f, &mut rng, 3, 4);
            let b = random(f, &mut rng, 4, 2);
            assert_eq!(a.mul(&b).unwrap().transpose(), b.transpose().mul(&a.transpose()).unwrap());
        }
    }

    #[test]
    fn determinant_routes_agree_and_adjugate_inverts() {
        let f = gf(7);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.gen_range(1..=5);
            let a = random(f, &mut rng, n, n);
            let d = a.determinant().unwrap();
            assert_eq!(d, a.field_determinant().unwrap());
            let prod = a.mul(&a.adjugate().unwrap()).unwrap();
            assert_eq!(prod, Matrix::identity(n, &f.one()).scale(&d));
            if !d.is_zero() {
                assert_eq!(a.mul(&a.inverse().unwrap()).unwrap(), Matrix::identity(n, &f.one()));
            }
        }
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let f = gf(5);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            let a = random(f, &mut rng, 3, 5);
            let ker = a.kernel();
            assert_eq!(ker.len() + a.rank(), 5);
            for v in ker {
                assert!(a.mul(&Matrix::column(v)).unwrap().is_zero());
            }
        }
    }
}
