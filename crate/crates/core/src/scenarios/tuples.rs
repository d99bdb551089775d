//! Tuples `(a₁, …, a_r; b₁, …, b_r; m)` of 2×2 matrices, the `PGL₂` action,
//! the swap-transpose involution and the fiber involutions it induces.
//!
//! Tuples conventionally have `r ≥ 3`; everything here accepts `r ≥ 2`, which is
//! all the fiber computation needs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions::{InvolutionType, StructureAlgebra};
use crate::linalg::{symplectic_w, Matrix};
use crate::rings::{Field, FieldInvolution, Scalar};
use crate::validation::Validation;

/// Longest word used by the generation test.
pub const WORD_BOUND: usize = 5;

#[derive(Debug, Clone, PartialEq)]
pub struct TupleConfig {
    a: Vec<Matrix<Scalar>>,
    b: Vec<Matrix<Scalar>>,
    m: Option<Matrix<Scalar>>,
}

fn require_2x2(mats: &[Matrix<Scalar>], what: &str) -> Result<()> {
    if let Some(bad) = mats.iter().find(|x| x.rows() != 2 || x.cols() != 2) {
        return Err(Error::Shape(format!("{what} entries must be 2×2, found {}×{}", bad.rows(), bad.cols())));
    }
    Ok(())
}

impl TupleConfig {
    pub fn new(a: Vec<Matrix<Scalar>>, b: Vec<Matrix<Scalar>>, m: Option<Matrix<Scalar>>) -> Result<TupleConfig> {
        if a.len() < 2 {
            return Err(Error::Input(format!("tuples need r ≥ 2 matrices, found {}", a.len())));
        }
        if a.len() != b.len() {
            return Err(Error::Input(format!("a has {} matrices but b has {}", a.len(), b.len())));
        }
        require_2x2(&a, "a")?;
        require_2x2(&b, "b")?;
        if let Some(m) = &m {
            require_2x2(std::slice::from_ref(m), "m")?;
        }
        let field = a[0].get(0, 0).field();
        let all = a.iter().chain(&b).chain(m.iter());
        if all.flat_map(|x| x.entries()).any(|s| s.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(TupleConfig { a, b, m })
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    pub fn field(&self) -> Field {
        self.a[0].get(0, 0).field()
    }

    pub fn a(&self) -> &[Matrix<Scalar>] {
        &self.a
    }

    pub fn b(&self) -> &[Matrix<Scalar>] {
        &self.b
    }

    pub fn m(&self) -> Option<&Matrix<Scalar>> {
        self.m.as_ref()
    }

    pub fn with_m(&self, m: Option<Matrix<Scalar>>) -> Result<TupleConfig> {
        TupleConfig::new(self.a.clone(), self.b.clone(), m)
    }
}

/// Whether the words of length at most five in `tuple`, the empty word
/// included, span `Mat₂`.
pub fn check_generates_mat2(tuple: &[Matrix<Scalar>]) -> bool {
    let Some(first) = tuple.first() else {
        return false;
    };
    if tuple.iter().any(|x| x.rows() != 2 || x.cols() != 2) {
        return false;
    }
    let one = first.get(0, 0).field().one();
    let mut spanning: Vec<Vec<Scalar>> = Vec::new();
    let add = |w: &Matrix<Scalar>, spanning: &mut Vec<Vec<Scalar>>| {
        let candidate = w.entries().to_vec();
        let mut rows = spanning.clone();
        rows.push(candidate.clone());
        if Matrix::from_rows(rows).expect("rows of length 4").rank() > spanning.len() {
            spanning.push(candidate);
        }
        spanning.len() == 4
    };
    let mut level = vec![Matrix::identity(2, &one)];
    if add(&level[0], &mut spanning) {
        return true;
    }
    for _ in 0..WORD_BOUND {
        let mut next = Vec::with_capacity(level.len() * tuple.len());
        for w in &level {
            for g in tuple {
                let word = w.mul(g).expect("2×2");
                if add(&word, &mut spanning) {
                    return true;
                }
                next.push(word);
            }
        }
        next.sort_by_key(|x| x.to_string());
        next.dedup();
        level = next;
    }
    false
}

/// The right action `a ↦ h⁻¹ah`, `b ↦ hᵀbh⁻ᵀ`, `m ↦ h⁻¹mh`.
pub fn pgl2_act(t: &TupleConfig, h: &Matrix<Scalar>) -> Result<TupleConfig> {
    if h.rows() != 2 || h.cols() != 2 {
        return Err(Error::Shape("h must be 2×2".into()));
    }
    let hinv = h.inverse()?;
    let ht = h.transpose();
    let hinvt = hinv.transpose();
    let conj = |x: &Matrix<Scalar>| hinv.mul(x).and_then(|y| y.mul(h));
    let a = t.a.iter().map(conj).collect::<Result<Vec<_>>>()?;
    let b = t.b.iter().map(|x| ht.mul(x).and_then(|y| y.mul(&hinvt))).collect::<Result<Vec<_>>>()?;
    let m = t.m.as_ref().map(conj).transpose()?;
    Ok(TupleConfig { a, b, m })
}

/// `(a; b; m) ↦ (b; a; mᵀ)`.
pub fn tilde_sigma(t: &TupleConfig) -> TupleConfig {
    TupleConfig { a: t.b.clone(), b: t.a.clone(), m: t.m.as_ref().map(Matrix::transpose) }
}

/// Forgets `m`.
pub fn project(t: &TupleConfig) -> TupleConfig {
    TupleConfig { a: t.a.clone(), b: t.b.clone(), m: None }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FiberKind {
    O,
    S,
}

impl std::str::FromStr for FiberKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<FiberKind> {
        match s {
            "o" => Ok(FiberKind::O),
            "s" => Ok(FiberKind::S),
            other => Err(Error::Input(format!("fiber kind must be `o` or `s`, got `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FiberReport {
    pub kind: FiberKind,
    pub involution_type: InvolutionType,
    pub fixed_dimension: usize,
    /// The image of the supplied `m` under the recovered fiber map.
    pub m_image: Vec<Vec<String>>,
    pub checks: Validation,
}

/// `−w·x·w`.
fn minus_w_conj(x: &Matrix<Scalar>) -> Matrix<Scalar> {
    let w = symplectic_w(&x.get(0, 0).field().one());
    w.mul(x).and_then(|y| y.mul(&w)).expect("2×2").neg()
}

/// Runs the swap-transpose involution on the fiber over `(a; a)` (kind `o`)
/// or over `(a; −waw)` followed by the action of `h = w` (kind `s`), checks
/// that the base point is recovered, and classifies the induced map on `m`.
pub fn fiber_involution_check(kind: FiberKind, generators: &[Matrix<Scalar>], m: &Matrix<Scalar>) -> Result<FiberReport> {
    require_2x2(generators, "generator")?;
    require_2x2(std::slice::from_ref(m), "m")?;
    if !check_generates_mat2(generators) {
        return Err(Error::NotGenerating(format!("{} matrices", generators.len())));
    }
    let field = m.get(0, 0).field();
    let w = symplectic_w(&field.one());
    let a = generators.to_vec();
    let b: Vec<Matrix<Scalar>> = match kind {
        FiberKind::O => a.clone(),
        FiberKind::S => a.iter().map(minus_w_conj).collect(),
    };
    let base = TupleConfig::new(a.clone(), b.clone(), None)?;
    let mut checks = Validation::new();
    if kind == FiberKind::S {
        for (k, (ak, bk)) in a.iter().zip(&b).enumerate() {
            let back = w.inverse()?.mul(bk)?.mul(&w)?;
            checks.record(format!("w_conjugation_restores_a{}", k + 1), back == *ak, format!("w⁻¹·b{}·w = {back}", k + 1));
        }
    }

    // The fiber map on m: apply the involution, then return to the base point.
    let run = |x: &Matrix<Scalar>| -> Result<Matrix<Scalar>> {
        let t = base.with_m(Some(x.clone()))?;
        let s = tilde_sigma(&t);
        let back = match kind {
            FiberKind::O => s,
            FiberKind::S => pgl2_act(&s, &w)?,
        };
        if back.a != base.a || back.b != base.b {
            return Err(Error::OrbitRecovery(format!("base tuple not restored for m = {x}")));
        }
        Ok(back.m.expect("m was supplied"))
    };
    let image = run(m)?;
    let expected = match kind {
        FiberKind::O => m.transpose(),
        FiberKind::S => minus_w_conj(&m.transpose()),
    };
    let formula = match kind {
        FiberKind::O => "mᵀ",
        FiberKind::S => "−w·mᵀ·w",
    };
    checks.record("base_point_recovered", true, "a- and b-components restored");
    checks.record(format!("m_maps_to_{}", if kind == FiberKind::O { "transpose" } else { "minus_w_transpose_w" }), image == expected, format!("image {image}, expected {formula} = {expected}"));
    checks.record(
        "projection_commutes",
        project(&tilde_sigma(&base.with_m(Some(m.clone()))?)) == tilde_sigma(&base),
        "forgetting m commutes with the involution",
    );

    let fiber = StructureAlgebra::matrix_algebra(field, 2, run, FieldInvolution::Identity)?;
    let involution_type = fiber.classify()?;
    let fixed_dimension = fiber.fixed_subspace_dimension()?;
    let expected_type = match kind {
        FiberKind::O => InvolutionType::Orthogonal,
        FiberKind::S => InvolutionType::Symplectic,
    };
    checks.record("classification", involution_type == expected_type, format!("{involution_type}, fixed dimension {fixed_dimension}"));
    Ok(FiberReport {
        kind,
        involution_type,
        fixed_dimension,
        m_image: image.to_rows().iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(),
        checks,
    })
}

/// `(e₁₂, e₂₁, e₁₁)` over `field`.
pub fn standard_generators(field: Field) -> Vec<Matrix<Scalar>> {
    let one = field.one();
    vec![Matrix::unit(2, 0, 1, &one), Matrix::unit(2, 1, 0, &one), Matrix::unit(2, 0, 0, &one)]
}
