//! The endomorphism algebra `End(R₂ ⊕ M)` of the sphere ring, where `M` is
//! the rank-one projective module `ker E`, with the involution built from
//! `ε(m₁, m₂) = (λ(m₁), −λ(m₂))`.
//!
//! Elements are blocks `[[r₁, μ], [m, r₂]]`: `m` is a column with `E·m = 0`
//! and `μ` a row representing a functional on `M`, kept in the canonical
//! form `μ·(I − E)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::involutions::{
    check_involution_axioms, coarse_type, CoarseType, InvolutiveAlgebra, Specialize, StructureAlgebra,
};
use crate::linalg::{module_from_idempotent, IdempotentModule, Matrix};
use crate::rings::{
    eval_at_point, is_fixed_point, Field, FieldInvolution, QuotientRing, RationalPoint, RingElement, RingInvolution,
    Scalar,
};
use crate::sample::{random_ring_matrix, seeded, SampleRng};
use crate::validation::Validation;

/// Degree bound for randomly sampled ring elements.
const SAMPLE_DEGREE: u32 = 2;

#[derive(Debug, Clone)]
pub struct SphereSetup {
    ring: Arc<QuotientRing>,
    lambda: RingInvolution,
    i: Scalar,
    module: IdempotentModule,
    p: RationalPoint,
    q: RationalPoint,
    checks: Validation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BlockElement {
    r1: RingElement,
    mu: Matrix<RingElement>,
    m: Matrix<RingElement>,
    r2: RingElement,
}

impl BlockElement {
    pub fn r1(&self) -> &RingElement {
        &self.r1
    }

    pub fn mu(&self) -> &Matrix<RingElement> {
        &self.mu
    }

    pub fn m(&self) -> &Matrix<RingElement> {
        &self.m
    }

    pub fn r2(&self) -> &RingElement {
        &self.r2
    }
}

impl fmt::Display for BlockElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.r1, self.mu, self.m.transpose(), self.r2)
    }
}

/// How functionals on the fiber `M(z)` are given coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionalPresentation {
    /// As rows in the row space of `I − E(z)`.
    Projected,
    /// By the value on a chosen generator of `M(z)`.
    Evaluated,
}

impl FunctionalPresentation {
    pub const ALL: [FunctionalPresentation; 2] = [FunctionalPresentation::Projected, FunctionalPresentation::Evaluated];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionalPresentation::Projected => "projected",
            FunctionalPresentation::Evaluated => "evaluated",
        }
    }
}

/// Builds `R₂`, `λ`, `E`, `p` and `q` over `field` and checks the setup facts.
pub fn build_sphere_setup(field: Field) -> Result<SphereSetup> {
    let i = field.sqrt_minus_one().ok_or(Error::NoSquareRootOfMinusOne)?;
    let ring = QuotientRing::sphere(field, 2);
    let lambda = RingInvolution::sphere(&ring);
    let half = RingElement::constant(&ring, field.from_i64(2).inv().expect("odd characteristic"));
    let one = RingElement::one(&ring);
    let x = |k| RingElement::var(&ring, k);
    let ix2 = x(2).scale(&i);
    let e = Matrix::from_rows(vec![
        vec![one.sub(&x(0)), x(1).add(&ix2)],
        vec![x(1).sub(&ix2), one.add(&x(0))],
    ])?
    .scale(&half);
    let p = RationalPoint::new("p", vec![field.one(), field.zero(), field.zero()], &ring)?;
    let q = RationalPoint::new("q", vec![field.from_i64(-1), field.zero(), field.zero()], &ring)?;

    let mut checks = Validation::new();
    checks.record("i_squared_is_minus_one", i.mul(&i) == field.from_i64(-1), format!("i = {i}"));
    checks.record("e_idempotent", e.is_idempotent(), format!("E = {e}"));
    let det = e.determinant()?;
    checks.record("e_determinant_zero", det.is_zero(), format!("det E = {det}"));
    let tr = e.trace()?;
    checks.record("e_trace_one", tr == one, format!("tr E = {tr}"));
    let zero_f = field.zero();
    let one_f = field.one();
    let expected_p = Matrix::from_rows(vec![vec![zero_f.clone(), zero_f.clone()], vec![zero_f.clone(), one_f.clone()]])?;
    let expected_q = Matrix::from_rows(vec![vec![one_f.clone(), zero_f.clone()], vec![zero_f.clone(), zero_f]])?;
    for (z, expected) in [(&p, expected_p), (&q, expected_q)] {
        let ez = e.eval_at(z)?;
        let name = z.name();
        checks.record(format!("e_rank_one_at_{name}"), ez.rank() == 1, format!("rank E({name}) = {}", ez.rank()));
        checks.record(format!("e_at_{name}"), ez == expected, format!("E({name}) = {ez}"));
        checks.record(format!("{name}_fixed"), is_fixed_point(z, &lambda), format!("{name} = {:?}", display_values(z)));
    }
    if !checks.passed() {
        return Err(Error::Constraint(checks.failure_summary()));
    }
    let module = module_from_idempotent(&e, &[p.clone(), q.clone()])?;
    Ok(SphereSetup { ring, lambda, i, module, p, q, checks })
}

fn display_values(z: &RationalPoint) -> Vec<String> {
    z.values().iter().map(|s| s.to_string()).collect()
}

fn column(entries: &[Scalar], ring: &Arc<QuotientRing>) -> Matrix<RingElement> {
    Matrix::column(entries.iter().map(|s| RingElement::constant(ring, s.clone())).collect())
}

fn row(entries: &[Scalar], ring: &Arc<QuotientRing>) -> Matrix<RingElement> {
    Matrix::row_vector(entries.iter().map(|s| RingElement::constant(ring, s.clone())).collect())
}

/// The index and value of the first nonzero entry.
fn first_nonzero(v: &[Scalar]) -> Option<(usize, &Scalar)> {
    v.iter().enumerate().find(|(_, s)| !s.is_zero())
}

/// `c` with `v = c·base`, for `base ≠ 0`.
fn proportion(v: &[Scalar], base: &[Scalar], what: &str) -> Result<Scalar> {
    let (k, b) = first_nonzero(base).expect("basis vectors are nonzero");
    let c = v[k].mul(&b.inv().expect("nonzero"));
    if v.iter().zip(base).any(|(x, y)| *x != c.mul(y)) {
        return Err(Error::Constraint(format!("{what} is not proportional to the chosen fiber generator")));
    }
    Ok(c)
}

/// A basis of the fiber `A(z)` lifted to ring-level blocks, and the map back
/// to coordinates.
struct FiberFrame {
    basis: Vec<BlockElement>,
    generator: Vec<Scalar>,
    functional: FunctionalCoordinate,
}

enum FunctionalCoordinate {
    RowMultiple(Vec<Scalar>),
    ValueOn(Vec<Scalar>),
}

impl SphereSetup {
    pub fn field(&self) -> Field {
        self.ring.field()
    }

    pub fn ring(&self) -> &Arc<QuotientRing> {
        &self.ring
    }

    pub fn lambda(&self) -> &RingInvolution {
        &self.lambda
    }

    pub fn i(&self) -> &Scalar {
        &self.i
    }

    pub fn idempotent(&self) -> &Matrix<RingElement> {
        self.module.idempotent()
    }

    pub fn module(&self) -> &IdempotentModule {
        &self.module
    }

    pub fn p(&self) -> &RationalPoint {
        &self.p
    }

    pub fn q(&self) -> &RationalPoint {
        &self.q
    }

    pub fn fixed_points(&self) -> Vec<RationalPoint> {
        vec![self.p.clone(), self.q.clone()]
    }

    /// The construction-time checks, all of which passed.
    pub fn setup_checks(&self) -> &Validation {
        &self.checks
    }

    /// Validates `E·m = 0` and canonicalizes `μ`.
    pub fn block(
        &self,
        r1: RingElement,
        mu: Matrix<RingElement>,
        m: Matrix<RingElement>,
        r2: RingElement,
    ) -> Result<BlockElement> {
        if mu.rows() != 1 || mu.cols() != 2 || m.rows() != 2 || m.cols() != 1 {
            return Err(Error::Shape("μ must be 1×2 and m must be 2×1".into()));
        }
        if !self.module.contains(&m)? {
            return Err(Error::Constraint(format!("E·m ≠ 0 for m = {}", m.transpose())));
        }
        let mu = self.module.canonicalize(&mu)?;
        Ok(BlockElement { r1, mu, m, r2 })
    }

    fn zero_row(&self) -> Matrix<RingElement> {
        Matrix::zeros(1, 2, &RingElement::zero(&self.ring))
    }

    fn zero_column(&self) -> Matrix<RingElement> {
        Matrix::zeros(2, 1, &RingElement::zero(&self.ring))
    }

    /// `(r, 0, 0, r)`.
    pub fn block_scalar(&self, r: &RingElement) -> BlockElement {
        BlockElement { r1: r.clone(), mu: self.zero_row(), m: self.zero_column(), r2: r.clone() }
    }

    pub fn block_unit(&self) -> BlockElement {
        self.block_scalar(&RingElement::one(&self.ring))
    }

    pub fn block_add(&self, x: &BlockElement, y: &BlockElement) -> BlockElement {
        BlockElement {
            r1: x.r1.add(&y.r1),
            mu: x.mu.add(&y.mu).expect("1×2"),
            m: x.m.add(&y.m).expect("2×1"),
            r2: x.r2.add(&y.r2),
        }
    }

    /// `(r₁s₁ + μ(n), r₁ν + s₂μ, s₁m + r₂n, ν(m) + r₂s₂)`.
    pub fn block_mul(&self, x: &BlockElement, y: &BlockElement) -> BlockElement {
        let pair = |row: &Matrix<RingElement>, col: &Matrix<RingElement>| row.mul(col).expect("1×2 by 2×1").get(0, 0).clone();
        let mu = y.mu.scale(&x.r1).add(&x.mu.scale(&y.r2)).expect("1×2");
        BlockElement {
            r1: x.r1.mul(&y.r1).add(&pair(&x.mu, &y.m)),
            mu: self.module.canonicalize(&mu).expect("1×2"),
            m: x.m.scale(&y.r1).add(&y.m.scale(&x.r2)).expect("2×1"),
            r2: pair(&y.mu, &x.m).add(&x.r2.mul(&y.r2)),
        }
    }

    /// `ε(m₁, m₂) = (λ(m₁), −λ(m₂))`, checked to stay in `M`.
    pub fn epsilon(&self, m: &Matrix<RingElement>) -> Result<Matrix<RingElement>> {
        let l = m.apply_involution(&self.lambda)?;
        let out = Matrix::column(vec![l.get(0, 0).clone(), l.get(1, 0).neg()]);
        if !self.module.contains(&out)? {
            return Err(Error::Constraint(format!("E·ε(m) ≠ 0 for m = {}", m.transpose())));
        }
        Ok(out)
    }

    /// `ε*(μ)`, the row `(λ(μ₁), −λ(μ₂))` canonicalized.
    pub fn epsilon_star(&self, mu: &Matrix<RingElement>) -> Result<Matrix<RingElement>> {
        let l = mu.apply_involution(&self.lambda)?;
        self.module.canonicalize(&Matrix::row_vector(vec![l.get(0, 0).clone(), l.get(0, 1).neg()]))
    }

    /// `(λ(r₂), ε*(μ), ε(m), λ(r₁))`.
    pub fn block_sigma(&self, x: &BlockElement) -> Result<BlockElement> {
        Ok(BlockElement {
            r1: self.lambda.apply(&x.r2)?,
            mu: self.epsilon_star(&x.mu)?,
            m: self.epsilon(&x.m)?,
            r2: self.lambda.apply(&x.r1)?,
        })
    }

    /// `(I − E)·v` for a random column `v`.
    pub fn random_module_element(&self, rng: &mut SampleRng) -> Matrix<RingElement> {
        let v = random_ring_matrix(&self.ring, rng, 2, 1, SAMPLE_DEGREE);
        self.module.project(&v).expect("2×1")
    }

    pub fn random_functional(&self, rng: &mut SampleRng) -> Matrix<RingElement> {
        let v = random_ring_matrix(&self.ring, rng, 1, 2, SAMPLE_DEGREE);
        self.module.canonicalize(&v).expect("1×2")
    }

    pub fn random_block(&self, rng: &mut SampleRng) -> BlockElement {
        let r1 = RingElement::random(&self.ring, rng, SAMPLE_DEGREE);
        let mu = self.random_functional(rng);
        let m = self.random_module_element(rng);
        let r2 = RingElement::random(&self.ring, rng, SAMPLE_DEGREE);
        BlockElement { r1, mu, m, r2 }
    }

    fn frame(&self, z: &RationalPoint, presentation: FunctionalPresentation) -> Result<FiberFrame> {
        let field = self.field();
        let ez = self.module.idempotent().eval_at(z)?;
        let cz = self.module.complement().eval_at(z)?;
        let (generator, functional_row, coordinate) = match presentation {
            FunctionalPresentation::Projected => {
                let kernel = ez.kernel();
                let k = kernel.into_iter().next().ok_or_else(|| Error::Constraint("M(z) is zero".into()))?;
                let r = (0..2)
                    .find(|&r| cz.row(r).iter().any(|s| !s.is_zero()))
                    .expect("I − E(z) has rank one");
                let mut basis_row = vec![field.zero(); 2];
                basis_row[r] = field.one();
                let image = cz.row(r).to_vec();
                (k, basis_row, FunctionalCoordinate::RowMultiple(image))
            }
            FunctionalPresentation::Evaluated => {
                let c = (0..2)
                    .find(|&c| (0..2).any(|r| !cz.get(r, c).is_zero()))
                    .expect("I − E(z) has rank one");
                let k: Vec<Scalar> = (0..2).map(|r| cz.get(r, c).clone()).collect();
                let (idx, val) = first_nonzero(&k).expect("nonzero column");
                let mut basis_row = vec![field.zero(); 2];
                basis_row[idx] = val.inv().expect("nonzero");
                (k.clone(), basis_row, FunctionalCoordinate::ValueOn(k))
            }
        };
        let zero = RingElement::zero(&self.ring);
        let one = RingElement::one(&self.ring);
        let m0 = self.module.project(&column(&generator, &self.ring))?;
        let mu0 = self.module.canonicalize(&row(&functional_row, &self.ring))?;
        let basis = vec![
            BlockElement { r1: one.clone(), mu: self.zero_row(), m: self.zero_column(), r2: zero.clone() },
            BlockElement { r1: zero.clone(), mu: mu0, m: self.zero_column(), r2: zero.clone() },
            BlockElement { r1: zero.clone(), mu: self.zero_row(), m: m0, r2: zero.clone() },
            BlockElement { r1: zero, mu: self.zero_row(), m: self.zero_column(), r2: one },
        ];
        Ok(FiberFrame { basis, generator, functional: coordinate })
    }

    fn fiber_coordinates(&self, frame: &FiberFrame, x: &BlockElement, z: &RationalPoint) -> Result<Vec<Scalar>> {
        let r1 = eval_at_point(&x.r1, z)?;
        let r2 = eval_at_point(&x.r2, z)?;
        let mu = x.mu.eval_at(z)?.into_entries();
        let m = x.m.eval_at(z)?.into_entries();
        let mu_c = match &frame.functional {
            FunctionalCoordinate::RowMultiple(base) => proportion(&mu, base, "μ(z)")?,
            FunctionalCoordinate::ValueOn(k) => mu[0].mul(&k[0]).add(&mu[1].mul(&k[1])),
        };
        let m_c = proportion(&m, &frame.generator, "m(z)")?;
        Ok(vec![r1, mu_c, m_c, r2])
    }

    /// The four-dimensional fiber algebra at a fixed point, with the given
    /// coordinates on `M(z)*`.
    pub fn specialize_with(&self, z: &RationalPoint, presentation: FunctionalPresentation) -> Result<StructureAlgebra> {
        if !is_fixed_point(z, &self.lambda) {
            return Err(Error::NotFixed(z.name().to_string()));
        }
        let frame = self.frame(z, presentation)?;
        let field = self.field();
        StructureAlgebra::from_operations(
            field,
            4,
            vec![field.one(), field.zero(), field.zero(), field.one()],
            |i, j| self.fiber_coordinates(&frame, &self.block_mul(&frame.basis[i], &frame.basis[j]), z),
            |j| self.fiber_coordinates(&frame, &self.block_sigma(&frame.basis[j])?, z),
            FieldInvolution::Identity,
        )
    }
}

impl Specialize for SphereSetup {
    fn specialize_at(&self, z: &RationalPoint) -> Result<StructureAlgebra> {
        self.specialize_with(z, FunctionalPresentation::Projected)
    }
}

impl InvolutiveAlgebra for SphereSetup {
    type Elem = BlockElement;

    fn random_element(&self, rng: &mut SampleRng) -> BlockElement {
        self.random_block(rng)
    }

    fn random_central_pair(&self, rng: &mut SampleRng) -> (BlockElement, BlockElement) {
        let r = RingElement::random(&self.ring, rng, SAMPLE_DEGREE);
        let lr = self.lambda.apply_unchecked(&r);
        (self.block_scalar(&r), self.block_scalar(&lr))
    }

    fn add(&self, a: &BlockElement, b: &BlockElement) -> BlockElement {
        self.block_add(a, b)
    }

    fn mul(&self, a: &BlockElement, b: &BlockElement) -> BlockElement {
        self.block_mul(a, b)
    }

    fn sigma(&self, a: &BlockElement) -> BlockElement {
        self.block_sigma(a).expect("ε preserves M")
    }

    fn equal(&self, a: &BlockElement, b: &BlockElement) -> bool {
        a == b
    }

    fn describe(&self, a: &BlockElement) -> String {
        a.to_string()
    }
}

/// Everything the sphere pipeline establishes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SphereReport {
    pub checks: Validation,
    pub coarse_type: CoarseType,
    /// Presentation name to point name to fixed-subspace dimension.
    pub fixed_dimensions: BTreeMap<String, BTreeMap<String, usize>>,
    pub nonconstant: bool,
    pub not_ordinary: bool,
    pub justification: String,
}

/// Runs the full pipeline: setup facts, ε and ε*, ring-level and fiber-level
/// involution axioms, block algebra laws, fixed dimensions under both
/// functional presentations, and the coarse type at `p` and `q`.
///
/// With `parallel`, the independent randomized groups run concurrently; the
/// report is identical either way.
pub fn sphere_report(setup: &SphereSetup, samples: usize, seed: u64, parallel: bool) -> Result<SphereReport> {
    let eps = || epsilon_checks(setup, samples, seed);
    let block = || block_law_checks(setup, samples, seed.wrapping_add(1));
    let ring = || check_involution_axioms(setup, samples, seed.wrapping_add(2));
    let (eps, (block, ring)) = if parallel {
        rayon::join(eps, || rayon::join(block, ring))
    } else {
        (eps(), (block(), ring()))
    };
    let mut checks = Validation::new();
    checks.extend_prefixed("setup", setup.checks.clone());
    checks.extend_prefixed("epsilon", eps);
    checks.extend_prefixed("block", block);
    checks.extend_prefixed("ring_axioms", ring);

    let mut fixed_dimensions: BTreeMap<String, BTreeMap<String, usize>> = BTreeMap::new();
    for z in setup.fixed_points() {
        for pres in FunctionalPresentation::ALL {
            let fiber = setup.specialize_with(&z, pres)?;
            let prefix = format!("fiber_{}_{}", z.name(), pres.as_str());
            checks.extend_prefixed(&prefix, fiber.structure_checks());
            checks.extend_prefixed(&prefix, check_involution_axioms(&fiber, samples, seed.wrapping_add(3)));
            let dim = fiber.fixed_subspace_dimension()?;
            fixed_dimensions.entry(pres.as_str().to_string()).or_default().insert(z.name().to_string(), dim);
        }
        let dims: Vec<usize> = FunctionalPresentation::ALL
            .iter()
            .map(|p| fixed_dimensions[p.as_str()][z.name()])
            .collect();
        checks.record(
            format!("basis_independent_at_{}", z.name()),
            dims.windows(2).all(|w| w[0] == w[1]),
            format!("fixed dimensions {dims:?}"),
        );
    }
    let expected_dims = [("p", 3usize), ("q", 1usize)];
    for (name, expected) in expected_dims {
        let got = fixed_dimensions["projected"][name];
        checks.record(format!("fixed_dimension_at_{name}"), got == expected, format!("expected {expected}, got {got}"));
    }

    let ct = coarse_type(setup, &setup.fixed_points())?;
    let mut expected = CoarseType::new();
    expected.insert("p", 1)?;
    expected.insert("q", -1)?;
    checks.record("coarse_type", ct == expected, format!("{ct}"));
    let nonconstant = !ct.is_constant();
    checks.record("coarse_type_nonconstant", nonconstant, format!("{ct}"));
    let justification = if nonconstant {
        "the coarse type is nonconstant, while every ordinary involution has constant coarse type \
         when all units of the ring are constant"
            .to_string()
    } else {
        "the coarse type is constant, so this test does not decide ordinarity".to_string()
    };
    Ok(SphereReport { checks, coarse_type: ct, fixed_dimensions, nonconstant, not_ordinary: nonconstant, justification })
}

fn epsilon_checks(setup: &SphereSetup, samples: usize, seed: u64) -> Validation {
    let mut rng = seeded(seed);
    let mut preserves = None;
    let mut semilinear = None;
    let mut involutive = None;
    let mut star_semilinear = None;
    for _ in 0..samples {
        let m = setup.random_module_element(&mut rng);
        let r = RingElement::random(setup.ring(), &mut rng, SAMPLE_DEGREE);
        let lr = setup.lambda().apply_unchecked(&r);
        match setup.epsilon(&m) {
            Err(e) => {
                preserves.get_or_insert_with(|| e.to_string());
            }
            Ok(em) => {
                if setup.epsilon(&em).ok().as_ref() != Some(&m) {
                    involutive.get_or_insert_with(|| format!("m = {}", m.transpose()));
                }
                let scaled = setup.epsilon(&m.scale(&r)).ok();
                if scaled.as_ref() != Some(&em.scale(&lr)) {
                    semilinear.get_or_insert_with(|| format!("r = {r}, m = {}", m.transpose()));
                }
            }
        }
        let mu = setup.random_functional(&mut rng);
        let lhs = setup.epsilon_star(&setup.module().canonicalize(&mu.scale(&r)).expect("1×2"));
        let rhs = setup.epsilon_star(&mu).map(|x| x.scale(&lr));
        if lhs.ok() != rhs.ok() {
            star_semilinear.get_or_insert_with(|| format!("r = {r}, μ = {mu}"));
        }
    }
    let mut v = Validation::new();
    let detail = format!("{samples} samples, seed {seed}");
    for (name, w) in [
        ("preserves_module", preserves),
        ("semilinear", semilinear),
        ("squares_to_identity", involutive),
        ("dual_semilinear", star_semilinear),
    ] {
        v.record(name, w.is_none(), w.unwrap_or_else(|| detail.clone()));
    }
    v
}

fn block_law_checks(setup: &SphereSetup, samples: usize, seed: u64) -> Validation {
    let mut rng = seeded(seed);
    let unit = setup.block_unit();
    let mut unit_law = None;
    let mut assoc = None;
    let mut pairing = None;
    for _ in 0..samples {
        let x = setup.random_block(&mut rng);
        let y = setup.random_block(&mut rng);
        let z = setup.random_block(&mut rng);
        if setup.block_mul(&unit, &x) != x || setup.block_mul(&x, &unit) != x {
            unit_law.get_or_insert_with(|| format!("x = {x}"));
        }
        let left = setup.block_mul(&setup.block_mul(&x, &y), &z);
        let right = setup.block_mul(&x, &setup.block_mul(&y, &z));
        if left != right {
            assoc.get_or_insert_with(|| format!("x = {x}, y = {y}, z = {z}"));
        }
        let only_mu = BlockElement { r1: RingElement::zero(setup.ring()), mu: x.mu.clone(), m: setup.zero_column(), r2: RingElement::zero(setup.ring()) };
        let only_n = BlockElement { r1: RingElement::zero(setup.ring()), mu: setup.zero_row(), m: y.m.clone(), r2: RingElement::zero(setup.ring()) };
        let prod = setup.block_mul(&only_mu, &only_n);
        let value = x.mu.mul(&y.m).expect("1×2 by 2×1").get(0, 0).clone();
        let expected = BlockElement { r1: value, mu: setup.zero_row(), m: setup.zero_column(), r2: RingElement::zero(setup.ring()) };
        if prod != expected {
            pairing.get_or_insert_with(|| format!("μ = {}, n = {}", x.mu, y.m.transpose()));
        }
    }
    let mut v = Validation::new();
    let detail = format!("{samples} samples, seed {seed}");
    for (name, w) in [("unit_law", unit_law), ("associative", assoc), ("functional_pairing", pairing)] {
        v.record(name, w.is_none(), w.unwrap_or_else(|| detail.clone()));
    }
    v
}
