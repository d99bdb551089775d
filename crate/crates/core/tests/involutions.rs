use azumaya_core::involutions::{
    adjoint_involution, check_involution_axioms, coarse_type, make_transpose_involution, tensor_involution,
    BilinearForm, InvolutionType, MatrixAlgebra,
};
use azumaya_core::linalg::{symplectic_w, Matrix};
use azumaya_core::rings::{
    eval_at_point, Field, FieldInvolution, QuotientRing, RationalPoint, RingElement, RingInvolution,
};
use azumaya_core::sample::{random_field_matrix, random_nondegenerate_form, random_ring_matrix, seeded, SampleRng};
use azumaya_core::Error;
use proptest::prelude::*;

fn sphere() -> (RingInvolution, Vec<RationalPoint>) {
    let ring = QuotientRing::sphere(Field::prime(5).unwrap(), 2);
    let f = ring.field();
    let pts = vec![
        RationalPoint::new("p", vec![f.one(), f.zero(), f.zero()], &ring).unwrap(),
        RationalPoint::new("q", vec![f.from_i64(-1), f.zero(), f.zero()], &ring).unwrap(),
    ];
    (RingInvolution::sphere(&ring), pts)
}

fn standard_twists(l: &RingInvolution) -> Vec<(&'static str, MatrixAlgebra)> {
    let r = l.ring();
    let one = RingElement::one(r);
    let zero = RingElement::zero(r);
    let diag = Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero, RingElement::var(r, 0)]]).unwrap();
    vec![
        ("I", make_transpose_involution(&Matrix::identity(2, &one), l).unwrap()),
        ("w", make_transpose_involution(&symplectic_w(&one), l).unwrap()),
        ("diag(1,x0)", make_transpose_involution(&diag, l).unwrap()),
    ]
}

/// `a ± λ(aᵀ)`, which satisfies `λ(mᵀ) = ±m`.
fn random_twist(l: &RingInvolution, rng: &mut SampleRng, n: usize, skew: bool) -> Matrix<RingElement> {
    let a = random_ring_matrix(l.ring(), rng, n, n, 1);
    let lt = a.transpose().apply_involution(l).unwrap();
    if skew {
        a.sub(&lt).unwrap()
    } else {
        a.add(&lt).unwrap()
    }
}

fn expected_dimension(n: usize, ty: InvolutionType) -> usize {
    match ty {
        InvolutionType::Orthogonal => (n * n + n) / 2,
        InvolutionType::Symplectic => (n * n - n) / 2,
        InvolutionType::Unitary => unreachable!(),
    }
}

#[test]
fn dichotomy_for_every_constructed_first_kind_involution() {
    let mut rng = seeded(3);
    for field in [Field::prime(5).unwrap(), Field::prime(7).unwrap(), Field::Rational] {
        for n in 1..=4 {
            for skew in [false, true] {
                if skew && n % 2 == 1 {
                    continue;
                }
                for _ in 0..3 {
                    let g = random_nondegenerate_form(field, &mut rng, n, skew);
                    let alg = adjoint_involution(&BilinearForm::new(g, FieldInvolution::Identity).unwrap()).unwrap();
                    let s = alg.field_structure().unwrap();
                    let dim = s.fixed_subspace_dimension().unwrap();
                    let ty = s.classify().unwrap();
                    assert!(dim == (n * n + n) / 2 || dim == (n * n - n) / 2, "n = {n}, dim = {dim}");
                    assert_eq!(dim, expected_dimension(n, ty));
                }
            }
        }
    }
}

#[test]
fn classifier_matches_form_symmetry() {
    let mut rng = seeded(4);
    for field in [Field::prime(5).unwrap(), Field::prime(7).unwrap()] {
        for i in 0..50 {
            let n = [2, 3, 4, 6][i % 4];
            let g = random_nondegenerate_form(field, &mut rng, n, false);
            let alg = adjoint_involution(&BilinearForm::new(g, FieldInvolution::Identity).unwrap()).unwrap();
            assert_eq!(alg.field_structure().unwrap().classify().unwrap(), InvolutionType::Orthogonal);
            let n = [2, 4, 6][i % 3];
            let g = random_nondegenerate_form(field, &mut rng, n, true);
            let alg = adjoint_involution(&BilinearForm::new(g, FieldInvolution::Identity).unwrap()).unwrap();
            assert_eq!(alg.field_structure().unwrap().classify().unwrap(), InvolutionType::Symplectic);
        }
    }
}

#[test]
fn hermitian_forms_give_unitary_involutions() {
    let f = Field::prime_square(5).unwrap();
    let g = Matrix::identity(3, &f.one());
    let alg = adjoint_involution(&BilinearForm::new(g, FieldInvolution::Conjugation).unwrap()).unwrap();
    let s = alg.field_structure().unwrap();
    assert_eq!(s.classify().unwrap(), InvolutionType::Unitary);
    assert!(matches!(s.fixed_subspace_dimension(), Err(Error::SecondKind)));
}

#[test]
fn forms_without_symmetry_are_rejected() {
    let f = Field::prime(7).unwrap();
    let g = Matrix::from_rows(vec![vec![f.one(), f.one()], vec![f.zero(), f.one()]]).unwrap();
    let err = adjoint_involution(&BilinearForm::new(g, FieldInvolution::Identity).unwrap()).unwrap_err();
    assert!(matches!(err, Error::NoUnitFactor(_)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn adjunction_identity(seed in any::<u64>(), n in 1usize..=4, skew in any::<bool>()) {
        let field = Field::prime(7).unwrap();
        let mut rng = seeded(seed);
        let skew = skew && n % 2 == 0;
        let g = random_nondegenerate_form(field, &mut rng, n, skew);
        let form = BilinearForm::new(g, FieldInvolution::Identity).unwrap();
        let alg = adjoint_involution(&form).unwrap();
        let m = random_field_matrix(field, &mut rng, n, n);
        let v = random_field_matrix(field, &mut rng, n, 1);
        let w = random_field_matrix(field, &mut rng, n, 1);
        let mv = m.mul(&v).unwrap();
        let sw = alg.apply_field(&m).unwrap().mul(&w).unwrap();
        prop_assert_eq!(form.pairing(mv.entries(), w.entries()).unwrap(), form.pairing(v.entries(), sw.entries()).unwrap());
    }

    #[test]
    fn random_twists_satisfy_the_pointwise_form_law(seed in any::<u64>(), n in 1usize..=3, skew in any::<bool>()) {
        let (l, pts) = sphere();
        let mut rng = seeded(seed);
        let m = random_twist(&l, &mut rng, n, skew);
        let alg = match make_transpose_involution(&m, &l) {
            Ok(a) => a,
            Err(Error::Singular) => return Ok(()),
            Err(e) => return Err(TestCaseError::fail(e.to_string())),
        };
        let one = RingElement::one(l.ring());
        prop_assert_eq!(alg.factor_norm(), one.clone());
        let expect = if skew { one.neg() } else { one };
        prop_assert_eq!(alg.factor(), &expect);
        for z in &pts {
            let mz = m.eval_at(z).unwrap();
            let fz = eval_at_point(alg.factor(), z).unwrap();
            prop_assert_eq!(mz.transpose(), mz.scale(&fz));
            if mz.rank() == n {
                let ty = alg.specialize(z).unwrap().classify().unwrap();
                prop_assert_eq!(ty.sign().map(i64::from).map(|s| z.values()[0].field().from_i64(s)), Some(fz));
            }
        }
    }

    #[test]
    fn tau_is_an_anti_automorphism(seed in any::<u64>()) {
        let (l, _) = sphere();
        for (_, alg) in standard_twists(&l).into_iter().take(2) {
            let v = check_involution_axioms(&alg, 4, seed);
            prop_assert!(v.passed(), "{}", v.failure_summary());
        }
    }
}

#[test]
fn tensor_coarse_types_multiply_pointwise() {
    let (l, pts) = sphere();
    let twists = standard_twists(&l);
    for (na, a) in &twists {
        let ca = coarse_type(a, &pts).unwrap();
        for (nb, b) in &twists {
            let cb = coarse_type(b, &pts).unwrap();
            let ab = tensor_involution(a, b).unwrap();
            assert_eq!(ab.degree(), 4);
            for z in &pts {
                let s = ab.specialize(z).unwrap();
                let dim = s.fixed_subspace_dimension().unwrap();
                let sign = ca.get(z.name()).unwrap() * cb.get(z.name()).unwrap();
                let expected = if sign == 1 { 10 } else { 6 };
                assert_eq!(dim, expected, "{na} ⊗ {nb} at {}", z.name());
            }
            assert_eq!(coarse_type(&ab, &pts).unwrap(), ca.product(&cb).unwrap());
        }
    }
}

#[test]
fn non_unit_determinant_is_handled_by_localization() {
    let (l, pts) = sphere();
    let diag = &standard_twists(&l)[2].1;
    assert!(!diag.is_unimodular());
    let n = random_ring_matrix(l.ring(), &mut seeded(9), 2, 2, 1);
    assert!(matches!(diag.apply_tau(&n), Err(Error::NonUnitDeterminant(_))));
    let ct = coarse_type(diag, &pts).unwrap();
    assert_eq!(ct.get("p"), Some(1));
    assert_eq!(ct.get("q"), Some(1));
}
