//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::process::Command;
use std::time::{Duration, Instant};

use azumaya_core::involutions::{
    adjoint_involution, check_involution_axioms, coarse_type, make_transpose_involution, tensor_involution,
    BilinearForm, InvolutionType, MatrixAlgebra, TensorProduct, AXIOM_NAMES,
};
use azumaya_core::linalg::{symplectic_w, Matrix};
use azumaya_core::report::Report;
use azumaya_core::rings::{eval_at_point, Field, FieldInvolution, QuotientRing, RationalPoint, RingElement, RingInvolution, Scalar};
use azumaya_core::sample::{random_field_matrix, random_nondegenerate_form, seeded};
use azumaya_core::scenarios::{
    build_sphere_setup, check_generates_mat2, check_ordinary_extension, fiber_involution_check, standard_generators,
    FiberKind,
};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gf(p: u64) -> Field {
    Field::prime(p).unwrap()
}

fn sphere_twists(field: Field) -> (RingInvolution, Vec<RationalPoint>, Vec<(&'static str, MatrixAlgebra)>) {
    let ring = QuotientRing::sphere(field, 2);
    let l = RingInvolution::sphere(&ring);
    let f = ring.field();
    let pts = vec![
        RationalPoint::new("p", vec![f.one(), f.zero(), f.zero()], &ring).unwrap(),
        RationalPoint::new("q", vec![f.from_i64(-1), f.zero(), f.zero()], &ring).unwrap(),
    ];
    let one = RingElement::one(&ring);
    let zero = RingElement::zero(&ring);
    let diag = Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero, RingElement::var(&ring, 0)]]).unwrap();
    let twists = vec![
        ("I", make_transpose_involution(&Matrix::identity(2, &one), &l).unwrap()),
        ("w", make_transpose_involution(&symplectic_w(&one), &l).unwrap()),
        ("diag(1,x0)", make_transpose_involution(&diag, &l).unwrap()),
    ];
    (l, pts, twists)
}

/// Unbounded span closure of the identity under right multiplication.
fn closure_generates(gens: &[Matrix<Scalar>]) -> bool {
    let one = gens[0].get(0, 0).field().one();
    let rank_of = |b: &[Matrix<Scalar>]| Matrix::from_rows(b.iter().map(|m| m.entries().to_vec()).collect()).unwrap().rank();
    let mut basis = vec![Matrix::identity(2, &one)];
    loop {
        let before = basis.len();
        for b in basis.clone() {
            for g in gens {
                let p = b.mul(g).unwrap();
                let mut trial = basis.clone();
                trial.push(p.clone());
                if rank_of(&trial) > basis.len() {
                    basis.push(p);
                }
            }
        }
        if basis.len() == before {
            return basis.len() == 4;
        }
    }
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for field in ["gf:5", "q"] {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_azumaya"))
            .args(["verify-sphere", "--field", field, "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(out.status.code() == Some(0), || format!("{field}: exit {:?}", out.status.code()))?;
        let report = Report::from_json(&String::from_utf8_lossy(&out.stdout)).map_err(|e| e.to_string())?;
        let ct = &report.results["coarse_type"];
        ensure(ct["p"] == 1 && ct["q"] == -1, || format!("{field}: coarse type {ct}"))?;
        ensure(report.results["nonconstant"] == true, || format!("{field}: reported constant"))?;
        let dims = &report.results["fixed_dimensions"];
        for pres in ["projected", "evaluated"] {
            ensure(dims[pres]["p"] == 3 && dims[pres]["q"] == 1, || format!("{field}: fixed dimensions {dims}"))?;
        }
        ensure(elapsed < Duration::from_secs(5), || format!("{field}: took {elapsed:.2?}"))?;
        notes.push(format!("{field} {{p: +1, q: -1}} in {elapsed:.2?}"));
    }
    Ok(notes.join("; "))
}

fn criterion_2() -> Outcome {
    for field in [gf(5), Field::gaussian()] {
        let s = build_sphere_setup(field).map_err(|e| e.to_string())?;
        let e = s.idempotent();
        let ring = s.ring();
        ensure(e.mul(e).unwrap() == *e, || "E² ≠ E".into())?;
        ensure(e.determinant().unwrap().is_zero(), || "det E ≠ 0".into())?;
        ensure(e.trace().unwrap() == RingElement::one(ring), || "trace E ≠ 1".into())?;
        let f = field;
        let ep = Matrix::from_rows(vec![vec![f.zero(), f.zero()], vec![f.zero(), f.one()]]).unwrap();
        let eq = Matrix::from_rows(vec![vec![f.one(), f.zero()], vec![f.zero(), f.zero()]]).unwrap();
        for (z, expected) in [(s.p(), ep), (s.q(), eq)] {
            let ez = e.eval_at(z).unwrap();
            ensure(ez.rank() == 1, || format!("rank E({}) = {}", z.name(), ez.rank()))?;
            ensure(ez == expected, || format!("E({}) = {ez}", z.name()))?;
        }
        ensure(s.setup_checks().passed(), || s.setup_checks().failure_summary())?;
    }
    Ok("E² = E, det 0, trace 1, rank 1, E(p) = [[0,0],[0,1]], E(q) = [[1,0],[0,0]] over gf:5 and q(i)".into())
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut results = Vec::new();
    let sphere = build_sphere_setup(gf(5)).unwrap();
    results.push(("σ (sphere)", check_involution_axioms(&sphere, 200, 0)));
    let (_, _, twists) = sphere_twists(gf(5));
    for (name, alg) in &twists {
        results.push((name, check_involution_axioms(alg, 200, 0)));
    }
    let gf25 = Field::prime_square(5).unwrap();
    let herm = adjoint_involution(&BilinearForm::new(Matrix::identity(2, &gf25.one()), FieldInvolution::Conjugation).unwrap())
        .map_err(|e| e.to_string())?;
    results.push(("conjugate transpose over gf:5^2", check_involution_axioms(&herm, 200, 0)));
    let elapsed = start.elapsed();
    for (name, v) in &results {
        ensure(v.items.len() == AXIOM_NAMES.len(), || format!("{name}: {} axioms checked", v.items.len()))?;
        ensure(v.passed(), || format!("{name}: {}", v.failure_summary()))?;
    }
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:.2?}"))?;
    Ok(format!("{} involutions × 4 axioms on 200 samples in {elapsed:.2?}", results.len()))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for p in [5, 7] {
        let mut rng = seeded(p);
        for skew in [false, true] {
            let sizes: &[usize] = if skew { &[2, 4, 6] } else { &[2, 3, 4, 6] };
            for i in 0..50 {
                let n = sizes[i % sizes.len()];
                let g = random_nondegenerate_form(gf(p), &mut rng, n, skew);
                let alg = adjoint_involution(&BilinearForm::new(g, FieldInvolution::Identity).unwrap()).map_err(|e| e.to_string())?;
                let s = alg.field_structure().map_err(|e| e.to_string())?;
                let dim = s.fixed_subspace_dimension().map_err(|e| e.to_string())?;
                let (want_dim, want_ty) = if skew {
                    ((n * n - n) / 2, InvolutionType::Symplectic)
                } else {
                    ((n * n + n) / 2, InvolutionType::Orthogonal)
                };
                ensure(dim == want_dim, || format!("gf:{p}, n = {n}, skew = {skew}: dim {dim}"))?;
                let ty = s.classify().map_err(|e| e.to_string())?;
                ensure(ty == want_ty, || format!("gf:{p}, n = {n}: classified {ty}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} forms over gf:5 and gf:7"))
}

fn criterion_5() -> Outcome {
    let (l, pts, twists) = sphere_twists(gf(5));
    for (name, alg) in &twists {
        let one = RingElement::one(l.ring());
        ensure(alg.factor_norm() == one, || format!("{name}: λ(f)·f = {}", alg.factor_norm()))?;
        let ct = coarse_type(alg, &pts).map_err(|e| e.to_string())?;
        for z in &pts {
            let fz = eval_at_point(alg.factor(), z).unwrap();
            let c = ct.get(z.name()).unwrap();
            ensure(fz == gf(5).from_i64(i64::from(c)), || format!("{name}: f({}) = {fz}, coarse {c}", z.name()))?;
        }
        let rep = check_ordinary_extension(alg.twist(), &l, &pts).map_err(|e| e.to_string())?;
        ensure(rep.checks.passed(), || format!("{name}: {}", rep.checks.failure_summary()))?;
    }
    Ok("m ∈ {I, w, diag(1,x0)}: λ(f)·f = 1, f(z) = coarse value at p and q".into())
}

fn criterion_6() -> Outcome {
    let s = build_sphere_setup(gf(5)).unwrap();
    let pts = s.fixed_points();
    let base = coarse_type(&s, &pts).map_err(|e| e.to_string())?;
    let cube = coarse_type(&TensorProduct::power(&s, 3).unwrap(), &pts).map_err(|e| e.to_string())?;
    ensure(cube == base, || format!("c = {base}, c(σ^⊗3) = {cube}"))?;
    let (_, pts, twists) = sphere_twists(gf(5));
    for (na, a) in &twists[..2] {
        for (nb, b) in &twists[..2] {
            let ab = tensor_involution(a, b).map_err(|e| e.to_string())?;
            for z in &pts {
                let ca = coarse_type(a, std::slice::from_ref(z)).unwrap().get(z.name()).unwrap();
                let cb = coarse_type(b, std::slice::from_ref(z)).unwrap().get(z.name()).unwrap();
                let spec = ab.specialize(z).map_err(|e| e.to_string())?;
                ensure(spec.dim() == 16, || "tensor fiber is not Mat4".into())?;
                let dim = spec.fixed_subspace_dimension().map_err(|e| e.to_string())?;
                let c_ab = match dim {
                    10 => 1,
                    6 => -1,
                    d => return Err(format!("{na} ⊗ {nb} at {}: fixed dimension {d}", z.name())),
                };
                ensure(c_ab == ca * cb, || format!("{na} ⊗ {nb} at {}: {c_ab} ≠ {ca}·{cb}", z.name()))?;
            }
        }
    }
    Ok(format!("c(σ^⊗3) = c(σ) = {base}; multiplicative on {{τ_I, τ_w}}² at p and q"))
}

fn criterion_7() -> Outcome {
    let f = gf(5);
    let gens = standard_generators(f);
    let w = symplectic_w(&f.one());
    let mut rng = seeded(7);
    for _ in 0..10 {
        let m = random_field_matrix(f, &mut rng, 2, 2);
        let o = fiber_involution_check(FiberKind::O, &gens, &m).map_err(|e| e.to_string())?;
        ensure(o.involution_type == InvolutionType::Orthogonal && o.checks.passed(), || format!("kind o: {}", o.involution_type))?;
        let s = fiber_involution_check(FiberKind::S, &gens, &m).map_err(|e| e.to_string())?;
        ensure(s.involution_type == InvolutionType::Symplectic && s.checks.passed(), || format!("kind s: {}", s.involution_type))?;
        let expected = w.mul(&m.transpose()).unwrap().mul(&w).unwrap().neg();
        let rows: Vec<Vec<String>> = expected.to_rows().iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        ensure(s.m_image == rows, || format!("m = {m}: image {:?}", s.m_image))?;
    }
    Ok("kind o orthogonal, kind s symplectic, m ↦ −w·mᵀ·w recovered via h = w".into())
}

fn criterion_8() -> Outcome {
    let f = gf(5);
    let one = f.one();
    let (e11, e12, e21, e22) =
        (Matrix::unit(2, 0, 0, &one), Matrix::unit(2, 0, 1, &one), Matrix::unit(2, 1, 0, &one), Matrix::unit(2, 1, 1, &one));
    ensure(check_generates_mat2(&[e12, e21]), || "(e12, e21) should generate".into())?;
    ensure(!check_generates_mat2(&[e11, e22]), || "(e11, e22) should not generate".into())?;
    let mut rng = seeded(8);
    let mut generating = 0;
    for _ in 0..200 {
        let gens: Vec<_> = (0..3).map(|_| random_field_matrix(f, &mut rng, 2, 2)).collect();
        let bounded = check_generates_mat2(&gens);
        ensure(bounded == closure_generates(&gens), || format!("disagreement on {gens:?}"))?;
        generating += usize::from(bounded);
    }
    Ok(format!("200 triples agree ({generating} generating); fixed cases correct"))
}

fn criterion_9() -> Outcome {
    let f = gf(7);
    let mut rng = seeded(9);
    for _ in 0..100 {
        let n = rng.gen_range(1..=4);
        let skew = n % 2 == 0 && rng.gen_bool(0.5);
        let g = random_nondegenerate_form(f, &mut rng, n, skew);
        let form = BilinearForm::new(g, FieldInvolution::Identity).unwrap();
        let alg = adjoint_involution(&form).map_err(|e| e.to_string())?;
        let m = random_field_matrix(f, &mut rng, n, n);
        let v = random_field_matrix(f, &mut rng, n, 1);
        let w = random_field_matrix(f, &mut rng, n, 1);
        let lhs = form.pairing(m.mul(&v).unwrap().entries(), w.entries()).unwrap();
        let sm = alg.apply_field(&m).map_err(|e| e.to_string())?;
        let rhs = form.pairing(v.entries(), sm.mul(&w).unwrap().entries()).unwrap();
        ensure(lhs == rhs, || format!("G = {}, M = {m}: {lhs} ≠ {rhs}", form.gram()))?;
    }
    Ok("100 samples over gf:7, n ≤ 4".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("sphere coarse type", criterion_1),
        ("sphere setup facts", criterion_2),
        ("involution axioms", criterion_3),
        ("orthogonal/symplectic dichotomy", criterion_4),
        ("ordinary extension", criterion_5),
        ("tensor law", criterion_6),
        ("fiber involutions", criterion_7),
        ("generation oracle", criterion_8),
        ("adjunction identity", criterion_9),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS criterion {} ({name}) [{elapsed:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {} ({name}) [{elapsed:.2?}]: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
