//! Consistency of `τ_m` with its pointwise forms: `λ(f)·f = 1`, and at each
//! fixed point `m(z)ᵀ = f(z)·m(z)` with `f(z)` equal to the coarse type.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::involutions::{make_transpose_involution, CoarseType, InvolutionType};
use crate::linalg::Matrix;
use crate::rings::{eval_at_point, is_fixed_point, RationalPoint, RingElement, RingInvolution};
use crate::validation::Validation;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrdinaryReport {
    pub factor: String,
    pub coarse_type: CoarseType,
    pub checks: Validation,
}

pub fn check_ordinary_extension(
    m: &Matrix<RingElement>,
    lambda: &RingInvolution,
    points: &[RationalPoint],
) -> Result<OrdinaryReport> {
    let alg = make_transpose_involution(m, lambda)?;
    let f = alg.factor().clone();
    let mut checks = Validation::new();
    let norm = alg.factor_norm();
    checks.record("lambda_f_times_f_is_one", norm == RingElement::one(alg.ring()), format!("f = {f}, λ(f)·f = {norm}"));

    let mut coarse = CoarseType::new();
    for z in points {
        let name = z.name();
        if !is_fixed_point(z, lambda) {
            checks.record(format!("{name}_fixed"), false, format!("{name} is not fixed by λ"));
            continue;
        }
        let mz = m.eval_at(z)?;
        let fz = eval_at_point(&f, z)?;
        checks.record(
            format!("form_at_{name}"),
            mz.transpose() == mz.scale(&fz),
            format!("m({name}) = {mz}, f({name}) = {fz}"),
        );
        let ty = alg.specialize(z)?.classify()?;
        let sign = ty.sign();
        let matches = match sign {
            Some(s) => fz == fz.field().from_i64(i64::from(s)),
            None => false,
        };
        checks.record(format!("factor_matches_coarse_type_at_{name}"), matches, format!("f({name}) = {fz}, type {ty}"));
        if let Some(s) = sign {
            coarse.insert(name, s)?;
        } else {
            debug_assert_eq!(ty, InvolutionType::Unitary);
        }
    }
    Ok(OrdinaryReport { factor: f.to_string(), coarse_type: coarse, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::symplectic_w;
    use crate::rings::{Field, QuotientRing};

    #[test]
    fn identity_w_and_diagonal_twists() {
        let r = QuotientRing::sphere(Field::prime(5).unwrap(), 2);
        let l = RingInvolution::sphere(&r);
        let f = r.field();
        let pts = vec![
            RationalPoint::new("p", vec![f.one(), f.zero(), f.zero()], &r).unwrap(),
            RationalPoint::new("q", vec![f.from_i64(-1), f.zero(), f.zero()], &r).unwrap(),
        ];
        let one = RingElement::one(&r);
        let zero = RingElement::zero(&r);
        let diag = Matrix::from_rows(vec![vec![one.clone(), zero.clone()], vec![zero, RingElement::var(&r, 0)]]).unwrap();
        for (m, factor, sign) in [(Matrix::identity(2, &one), "1", 1), (symplectic_w(&one), "4", -1), (diag, "1", 1)] {
            let rep = check_ordinary_extension(&m, &l, &pts).unwrap();
            assert!(rep.checks.passed(), "{}", rep.checks.failure_summary());
            assert_eq!(rep.factor, factor);
            assert_eq!(rep.coarse_type.get("p"), Some(sign));
            assert_eq!(rep.coarse_type.get("q"), Some(sign));
        }
    }
}
