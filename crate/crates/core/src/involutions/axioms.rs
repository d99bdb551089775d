//! Randomized and exhaustive checks of the involution axioms.

use crate::sample::{seeded, SampleRng};
use crate::validation::Validation;

use super::structure::StructureAlgebra;

/// The operations the axiom checker needs from an algebra with involution.
pub trait InvolutiveAlgebra {
    type Elem: Clone;

    fn random_element(&self, rng: &mut SampleRng) -> Self::Elem;
    /// A random central element `r·1` together with `λ(r)·1`.
    fn random_central_pair(&self, rng: &mut SampleRng) -> (Self::Elem, Self::Elem);
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sigma(&self, a: &Self::Elem) -> Self::Elem;
    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    fn describe(&self, a: &Self::Elem) -> String;

    /// A finite basis for exhaustive checks, when one is available.
    fn basis(&self) -> Vec<Self::Elem> {
        Vec::new()
    }
}

pub const AXIOM_NAMES: [&str; 4] = ["additive", "anti_multiplicative", "squares_to_identity", "semilinear_on_center"];

#[derive(Default)]
struct AxiomWitnesses {
    additive: Option<String>,
    anti_multiplicative: Option<String>,
    squares_to_identity: Option<String>,
    semilinear_on_center: Option<String>,
}

/// Checks additivity, `σ(ab) = σ(b)σ(a)`, `σ² = id` and `σ(r·1) = λ(r)·1` on
/// `samples` random inputs drawn from `seed`, then exhaustively on the basis.
/// Each axiom reports the first failing witness.
pub fn check_involution_axioms<A: InvolutiveAlgebra + ?Sized>(alg: &A, samples: usize, seed: u64) -> Validation {
    let mut rng = seeded(seed);
    let mut w = AxiomWitnesses::default();
    for _ in 0..samples {
        let a = alg.random_element(&mut rng);
        let b = alg.random_element(&mut rng);
        check_pair(alg, &a, &b, &mut w);
        let (r, lr) = alg.random_central_pair(&mut rng);
        if w.semilinear_on_center.is_none() && !alg.equal(&alg.sigma(&r), &lr) {
            w.semilinear_on_center = Some(format!("σ({}) ≠ {}", alg.describe(&r), alg.describe(&lr)));
        }
    }
    let basis = alg.basis();
    for a in &basis {
        for b in &basis {
            check_pair(alg, a, b, &mut w);
        }
    }
    let mut v = Validation::new();
    let detail = format!("{samples} samples, seed {seed}, {} basis elements", basis.len());
    for (name, witness) in AXIOM_NAMES.iter().zip([
        w.additive,
        w.anti_multiplicative,
        w.squares_to_identity,
        w.semilinear_on_center,
    ]) {
        match witness {
            Some(wit) => v.record(*name, false, wit),
            None => v.record(*name, true, detail.clone()),
        }
    }
    v
}

fn check_pair<A: InvolutiveAlgebra + ?Sized>(alg: &A, a: &A::Elem, b: &A::Elem, w: &mut AxiomWitnesses) {
    let sa = alg.sigma(a);
    let sb = alg.sigma(b);
    if w.additive.is_none() && !alg.equal(&alg.sigma(&alg.add(a, b)), &alg.add(&sa, &sb)) {
        w.additive = Some(format!("a = {}, b = {}", alg.describe(a), alg.describe(b)));
    }
    if w.anti_multiplicative.is_none() && !alg.equal(&alg.sigma(&alg.mul(a, b)), &alg.mul(&sb, &sa)) {
        w.anti_multiplicative = Some(format!("a = {}, b = {}", alg.describe(a), alg.describe(b)));
    }
    if w.squares_to_identity.is_none() && !alg.equal(&alg.sigma(&sa), a) {
        w.squares_to_identity = Some(format!("a = {}", alg.describe(a)));
    }
}

impl InvolutiveAlgebra for StructureAlgebra {
    type Elem = Vec<crate::rings::Scalar>;

    fn random_element(&self, rng: &mut SampleRng) -> Self::Elem {
        (0..self.dim()).map(|_| self.field().random_scalar(rng)).collect()
    }

    fn random_central_pair(&self, rng: &mut SampleRng) -> (Self::Elem, Self::Elem) {
        let r = self.field().random_scalar(rng);
        let lr = r.apply(self.field_involution());
        (self.scale(&r, self.unit()), self.scale(&lr, self.unit()))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        StructureAlgebra::add(self, a, b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.multiply(a, b)
    }

    fn sigma(&self, a: &Self::Elem) -> Self::Elem {
        StructureAlgebra::sigma(self, a)
    }

    fn equal(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn describe(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.iter().map(|s| s.to_string()).collect();
        format!("({})", parts.join(", "))
    }

    fn basis(&self) -> Vec<Self::Elem> {
        (0..self.dim()).map(|i| self.basis_vector(i)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Field, FieldInvolution};

    #[test]
    fn identity_map_fails_only_anti_multiplicativity() {
        let f = Field::prime(5).unwrap();
        let a = StructureAlgebra::matrix_algebra(f, 2, |m| Ok(m.clone()), FieldInvolution::Identity).unwrap();
        let v = check_involution_axioms(&a, 20, 0);
        let failed: Vec<&str> = v.failures().map(|c| c.name.as_str()).collect();
        assert_eq!(failed, vec!["anti_multiplicative"]);
    }

    #[test]
    fn transpose_passes() {
        let f = Field::prime(7).unwrap();
        let a = StructureAlgebra::matrix_algebra(f, 3, |m| Ok(m.transpose()), FieldInvolution::Identity).unwrap();
        assert!(check_involution_axioms(&a, 30, 1).passed());
    }
}
