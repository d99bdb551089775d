//! Seeded sampling helpers shared by the randomized checks.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::Matrix;
use crate::rings::{Field, QuotientRing, RingElement, Scalar};

/// The generator behind every randomized check; seeded explicitly so runs replay.
pub type SampleRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_field_matrix(field: Field, rng: &mut SampleRng, rows: usize, cols: usize) -> Matrix<Scalar> {
    Matrix::from_fn(rows, cols, |_, _| field.random_scalar(rng))
}

pub fn random_ring_matrix(
    ring: &Arc<QuotientRing>,
    rng: &mut SampleRng,
    rows: usize,
    cols: usize,
    max_degree: u32,
) -> Matrix<RingElement> {
    Matrix::from_fn(rows, cols, |_, _| RingElement::random(ring, rng, max_degree))
}

/// A random invertible matrix that is symmetric (`skew = false`) or
/// skew-symmetric (`skew = true`). Skew-symmetric requires even `n`.
pub fn random_nondegenerate_form(field: Field, rng: &mut SampleRng, n: usize, skew: bool) -> Matrix<Scalar> {
    assert!(!skew || n.is_multiple_of(2), "nondegenerate skew forms need even size");
    loop {
        let a = random_field_matrix(field, rng, n, n);
        let t = a.transpose();
        let g = if skew { a.sub(&t) } else { a.add(&t) }.expect("square");
        if !g.field_determinant().expect("square").is_zero() {
            return g;
        }
    }
}
