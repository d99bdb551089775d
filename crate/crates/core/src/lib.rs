//! Exact computation with algebras carrying an involution.
//!
//! The crate is layered bottom-up:
//!
//! * [`rings`]: scalars (rationals, prime fields, quadratic extensions),
//!   sparse polynomials, single-relation quotient rings with canonical normal
//!   forms, ring involutions and rational points.
//! * [`linalg`]: dense exact matrices, Kronecker products and projective
//!   modules presented by idempotents.
//! * [`involutions`]: matrix algebras with `τ_m` involutions, structure-constant
//!   algebras, orthogonal/symplectic/unitary classification and coarse types.
//! * [`scenarios`]: the sphere-ring endomorphism algebra `End(R₂ ⊕ M)`, the
//!   2×2 tuple calculus and the ordinary-extension check.
//! * [`report`] and [`io`]: JSON reports and the matrix/tuple file formats.

pub mod error;
pub mod involutions;
pub mod io;
pub mod linalg;
pub mod report;
pub mod rings;
pub mod sample;
pub mod scenarios;
pub mod validation;

pub use error::{Error, Result};
