//! Dense exact linear algebra.

pub mod element;
pub mod matrix;
pub mod module;

pub use element::{Element, FieldElement};
pub use matrix::{symplectic_w, Matrix};
pub use module::{dual_canonicalize, module_from_idempotent, IdempotentModule};
