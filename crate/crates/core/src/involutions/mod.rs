//! Algebras with involution: twisted transposes over a ring, structure-constant
//! algebras over a field, classification, coarse types and tensor products.

pub mod axioms;
pub mod coarse;
pub mod matrix_algebra;
pub mod structure;

pub use axioms::{check_involution_axioms, InvolutiveAlgebra, AXIOM_NAMES};
pub use coarse::{coarse_type, coarse_type_parallel, CoarseType, Specialize, TensorProduct};
pub use matrix_algebra::{
    adjoint_involution, make_transpose_involution, tensor_involution, BilinearForm, LocalizedMatrix, MatrixAlgebra,
};
pub use structure::{InvolutionType, StructureAlgebra};
