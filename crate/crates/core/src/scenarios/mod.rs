//! Explicit constructions: the sphere endomorphism algebra, the 2×2 tuple
//! calculus and the ordinary-extension consistency check.

pub mod sphere;

pub use sphere::{build_sphere_setup, sphere_report, BlockElement, FunctionalPresentation, SphereReport, SphereSetup};
pub mod ordinary;
pub mod tuples;

pub use ordinary::{check_ordinary_extension, OrdinaryReport};
pub use tuples::{
    check_generates_mat2, fiber_involution_check, pgl2_act, project, standard_generators, tilde_sigma, FiberKind,
    FiberReport, TupleConfig, WORD_BOUND,
};
