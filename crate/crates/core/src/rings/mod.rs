//! Exact scalar and polynomial arithmetic.

pub mod field;
pub mod involution;
pub mod parse;
pub mod poly;
pub mod quotient;
mod rat;

pub use field::{Field, FieldInvolution, Scalar};
pub use involution::{eval_at_point, is_fixed_point, RationalPoint, RingInvolution};
pub use parse::{parse_polynomial, parse_scalar, parse_scalar_list};
pub use poly::{Monomial, Polynomial};
pub use quotient::{normal_form, ring_equal, QuotientRing, RingElement};
