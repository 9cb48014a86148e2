//! Exact integer linear algebra and integer polynomial arithmetic.

mod factor;
mod matrix;
mod poly;

pub use factor::{factor_over_integers, Factorization, MAX_KRONECKER_DEGREE};
pub use matrix::{kernel_basis, minimal_polynomial, IntMatrix};
pub(crate) use matrix::{last_dependence, relation_to_monic};
pub use poly::{synthetic_divide, IntPoly};
