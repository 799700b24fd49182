//! Exact linear algebra over the rationals and prime fields.

mod algebra;
mod field;
mod matrix;
mod poly;
mod random;
mod subspace;

pub use algebra::{words_vanish, MatrixAlgebra};
pub use field::{is_prime, Field, Scalar, DEFAULT_PRIME};
pub use matrix::{dot, Matrix, Rref};
pub use poly::{factor, minpoly, minpoly_factors, squarefree, Poly};
pub use random::{random_combination, random_scalar};
pub use subspace::{all_subspaces, unit, Coordinatizer, Subspace};
