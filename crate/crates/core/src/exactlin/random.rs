//! Seeded random field elements for randomized searches.

use rand::Rng;

use super::field::{Field, Scalar};
use super::matrix::Matrix;

/// Uniform over GF(p); small integers in `[-4, 4]` over the rationals.
pub fn random_scalar<R: Rng>(field: Field, rng: &mut R) -> Scalar {
    match field {
        Field::Rational => field.from_i64(rng.gen_range(-4..=4)),
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p) as i64),
    }
}

/// A random linear combination of the given matrices.
pub fn random_combination<R: Rng>(field: Field, basis: &[Matrix], rng: &mut R) -> Option<Matrix> {
    let first = basis.first()?;
    let mut acc = Matrix::zeros(field, first.rows(), first.cols());
    for b in basis {
        acc.axpy(&random_scalar(field, rng), b);
    }
    Some(acc)
}
