#![allow(dead_code)]

use std::sync::Arc;

use coalglab::coalgebra::path_coalgebra;
use coalglab::exactlin::{Field, Matrix, Scalar};
use coalglab::{Coalgebra, Comodule, Quiver};
use proptest::prelude::*;

pub const GF5: Field = Field::Prime(5);

/// Integration tests have no source file to persist failures next to.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

/// Quivers on 1-3 vertices with at most 3 arrows.
pub fn quiver() -> impl Strategy<Value = Quiver> {
    (1usize..=3)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..=3)))
        .prop_map(|(n, arrows)| {
            let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let arrows = arrows
                .into_iter()
                .enumerate()
                .map(|(i, (s, t))| (format!("y{i}"), s, t))
                .collect();
            Quiver::new(vertices, arrows).unwrap()
        })
}

pub fn scalars(field: Field, raw: &[i64]) -> Vec<Scalar> {
    raw.iter().map(|&x| field.from_i64(x)).collect()
}

pub fn matrix(field: Field, rows: usize, cols: usize, raw: &[i64]) -> Matrix {
    Matrix::new(field, rows, cols, scalars(field, &raw[..rows * cols]))
}

/// A small fixed corpus of path coalgebras over `field`.
pub fn corpus(field: Field) -> Vec<Arc<Coalgebra>> {
    [
        (Quiver::single_arrow(), 1),
        (Quiver::kronecker(2), 1),
        (Quiver::loops(1), 2),
        (Quiver::line(3), 2),
        (Quiver::two_cycle(), 2),
    ]
    .into_iter()
    .map(|(q, n)| Arc::new(path_coalgebra(field, &q, n).unwrap()))
    .collect()
}

/// Invertible matrix from raw entries, falling back to the identity.
pub fn invertible(field: Field, n: usize, raw: &[i64]) -> Matrix {
    let m = matrix(field, n, n, raw);
    if m.is_invertible() {
        m
    } else {
        Matrix::identity(field, n)
    }
}

/// The subcomodule of `C` (or `C + C`) generated by the given vectors, in a
/// random basis.
pub fn generated(c: &Arc<Coalgebra>, copies: usize, raw: &[i64], gens: usize, basis: &[i64]) -> Comodule {
    let f = c.field();
    let mut m = Comodule::regular(c.clone());
    for _ in 1..copies {
        m = m.direct_sum(&Comodule::regular(c.clone())).unwrap();
    }
    let n = m.dim();
    let vectors: Vec<Vec<Scalar>> = (0..gens).map(|i| scalars(f, &raw[i * n..(i + 1) * n])).collect();
    let sub = m.action_module().generated_submodule(&vectors);
    let x = m.restrict(&sub.basis().transpose()).unwrap();
    let p = invertible(f, x.dim(), basis);
    x.change_basis(&p).unwrap()
}

/// Strategy for raw material sufficient for [`generated`] over `corpus`.
pub fn comodule_seed() -> impl Strategy<Value = (usize, usize, Vec<i64>, usize, Vec<i64>)> {
    (
        0usize..5,
        1usize..=2,
        prop::collection::vec(0i64..5, 24),
        1usize..=2,
        prop::collection::vec(0i64..5, 144),
    )
}
