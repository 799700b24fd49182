mod common;

use coalglab::exactlin::{minpoly_factors, Field, Matrix, Poly};
use common::matrix;
use proptest::prelude::*;

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), Just(Field::Prime(5)), Just(Field::Prime(101))]
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    (field(), 0usize..5, 0usize..5, prop::collection::vec(-3i64..=3, 25))
        .prop_map(|(f, r, c, raw)| matrix(f, r, c, &raw))
}

proptest! {
    #![proptest_config(common::config(128))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let r = m.rref();
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.rank, r.pivots.len());
    }

    #[test]
    fn kernel_rows_are_annihilated(m in any_matrix()) {
        let k = m.kernel_basis();
        for v in k.row_vecs() {
            prop_assert!(m.mul_vec(&v).iter().all(|x| x.is_zero()));
        }
        prop_assert_eq!(m.rank() + k.rows(), m.cols());
        prop_assert_eq!(k.rank(), k.rows());
    }

    #[test]
    fn kronecker_is_associative(
        f in field(),
        dims in prop::collection::vec(1usize..=2, 6),
        raw in prop::collection::vec(-2i64..=2, 12),
    ) {
        let a = matrix(f, dims[0], dims[1], &raw);
        let b = matrix(f, dims[2], dims[3], &raw[4..]);
        let c = matrix(f, dims[4], dims[5], &raw[8..]);
        prop_assert_eq!(a.kronecker(&b).kronecker(&c), a.kronecker(&b.kronecker(&c)));
    }

    #[test]
    fn minpoly_annihilates_minimally(n in 1usize..=4, raw in prop::collection::vec(0i64..5, 16)) {
        let f = Field::Prime(5);
        let m = matrix(f, n, n, &raw);
        let factors = minpoly_factors(&m).unwrap();
        let assemble = |skip: Option<usize>| {
            factors.iter().enumerate().fold(Poly::one(f), |acc, (i, (p, e))| {
                let e = if Some(i) == skip { e - 1 } else { *e };
                acc.mul(&p.pow(e))
            })
        };
        prop_assert!(assemble(None).eval_matrix(&m).is_zero());
        for i in 0..factors.len() {
            prop_assert!(!assemble(Some(i)).eval_matrix(&m).is_zero());
        }
    }
}
