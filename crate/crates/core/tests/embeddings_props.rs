mod common;

use coalglab::coalgebra::Quiver;
use coalglab::embeddings::{g_end_shape_holds, Functor, NilpotentFreeModule, QuiverRep};
use coalglab::exactlin::Matrix;
use common::{invertible, matrix, GF5};
use proptest::prelude::*;

/// Strictly upper triangular generators conjugated by a random invertible
/// matrix: nilpotent and commuting-free.
fn nilpotent() -> impl Strategy<Value = NilpotentFreeModule> {
    (1usize..=3, 1usize..=2, prop::collection::vec(0i64..5, 18), prop::collection::vec(0i64..5, 9)).prop_map(
        |(n, k, raw, p)| {
            let p = invertible(GF5, n, &p);
            let pinv = p.inverse().unwrap();
            let gens = (0..k)
                .map(|g| {
                    let mut m = Matrix::zeros(GF5, n, n);
                    for i in 0..n {
                        for j in i + 1..n {
                            m[(i, j)] = GF5.from_i64(raw[g * 9 + i * 3 + j]);
                        }
                    }
                    p.mul(&m).mul(&pinv)
                })
                .collect();
            NilpotentFreeModule::from_matrices(GF5, n, gens).unwrap()
        },
    )
}

fn kronecker_rep() -> impl Strategy<Value = QuiverRep> {
    (0usize..=2, 0usize..=2, prop::collection::vec(0i64..5, 8)).prop_map(|(a, b, raw)| {
        let maps = vec![matrix(GF5, b, a, &raw), matrix(GF5, b, a, &raw[4..])];
        QuiverRep::new(Quiver::kronecker(2), GF5, vec![a, b], maps).unwrap()
    })
}

proptest! {
    #![proptest_config(common::config(40))]

    #[test]
    fn g_has_the_triangular_end_shape(m in nilpotent()) {
        prop_assert!(g_end_shape_holds(&m).unwrap());
    }

    #[test]
    fn f_preserves_hom_dimensions(m in nilpotent(), n in nilpotent()) {
        if m.module().variables() != n.module().variables() {
            return Ok(());
        }
        let (x, y) = (m.module().action_module(), n.module().action_module());
        let f = Functor::f();
        prop_assert_eq!(
            f.apply(&x).unwrap().hom_space(&f.apply(&y).unwrap()).len(),
            x.hom_space(&y).len()
        );
    }

    #[test]
    fn constructions_are_additive(m in nilpotent(), n in nilpotent()) {
        if m.module().variables() != n.module().variables() {
            return Ok(());
        }
        let (x, y) = (m.module().action_module(), n.module().action_module());
        let functors = [
            Functor::f(),
            Functor::g(),
            Functor::shift(m.module().variables(), vec![GF5.from_i64(0), GF5.from_i64(1)]).unwrap(),
        ];
        for f in &functors {
            let whole = f.apply(&x.direct_sum(&y)).unwrap();
            let parts = f.apply(&x).unwrap().direct_sum(&f.apply(&y).unwrap());
            prop_assert!(whole.is_isomorphic(&parts).unwrap(), "{}", f.name);
        }
    }

    #[test]
    fn bounded_embedding_preserves_hom_both_ways(r in kronecker_rep(), s in kronecker_rep()) {
        let f = Functor::bounded(Quiver::kronecker(2), 2, vec![GF5.from_i64(1), GF5.from_i64(2)]).unwrap();
        let (x, y) = (r.action_module(), s.action_module());
        let (fx, fy) = (f.apply(&x).unwrap(), f.apply(&y).unwrap());
        prop_assert_eq!(fx.hom_space(&fy).len(), x.hom_space(&y).len());
        prop_assert_eq!(fy.hom_space(&fx).len(), y.hom_space(&x).len());
        let fsum = f.apply(&x.direct_sum(&y)).unwrap();
        prop_assert!(fsum.is_isomorphic(&fx.direct_sum(&fy)).unwrap());
    }
}
