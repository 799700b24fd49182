use super::*;
use crate::coalgebra::path_coalgebra;
use crate::exactlin::Scalar;

const GF5: Field = Field::Prime(5);
const BUDGET: u128 = 1 << 20;

fn m(field: Field, rows: &[&[i64]]) -> Matrix {
    Matrix::from_i64(field, rows)
}

fn scalars(field: Field, xs: &[i64]) -> Vec<Scalar> {
    xs.iter().map(|&x| field.from_i64(x)).collect()
}

#[test]
fn nilpotency_is_checked() {
    let j = m(GF5, &[&[0, 1], &[0, 0]]);
    assert!(NilpotentFreeModule::from_matrices(GF5, 2, vec![j.clone()]).is_ok());
    let jt = j.transpose();
    assert!(NilpotentFreeModule::from_matrices(GF5, 2, vec![j, jt]).is_err());
}

#[test]
fn functor_f_examples() {
    let k = NilpotentFreeModule::from_matrices(GF5, 1, vec![m(GF5, &[&[0]]), m(GF5, &[&[0]])]).unwrap();
    let r = functor_f(&k);
    assert_eq!(r.dims(), &[1, 1]);
    assert_eq!(r.maps()[0], m(GF5, &[&[1]]));
    assert!(r.maps()[1].is_zero() && r.maps()[2].is_zero());
    let jordan = NilpotentFreeModule::from_matrices(GF5, 2, vec![m(GF5, &[&[0, 1], &[0, 0]])]).unwrap();
    assert!(functor_f(&jordan).action_module().is_indecomposable().unwrap());
}

#[test]
fn functor_g_examples() {
    let k = NilpotentFreeModule::from_matrices(GF5, 1, vec![]).unwrap();
    let g = functor_g(&k).unwrap();
    assert_eq!(g.dim(), 2);
    assert!(g.check().is_ok());
    assert!(g.is_indecomposable().unwrap());
    assert!(g_end_shape_holds(&k).unwrap());
    let jordan = NilpotentFreeModule::from_matrices(GF5, 2, vec![m(GF5, &[&[0, 1], &[0, 0]])]).unwrap();
    assert!(g_end_shape_holds(&jordan).unwrap());
    let gj = functor_g(&jordan).unwrap();
    // End(G(M)) = {(a b; 0 a)}: End(M) plus an unconstrained corner.
    assert_eq!(gj.hom_space(&gj).unwrap().len(), 2 + 4);
}

#[test]
fn shift_examples() {
    let k = FreeModule::new(GF5, 1, vec![]).unwrap();
    let s = shift_embedding(&k, 2, &scalars(GF5, &[0, 1])).unwrap();
    assert_eq!(s.dim(), 2);
    assert_eq!(s.gens()[2], m(GF5, &[&[0, 0], &[0, 1]]));
    assert_eq!(s.gens()[1], m(GF5, &[&[0, 1], &[0, 0]]));
    assert!(shift_embedding(&k, 2, &scalars(GF5, &[1, 1])).is_err());
    let jordan = FreeModule::new(GF5, 2, vec![m(GF5, &[&[0, 1], &[0, 0]])]).unwrap();
    let out = shift_embedding(&jordan, 3, &scalars(GF5, &[0, 1, 2])).unwrap().action_module();
    let end = jordan.action_module().hom_space(&jordan.action_module()).len();
    assert_eq!(out.hom_space(&out).len(), end);
    // Endomorphisms are block diagonal with equal blocks commuting with X.
    let x = &jordan.gens()[0];
    for theta in out.hom_space(&out) {
        let b0 = theta.block(0, 0, 2, 2);
        assert_eq!(b0.mul(x), x.mul(&b0));
        for i in 0..3 {
            for j in 0..3 {
                let b = theta.block(2 * i, 2 * j, 2, 2);
                if i == j {
                    assert_eq!(b, b0);
                } else {
                    assert!(b.is_zero());
                }
            }
        }
    }
}

#[test]
fn bounded_examples() {
    let f = Field::Prime(7);
    let q = Quiver::kronecker(2);
    let lam = scalars(f, &[1, 2]);
    let simple = QuiverRep::new(q.clone(), f, vec![1, 0], vec![Matrix::zeros(f, 0, 1), Matrix::zeros(f, 0, 1)]).unwrap();
    let out = bounded_quiver_embedding(&simple, 2, &lam).unwrap();
    assert_eq!(out.dim(), 1);
    assert_eq!(out.gens()[0], m(f, &[&[1]]));
    let r = QuiverRep::new(q.clone(), f, vec![1, 1], vec![m(f, &[&[1]]), m(f, &[&[0]])]).unwrap();
    let out = bounded_quiver_embedding(&r, 2, &lam).unwrap();
    assert_eq!(out.gens()[0], m(f, &[&[1, 0], &[0, 2]]));
    assert_eq!(out.gens()[1], m(f, &[&[0, 0], &[1, 0]]));
    assert!(out.gens()[2].is_zero());
    assert!(bounded_quiver_embedding(&r, 1, &lam).is_err());
    assert!(bounded_quiver_embedding(&r, 2, &scalars(f, &[1, 1])).is_err());
}

#[test]
fn reps_as_comodules() {
    let f = Field::Prime(7);
    let q = Quiver::kronecker(2);
    let c = std::sync::Arc::new(path_coalgebra(f, &q, 1).unwrap());
    for r in quiver_reps_up_to(f, &q, 2, BUDGET).unwrap() {
        let cm = r.to_comodule(&c).unwrap();
        assert_eq!(cm.dim(), r.total_dim());
        let back = QuiverRep::from_comodule(&q, &cm).unwrap();
        assert!(back.action_module().is_isomorphic(&r.action_module()).unwrap());
        assert_eq!(cm.hom_space(&cm).unwrap().len(), r.action_module().hom_space(&r.action_module()).len());
    }
    let l = Quiver::loops(1);
    let c = std::sync::Arc::new(path_coalgebra(f, &l, 1).unwrap());
    let j = QuiverRep::new(l.clone(), f, vec![2], vec![m(f, &[&[0, 1], &[0, 0]])]).unwrap();
    assert!(j.to_comodule(&c).is_ok());
    let bad = QuiverRep::new(l, f, vec![1], vec![m(f, &[&[1]])]).unwrap();
    assert!(bad.to_comodule(&c).is_err());
}

#[test]
fn corpus_counts() {
    assert_eq!(nilpotent_modules(GF5, 1, 2, BUDGET).unwrap().len(), 1);
    assert_eq!(nilpotent_modules(GF5, 2, 1, BUDGET).unwrap().len(), 2);
    // S (+) S and one indecomposable per point of P^1(GF(5)).
    assert_eq!(nilpotent_modules(GF5, 2, 2, BUDGET).unwrap().len(), 7);
    let f = Field::Prime(7);
    // Kronecker reps of total dimension <= 2: S_a, S_b, and for (1,1) the
    // split one plus P^1(GF(7)).
    assert_eq!(quiver_reps_up_to(f, &Quiver::kronecker(2), 2, BUDGET).unwrap().len(), 2 + 2 + 1 + 8);
}

#[test]
fn harness_on_small_corpus() {
    let corpus: Vec<_> = (1..=2)
        .flat_map(|d| nilpotent_modules(GF5, d, 1, BUDGET).unwrap())
        .map(|m| m.module().action_module())
        .collect();
    for functor in [Functor::identity(), Functor::f(), Functor::g()] {
        let r = verify_representation_embedding(&functor, &corpus).unwrap();
        assert!(r.passed(), "{r}");
    }
    let r = verify_representation_embedding(&Functor::zero(), &corpus).unwrap();
    assert!(r.failures("iso-reflection") > 0);
    assert!(!r.passed());
}
