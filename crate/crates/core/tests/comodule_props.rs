mod common;

use coalglab::coalgebra::orthogonal;
use coalglab::comodule::{cotensor, RightComodule};
use coalglab::exactlin::Matrix;
use coalglab::Comodule;
use common::{comodule_seed, corpus, generated, invertible, GF5};
use proptest::prelude::*;

fn sample((which, copies, raw, gens, basis): (usize, usize, Vec<i64>, usize, Vec<i64>)) -> Comodule {
    let c = corpus(GF5)[which].clone();
    generated(&c, copies, &raw, gens, &basis)
}

/// Pairs off pieces up to isomorphism.
fn same_pieces(a: &[Comodule], b: &[Comodule]) -> bool {
    let mut rest: Vec<&Comodule> = b.iter().collect();
    for x in a {
        match rest.iter().position(|y| x.is_isomorphic(y).unwrap()) {
            Some(i) => {
                rest.swap_remove(i);
            }
            None => return false,
        }
    }
    rest.is_empty()
}

proptest! {
    #![proptest_config(common::config(40))]

    #[test]
    fn cf_is_dual_to_the_annihilator(seed in comodule_seed()) {
        let m = sample(seed);
        prop_assert!(m.check().is_ok());
        prop_assert_eq!(orthogonal(&m.cf()), m.annihilator());
    }

    #[test]
    fn cf_is_additive_and_monotone(seed in comodule_seed(), other in comodule_seed()) {
        let m = sample(seed);
        let (_, _, raw, _, basis) = other;
        let n = generated(m.coalgebra(), 1, &raw, 1, &basis);
        prop_assert_eq!(m.direct_sum(&n).unwrap().cf(), m.cf().sum(&n.cf()));
        if m.dim() > 4 {
            return Ok(());
        }
        for sub in m.subcomodules(coalglab::comodule::SUBSPACE_BUDGET).unwrap() {
            let t = m.triple_for(&sub).unwrap();
            prop_assert!(t.sub.cf().is_subspace_of(&m.cf()));
            prop_assert_eq!(
                t.sub.dimension_vector().unwrap().plus(&t.quotient.dimension_vector().unwrap()),
                m.dimension_vector().unwrap()
            );
        }
    }

    #[test]
    fn decomposition_is_invariant_under_basis_change(seed in comodule_seed(), raw in prop::collection::vec(0i64..5, 144)) {
        let m = sample(seed);
        let pieces = m.decompose().unwrap();
        let mut w = Matrix::zeros(m.field(), m.dim(), 0);
        for (p, inc) in &pieces {
            prop_assert!(p.is_indecomposable().unwrap());
            w = w.hstack(inc);
        }
        prop_assert!(w.is_invertible());
        let sum = pieces.iter().skip(1).fold(pieces[0].0.clone(), |acc, (p, _)| acc.direct_sum(p).unwrap());
        prop_assert_eq!(&m.change_basis(&w).unwrap(), &sum);
        let moved = m.change_basis(&invertible(m.field(), m.dim(), &raw)).unwrap();
        let a: Vec<Comodule> = pieces.into_iter().map(|(p, _)| p).collect();
        let b: Vec<Comodule> = moved.decompose().unwrap().into_iter().map(|(p, _)| p).collect();
        prop_assert!(same_pieces(&a, &b));
    }

    #[test]
    fn cotensor_rank_nullity(seed in comodule_seed()) {
        let n = sample(seed);
        let c = n.coalgebra().clone();
        let m = RightComodule::regular(c);
        let k = cotensor(&m, &n).unwrap();
        let f = n.field();
        let mut sys = Matrix::zeros(f, 0, m.dim() * n.dim());
        for (p, q) in m.psi().iter().zip(n.phi()) {
            sys = sys.vstack(&p.kronecker(&Matrix::identity(f, n.dim())).sub(&Matrix::identity(f, m.dim()).kronecker(q)));
        }
        prop_assert_eq!(k.dim() + sys.rank(), m.dim() * n.dim());
        // The regular right comodule is a unit for the cotensor product.
        prop_assert_eq!(k.dim(), n.dim());
    }
}
