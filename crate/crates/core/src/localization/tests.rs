use super::*;
use crate::coalgebra::{path_coalgebra, Quiver};
use crate::comodule::SUBSPACE_BUDGET;
use crate::exactlin::Field;

const Q: Field = Field::Rational;

fn path(q: &Quiver, len: usize) -> Arc<Coalgebra> {
    Arc::new(path_coalgebra(Q, q, len).unwrap())
}

fn uv(c: &Arc<Coalgebra>) -> Comodule {
    let one = Q.one();
    Comodule::new(c.clone(), 2, vec![(0, 0, 0, one.clone()), (0, 2, 1, one.clone()), (1, 1, 1, one)]).unwrap()
}

#[test]
fn idempotent_examples() {
    let c = path(&Quiver::single_arrow(), 1);
    assert_eq!(lift_idempotent(&c, &["a", "b"]).unwrap().idempotent(), c.counit());
    assert!(lift_idempotent(&c, &[]).unwrap().idempotent().iter().all(Scalar::is_zero));
    assert_eq!(lift_idempotent(&c, &["a"]).unwrap().idempotent(), c.basis_vector(0).as_slice());
    assert!(lift_idempotent(&c, &["x"]).is_err());
    let m = Arc::new(Coalgebra::matrix_coalgebra(Q, 2));
    assert!(matches!(lift_idempotent(&m, &[]), Err(Error::NotPointed)));
}

#[test]
fn lifting_from_a_non_idempotent_start() {
    // grouplikes g, h and a (g, h)-cocycle x, in the basis g, g + x, h: the
    // coradical pivots give a starting functional that is not idempotent.
    let c0 = path(&Quiver::single_arrow(), 1);
    let change = Matrix::from_i64(Q, &[&[1, 0, 0], &[1, 0, 1], &[0, 1, 0]]);
    let c = Arc::new(c0.transport(&change, &[0, 2, 1]).unwrap());
    assert!(c.check().is_ok());
    for keep in [vec!["a"], vec!["b"]] {
        let p = lift_idempotent(&c, &keep).unwrap();
        let e = p.idempotent();
        assert_eq!(c.dual_mul(e, e), e);
        let loc = localize_coalgebra(&p).unwrap();
        assert_eq!(loc.coalgebra().dim(), 1);
    }
}

#[test]
fn localized_coalgebra_examples() {
    let c = path(&Quiver::single_arrow(), 1);
    let all = localize_coalgebra(&lift_idempotent(&c, &["a", "b"]).unwrap()).unwrap();
    assert_eq!(**all.coalgebra(), *c);
    let a = localize_coalgebra(&lift_idempotent(&c, &["a"]).unwrap()).unwrap();
    assert_eq!(a.image(), &c.span_of(&["a"]).unwrap());
    let cyc = path(&Quiver::two_cycle(), 2);
    let loc = localize_coalgebra(&lift_idempotent(&cyc, &["a"]).unwrap()).unwrap();
    assert_eq!(loc.image(), &cyc.span_of(&["a", "x.y"]).unwrap());
    assert!(loc.coalgebra().check().is_ok());
    assert_eq!(loc.coalgebra().labels(), &["a", "x.y"]);
}

#[test]
fn localized_comodule_examples() {
    let c = path(&Quiver::single_arrow(), 1);
    let loc = localize_coalgebra(&lift_idempotent(&c, &["a"]).unwrap()).unwrap();
    let sa = Comodule::simple_at(c.clone(), "a").unwrap();
    let (t, _) = localize_comodule(&loc, &sa).unwrap();
    assert_eq!(t.dim(), 1);
    assert!(t.check().is_ok());
    let sb = Comodule::simple_at(c.clone(), "b").unwrap();
    assert_eq!(localize_comodule(&loc, &sb).unwrap().0.dim(), 0);
    let (t, _) = localize_comodule(&loc, &uv(&c)).unwrap();
    assert_eq!(t.dim(), 1);
    assert!(t.check().is_ok());
}

#[test]
fn section_examples() {
    let c = path(&Quiver::single_arrow(), 1);
    let loc = localize_coalgebra(&lift_idempotent(&c, &["a"]).unwrap()).unwrap();
    let b = ec_bicomodule(&loc).unwrap();
    assert!(b.check().is_ok());
    let simple = Comodule::regular(loc.coalgebra().clone());
    let (s, _) = section_s(&loc, &simple).unwrap();
    assert_eq!(s.dim(), 1);
    assert!(s.check().is_ok());
    let report = verify_ts_identity(&loc, &[simple, Comodule::zero(loc.coalgebra().clone())]).unwrap();
    assert!(report.passed());
}

#[test]
fn section_of_ece_is_ec() {
    let c = path(&Quiver::two_cycle(), 2);
    let loc = localize_coalgebra(&lift_idempotent(&c, &["a"]).unwrap()).unwrap();
    let ece = Comodule::regular(loc.coalgebra().clone());
    let (s, _) = section_s(&loc, &ece).unwrap();
    let ec = ec_bicomodule(&loc).unwrap().left;
    assert!(s.is_isomorphic(&ec).unwrap());
    assert!(verify_ts_identity(&loc, &[ece]).unwrap().passed());
}

#[test]
fn t_is_exact_on_triples() {
    let c = path(&Quiver::single_arrow(), 1);
    for keep in [vec![], vec!["a"], vec!["b"], vec!["a", "b"]] {
        let loc = localize_coalgebra(&lift_idempotent(&c, &keep).unwrap()).unwrap();
        for m in [uv(&c), Comodule::regular(c.clone())] {
            for t in m.short_exact_triples(SUBSPACE_BUDGET).unwrap() {
                assert!(is_exact_on(&loc, &t).unwrap());
            }
        }
    }
}

#[test]
fn left_adjoint_round_trip() {
    let c = path(&Quiver::two_cycle(), 2);
    let loc = localize_coalgebra(&lift_idempotent(&c, &["a"]).unwrap()).unwrap();
    let local = loc.coalgebra().clone();
    for n in [Comodule::regular(local.clone()), Comodule::simple_at(local.clone(), "a").unwrap()] {
        let l = left_adjoint(&loc, &n).unwrap();
        assert!(l.check().is_ok());
        let (tl, _) = localize_comodule(&loc, &l).unwrap();
        assert!(tl.is_isomorphic(&n).unwrap());
    }
}
