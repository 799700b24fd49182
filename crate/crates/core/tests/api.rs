use std::sync::Arc;

use coalglab::acceptance::{run_criterion, AcceptanceConfig};
use coalglab::coalgebra::{path_coalgebra, wedge};
use coalglab::comodule::DimensionVector;
use coalglab::exactlin::Field;
use coalglab::ext::{cf_dimvec, ext1_dim};
use coalglab::localization::{lift_idempotent, localize_coalgebra, localize_comodule, section_s, ts_counit};
use coalglab::{Comodule, Quiver};

#[test]
fn arrow_coalgebra_end_to_end() {
    let f = Field::Rational;
    let c = Arc::new(path_coalgebra(f, &Quiver::single_arrow(), 1).unwrap());
    assert_eq!(c.labels(), ["a", "b", "x"]);
    let x = c.index_of("x").unwrap();
    let one = f.one();
    assert_eq!(c.delta(x), [(0, x, one.clone()), (x, 1, one.clone())]);

    // The extension 0 -> S_b -> Y -> S_a -> 0 realized on span{u, v}.
    let y = Comodule::new(c.clone(), 2, vec![(0, 0, 0, one.clone()), (0, x, 1, one.clone()), (1, 1, 1, one.clone())]).unwrap();
    assert!(y.check().is_ok());
    assert!(y.is_indecomposable().unwrap());
    assert!(y.cf().is_full());
    let sa = Comodule::simple_at(c.clone(), "a").unwrap();
    let sb = Comodule::simple_at(c.clone(), "b").unwrap();
    assert_eq!(ext1_dim(&sa, &sb).unwrap(), 1);
    assert_eq!(wedge(&c, &sa.cf(), &sb.cf()), y.cf());
    let d = y.dimension_vector().unwrap();
    assert_eq!(d, DimensionVector::from_pairs(&[("a", 1), ("b", 1)]));
    assert_eq!(cf_dimvec(&c, &d).unwrap(), y.cf());

    // Localizing at b keeps the socle S_b, and S undoes T on it.
    let loc = localize_coalgebra(&lift_idempotent(&c, &["b"]).unwrap()).unwrap();
    assert_eq!(loc.coalgebra().dim(), 1);
    let (ty, _) = localize_comodule(&loc, &y).unwrap();
    assert_eq!(ty.dim(), 1);
    let (s, _) = section_s(&loc, &ty).unwrap();
    assert_eq!(s.dim(), 2);
    assert!(s.is_isomorphic(&Comodule::regular(c.clone()).restrict(&c.span_of(&["b", "x"]).unwrap().basis().transpose()).unwrap()).unwrap());
    let (ts, map) = ts_counit(&loc, &ty).unwrap();
    assert_eq!(ts.dim(), 1);
    assert!(map.is_invertible());
}

#[test]
fn fast_criteria_pass_and_render() {
    let cfg = AcceptanceConfig::default();
    for id in [5, 6] {
        let r = run_criterion(id, &cfg);
        assert!(r.passed, "{r}");
        assert!(r.to_string().starts_with(&format!("criterion {id} [PASS]")));
        assert_eq!(run_criterion(id, &cfg), r);
    }
    assert!(!run_criterion(42, &cfg).passed);
}
