mod common;

use coalglab::oracle::{enumerate_comodules, ORACLE_BUDGET};
use coalglab::exactlin::Field;
use common::{corpus, generated};
use proptest::prelude::*;

proptest! {
    #![proptest_config(common::config(64))]

    /// A random comodule (a subcomodule of C or C + C generated by sparse
    /// vectors, in a random basis)
    /// is isomorphic to exactly one enumerated representative.
    #[test]
    fn random_comodules_match_one_class(
        which in 0usize..5,
        copies in 1usize..=2,
        gens in 1usize..=2,
        raw in prop::collection::vec(prop_oneof![4 => Just(0i64), 1 => 1i64..3], 24),
        basis in prop::collection::vec(0i64..3, 144),
    ) {
        let c = corpus(Field::Prime(3))[which].clone();
        let m = generated(&c, copies, &raw, gens, &basis);
        let d = m.dimension_vector().unwrap();
        if d.is_zero() || d.total() > 3 {
            return Ok(());
        }
        let classes = enumerate_comodules(&c, &d, ORACLE_BUDGET).unwrap();
        let hits = classes.iter().filter(|r| r.is_isomorphic(&m).unwrap()).count();
        prop_assert_eq!(hits, 1);
    }
}

#[test]
fn enumerated_classes_are_pairwise_non_isomorphic() {
    for c in corpus(Field::Prime(2)) {
        let labels = coalglab::ext::pointed_grouplikes(&c).unwrap().labels(&c);
        for d in coalglab::comodule::DimensionVector::all_up_to(&labels, 3) {
            let ms = enumerate_comodules(&c, &d, ORACLE_BUDGET).unwrap();
            for (i, a) in ms.iter().enumerate() {
                assert_eq!(a.dimension_vector().unwrap(), d);
                for b in &ms[i + 1..] {
                    assert!(!a.is_isomorphic(b).unwrap());
                }
            }
        }
    }
}
