mod common;

use coalglab::coalgebra::{coradical_filtration, orthogonal, orthogonal_ideal_product, path_coalgebra, wedge};
use coalglab::exactlin::{all_subspaces, Field, Subspace};
use common::{corpus, quiver, scalars};
use proptest::prelude::*;

fn random_subspace(f: Field, n: usize, raw: &[i64], k: usize) -> Subspace {
    let rows: Vec<_> = (0..k).map(|i| scalars(f, &raw[i * n..(i + 1) * n])).collect();
    Subspace::span(f, n, &rows)
}

proptest! {
    #![proptest_config(common::config(64))]

    #[test]
    fn path_coalgebras_satisfy_the_axioms(q in quiver(), len in 0usize..=2) {
        let c = path_coalgebra(Field::Prime(3), &q, len).unwrap();
        prop_assert!(c.check().is_ok());
    }

    #[test]
    fn filtration_increases_to_the_whole_space(q in quiver(), len in 1usize..=2) {
        let c = path_coalgebra(Field::Rational, &q, len).unwrap();
        let f = coradical_filtration(&c).unwrap();
        prop_assert!(f.windows(2).all(|w| w[0].is_subspace_of(&w[1]) && w[0] != w[1]));
        prop_assert!(f.last().unwrap().is_full());
        let mut first: Vec<&str> = q.vertices().iter().map(String::as_str).collect();
        first.extend(q.arrows().iter().map(|(l, _, _)| l.as_str()));
        let c1 = if f.len() > 1 { &f[1] } else { &f[0] };
        prop_assert_eq!(c1, &c.span_of(&first).unwrap());
    }

    #[test]
    fn wedge_duality_and_monotonicity(
        which in 0usize..5,
        raw in prop::collection::vec(-2i64..=2, 40),
        kv in 0usize..=3,
        kw in 0usize..=3,
    ) {
        let c = &corpus(Field::Rational)[which];
        let n = c.dim();
        let v = random_subspace(c.field(), n, &raw, kv);
        let w = random_subspace(c.field(), n, &raw[20..], kw);
        let lhs = wedge(c, &v, &w);
        let rhs = orthogonal(&orthogonal_ideal_product(c, &orthogonal(&w), &orthogonal(&v)));
        prop_assert_eq!(&lhs, &rhs);
        let bigger_v = v.sum(&random_subspace(c.field(), n, &raw[12..], 1));
        prop_assert!(lhs.is_subspace_of(&wedge(c, &bigger_v, &w)));
        let bigger_w = w.sum(&random_subspace(c.field(), n, &raw[30..], 1));
        prop_assert!(lhs.is_subspace_of(&wedge(c, &v, &bigger_w)));
    }
}

#[test]
fn wedge_is_associative_on_subcoalgebras() {
    for c in corpus(Field::Prime(2)).into_iter().filter(|c| c.dim() <= 4) {
        let subs: Vec<Subspace> = all_subspaces(c.field(), c.dim(), 1 << 16)
            .unwrap()
            .into_iter()
            .filter(|s| c.is_subcoalgebra(s))
            .collect();
        assert!(subs.len() >= 3);
        for u in &subs {
            for v in &subs {
                let uv = wedge(&c, u, v);
                for w in &subs {
                    assert_eq!(wedge(&c, &uv, w), wedge(&c, u, &wedge(&c, v, w)));
                }
            }
        }
    }
}
