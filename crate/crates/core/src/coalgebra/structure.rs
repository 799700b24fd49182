//! Wedge, coradical, coradical filtration and grouplike elements.

use super::{quotient_map, Coalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Scalar, Subspace};

/// `X^perp` in `C*` under the dual-basis pairing.
pub fn orthogonal(x: &Subspace) -> Subspace {
    x.orthogonal()
}

/// Span of all products `a_i b_j` of basis elements, in `C*`.
pub fn orthogonal_ideal_product(c: &Coalgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut rows = Vec::new();
    for f in a.vectors() {
        for g in b.vectors() {
            rows.push(c.dual_mul(&f, &g));
        }
    }
    Subspace::span(c.field(), c.dim(), &rows)
}

/// `V ^ W = Delta^{-1}(V (x) C + C (x) W)`, as the kernel of `Delta` followed
/// by the quotient map onto `C/V (x) C/W`.
pub fn wedge(c: &Coalgebra, v: &Subspace, w: &Subspace) -> Subspace {
    let m = c.tensor_after_delta(&quotient_map(v), &quotient_map(w));
    if m.rows() == 0 {
        return Subspace::full(c.field(), c.dim());
    }
    Subspace::from_rows(&m.kernel_basis())
}

/// `C_0 = J(C*)^perp`.
pub fn coradical(c: &Coalgebra) -> Result<Subspace> {
    let j = c.dual_algebra().radical()?;
    Ok(j.orthogonal())
}

/// `C_0, C_1 = C_0 ^ C_0, ..., C_n = C_{n-1} ^ C_0`, stopping at `C`.
pub fn coradical_filtration(c: &Coalgebra) -> Result<Vec<Subspace>> {
    let c0 = coradical(c)?;
    let mut out = vec![c0.clone()];
    loop {
        let last = out.last().unwrap();
        if last.is_full() {
            return Ok(out);
        }
        let next = wedge(c, last, &c0);
        if &next == last {
            return Err(Error::CheckFailed(
                "coradical filtration stabilized below the whole coalgebra".into(),
            ));
        }
        out.push(next);
    }
}

/// Grouplike elements and the coradical they were found in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grouplikes {
    /// Coordinate vectors, ordered by their first nonzero coordinate.
    pub elements: Vec<Vec<Scalar>>,
    pub coradical: Subspace,
}

impl Grouplikes {
    pub fn span(&self) -> Subspace {
        let ambient = self.coradical.ambient_dim();
        Subspace::span(self.coradical.field(), ambient, &self.elements)
    }

    /// Label of each grouplike: the basis label at its first nonzero
    /// coordinate.
    pub fn labels(&self, c: &Coalgebra) -> Vec<String> {
        self.elements
            .iter()
            .map(|g| {
                let i = g.iter().position(|x| !x.is_zero()).unwrap();
                c.labels()[i].clone()
            })
            .collect()
    }

    pub fn is_pointed(&self) -> bool {
        self.span() == self.coradical
    }
}

/// All grouplikes `Delta g = g (x) g`, `eps(g) = 1`.
///
/// Grouplikes are the characters of `C*`. They live in the cocommutative
/// part `E` of the coradical (the orthogonal of the commutator ideal of
/// `C_0*`), and correspond to the 1-dimensional factors of the commutative
/// semisimple algebra `E*`, found by idempotent splitting. Over the
/// rationals this fails with `Undecidable` when a minimal polynomial
/// cannot be factored.
pub fn grouplikes(c: &Coalgebra) -> Result<Grouplikes> {
    let field = c.field();
    let c0 = coradical(c)?;
    let (d, d_incl) = c.restrict(&c0)?;
    let comm = commutator_ideal(&d);
    let e_local = comm.orthogonal();
    let e_rows: Vec<Vec<Scalar>> = e_local.vectors().iter().map(|v| d_incl.vec_mul(v)).collect();
    let e_sub = Subspace::span(field, c.dim(), &e_rows);
    let (e, e_incl) = c.restrict(&e_sub)?;
    let alg = e.dual_algebra();
    debug_assert!(alg.is_commutative());
    let mut elements = Vec::new();
    for idem in alg.primitive_idempotents()? {
        let comp = alg.component(&alg.element(&idem));
        if comp.dim() != 1 {
            continue;
        }
        // f e_i = chi(f) e_i; the grouplike has coordinates chi(e_j*).
        let k = idem.iter().position(|x| !x.is_zero()).unwrap();
        let chi: Vec<Scalar> = (0..e.dim())
            .map(|j| {
                let prod = e.dual_mul(&e.basis_vector(j), &idem);
                &prod[k] / &idem[k]
            })
            .collect();
        let g = e_incl.vec_mul(&chi);
        let dg = c.delta_of(&g);
        for (a, x) in g.iter().enumerate() {
            for (b, y) in g.iter().enumerate() {
                if dg[(a, b)] != x * y {
                    return Err(Error::CheckFailed("computed grouplike fails Delta g = g (x) g".into()));
                }
            }
        }
        if !c.counit_of(&g).is_one() {
            return Err(Error::CheckFailed("computed grouplike has counit != 1".into()));
        }
        elements.push(g);
    }
    elements.sort_by_key(|g| {
        let first = g.iter().position(|x| !x.is_zero()).unwrap_or(usize::MAX);
        (first, g.clone())
    });
    Ok(Grouplikes {
        elements,
        coradical: c0,
    })
}

pub fn is_pointed(c: &Coalgebra) -> Result<bool> {
    Ok(grouplikes(c)?.is_pointed())
}

/// Two-sided ideal of `C*` generated by commutators.
fn commutator_ideal(c: &Coalgebra) -> Subspace {
    let n = c.dim();
    let basis: Vec<Vec<Scalar>> = (0..n).map(|i| c.basis_vector(i)).collect();
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let ab = c.dual_mul(&basis[i], &basis[j]);
            let ba = c.dual_mul(&basis[j], &basis[i]);
            rows.push(ab.iter().zip(&ba).map(|(x, y)| x - y).collect());
        }
    }
    let mut ideal = Subspace::span(c.field(), n, &rows);
    loop {
        let mut more = ideal.vectors();
        for v in ideal.vectors() {
            for b in &basis {
                more.push(c.dual_mul(&v, b));
                more.push(c.dual_mul(b, &v));
            }
        }
        let next = Subspace::span(c.field(), n, &more);
        if next == ideal {
            return ideal;
        }
        ideal = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{path_coalgebra, Quiver};
    use crate::exactlin::Field;

    const Q: Field = Field::Rational;

    fn arrow() -> Coalgebra {
        path_coalgebra(Q, &Quiver::single_arrow(), 1).unwrap()
    }

    #[test]
    fn orthogonal_examples() {
        let c = arrow();
        assert!(orthogonal(&Subspace::zero(Q, 3)).is_full());
        assert!(orthogonal(&Subspace::full(Q, 3)).is_zero());
        let ab = c.span_of(&["a", "b"]).unwrap();
        assert_eq!(orthogonal(&ab), c.span_of(&["x"]).unwrap());
    }

    #[test]
    fn wedge_examples() {
        let c = arrow();
        let full = Subspace::full(Q, 3);
        assert_eq!(wedge(&c, &full, &full), full);
        let ka = c.span_of(&["a"]).unwrap();
        let kb = c.span_of(&["b"]).unwrap();
        assert_eq!(wedge(&c, &ka, &kb), full);
        assert_eq!(wedge(&c, &kb, &ka), c.span_of(&["a", "b"]).unwrap());
    }

    #[test]
    fn coradical_examples() {
        let c = Coalgebra::grouplikes_span(Q, &["a", "b"]);
        assert!(coradical(&c).unwrap().is_full());
        let c = arrow();
        assert_eq!(coradical(&c).unwrap(), c.span_of(&["a", "b"]).unwrap());
        let l = path_coalgebra(Q, &Quiver::loops(1), 2).unwrap();
        assert_eq!(coradical(&l).unwrap(), l.span_of(&["g"]).unwrap());
    }

    #[test]
    fn filtration_examples() {
        let c = Coalgebra::grouplikes_span(Q, &["a", "b"]);
        assert_eq!(coradical_filtration(&c).unwrap().len(), 1);
        let c = arrow();
        let f = coradical_filtration(&c).unwrap();
        assert_eq!(f, vec![c.span_of(&["a", "b"]).unwrap(), Subspace::full(Q, 3)]);
        let l = path_coalgebra(Q, &Quiver::loops(1), 2).unwrap();
        let f = coradical_filtration(&l).unwrap();
        assert_eq!(
            f,
            vec![
                l.span_of(&["g"]).unwrap(),
                l.span_of(&["g", "l"]).unwrap(),
                Subspace::full(Q, 3)
            ]
        );
    }

    #[test]
    fn grouplike_examples() {
        for field in [Q, Field::Prime(2), Field::Prime(101)] {
            let c = path_coalgebra(field, &Quiver::two_cycle(), 2).unwrap();
            let g = grouplikes(&c).unwrap();
            assert_eq!(g.elements, vec![c.basis_vector(0), c.basis_vector(1)]);
            assert!(g.is_pointed());
            let m = Coalgebra::matrix_coalgebra(field, 2);
            let g = grouplikes(&m).unwrap();
            assert!(g.elements.is_empty());
            assert!(!g.is_pointed());
            assert_eq!(g.coradical.dim(), 4);
            assert!(is_pointed(&Coalgebra::grouplike_line(field, "g")).unwrap());
        }
    }

    #[test]
    fn grouplikes_in_a_non_standard_basis() {
        // Span of g, h in the basis u = g + h, v = g - h (characteristic 0).
        let two = Q.from_i64(2);
        let half = Q.from_ratio(1, 2);
        // Delta u = (u(x)u + v(x)v)/2, Delta v = (u(x)v + v(x)u)/2.
        let c = Coalgebra::new(
            Q,
            vec!["u".into(), "v".into()],
            vec![
                vec![(0, 0, half.clone()), (1, 1, half.clone())],
                vec![(0, 1, half.clone()), (1, 0, half.clone())],
            ],
            vec![two, Q.zero()],
        )
        .unwrap();
        assert!(c.check().is_ok());
        let g = grouplikes(&c).unwrap();
        assert_eq!(g.elements.len(), 2);
        assert!(g.is_pointed());
    }

    #[test]
    fn mod_p_matrix_dual_is_not_pointed() {
        let m = Coalgebra::matrix_coalgebra(Field::Prime(3), 2);
        assert_eq!(coradical(&m).unwrap().dim(), 4);
    }
}
