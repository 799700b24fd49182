//! Wildness witnesses from Ext multiplicities.
//!
//! Three independent extension classes between `S_i` and `S_j` give a
//! subcoalgebra spanned by the two grouplikes and three cocycles, isomorphic
//! to the length-1 path coalgebra of the Kronecker quiver with three arrows
//! (`i != j`), or of one vertex with three loops (`i == j`).

use super::{coboundaries, cocycles, ext_quiver, pointed_grouplikes};
use crate::coalgebra::{path_coalgebra, CheckReport, Coalgebra, Quiver};
use crate::comodule::Comodule;
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessKind {
    /// Three arrows `source -> target`.
    Kronecker3 { source: String, target: String },
    /// Three loops at `vertex`.
    ThreeLoops { vertex: String },
}

#[derive(Clone, Debug)]
pub struct WildnessWitness {
    pub kind: WitnessKind,
    /// Basis vectors in the coalgebra, in the order of `model`'s basis.
    pub basis: Vec<Vec<Scalar>>,
    /// The reference path coalgebra the span is isomorphic to.
    pub model: Coalgebra,
    /// Axiom check of the span with its induced structure.
    pub check: CheckReport,
    /// Whether the induced structure constants equal the model's.
    pub matches_model: bool,
}

/// Scans the Ext quiver for a multiplicity of at least three. `Ok(None)`
/// means no Ext-count witness, which is not a tameness certificate.
pub fn wildness_witness(c: &Coalgebra) -> Result<Option<WildnessWitness>> {
    let gl = pointed_grouplikes(c)?;
    let eq = ext_quiver(c)?;
    let labels = gl.labels(c);
    let k = gl.elements.len();
    // Prefer a loop witness at the first vertex, then pairs in order.
    let mut pick = None;
    for i in 0..k {
        for j in 0..k {
            if eq.mult[i][j] >= 3 && pick.is_none() {
                pick = Some((i, j));
            }
        }
    }
    let Some((i, j)) = pick else {
        return Ok(None);
    };
    let f = c.field();
    let (g, h) = (&gl.elements[i], &gl.elements[j]);
    let z = cocycles(c, g, h);
    let b = coboundaries(c, g, h);
    // Three cocycles independent modulo coboundaries.
    let mut chosen: Vec<Vec<Scalar>> = Vec::new();
    let mut span = b.clone();
    for v in z.vectors() {
        if chosen.len() == 3 {
            break;
        }
        if !span.contains(&v) {
            span = span.sum(&Subspace::span(f, c.dim(), std::slice::from_ref(&v)));
            chosen.push(v);
        }
    }
    let (kind, model, basis) = if i == j {
        let model = path_coalgebra(f, &Quiver::loops(3), 1)?;
        let mut basis = vec![g.clone()];
        basis.extend(chosen);
        (WitnessKind::ThreeLoops { vertex: labels[i].clone() }, model, basis)
    } else {
        let model = path_coalgebra(f, &Quiver::kronecker(3), 1)?;
        let mut basis = vec![g.clone(), h.clone()];
        basis.extend(chosen);
        (
            WitnessKind::Kronecker3 {
                source: labels[i].clone(),
                target: labels[j].clone(),
            },
            model,
            basis,
        )
    };
    let incl = Matrix::from_rows(f, c.dim(), basis.clone());
    let sub = Subspace::from_rows(&incl);
    if sub.dim() != basis.len() || !c.is_subcoalgebra(&sub) {
        return Err(Error::CheckFailed("witness span is not a subcoalgebra".into()));
    }
    let pivots: Vec<usize> = (0..basis.len()).collect();
    let induced = c
        .transport(&incl, &pivots)
        .map(|d| relabel(&d, model.labels()))?;
    let check = induced.check();
    let matches_model = induced == model;
    Ok(Some(WildnessWitness {
        kind,
        basis,
        model,
        check,
        matches_model,
    }))
}

fn relabel(c: &Coalgebra, labels: &[String]) -> Coalgebra {
    let n = c.dim();
    Coalgebra::new(
        c.field(),
        labels.to_vec(),
        (0..n).map(|i| c.delta(i).to_vec()).collect(),
        c.counit().to_vec(),
    )
    .expect("same shape")
}

/// `H = cf(M_1 (+) ... (+) M_r)`: the subcoalgebra carrying a family of
/// comodules, e.g. the images of a representation embedding.
pub fn embedding_support(c: &Coalgebra, images: &[Comodule]) -> Subspace {
    images
        .iter()
        .fold(Subspace::zero(c.field(), c.dim()), |acc, m| acc.sum(&m.cf()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn witness_examples() {
        let f = Field::Prime(101);
        let c = path_coalgebra(f, &Quiver::loops(3), 1).unwrap();
        let w = wildness_witness(&c).unwrap().unwrap();
        assert!(matches!(w.kind, WitnessKind::ThreeLoops { .. }));
        assert!(w.check.is_ok() && w.matches_model);
        let c = path_coalgebra(f, &Quiver::kronecker(3), 2).unwrap();
        let w = wildness_witness(&c).unwrap().unwrap();
        assert_eq!(
            w.kind,
            WitnessKind::Kronecker3 {
                source: "a".into(),
                target: "b".into()
            }
        );
        assert!(w.check.is_ok() && w.matches_model);
        for q in [Quiver::single_arrow(), Quiver::line(3), Quiver::kronecker(2)] {
            let c = path_coalgebra(f, &q, 2).unwrap();
            assert!(wildness_witness(&c).unwrap().is_none());
        }
    }

    #[test]
    fn support_of_regular_is_everything() {
        let f = Field::Rational;
        let c = std::sync::Arc::new(path_coalgebra(f, &Quiver::two_cycle(), 2).unwrap());
        let h = embedding_support(&c, &[Comodule::regular(c.clone())]);
        assert!(h.is_full());
        assert!(c.is_subcoalgebra(&h));
    }
}
