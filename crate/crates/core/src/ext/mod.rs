//! Extensions between simple comodules, Ext quivers, the `cf(d)` recursion
//! and wildness witnesses.
//!
//! For grouplikes `g`, `h` an extension `0 -> S_h -> Y -> S_g -> 0` has
//! coaction `rho(y_g) = g (x) y_g + c (x) y_h`, where `c` is a cocycle:
//! `Delta c = g (x) c + c (x) h` and `eps(c) = 0`. Changing the lift of
//! `y_g` adds multiples of `h - g`, so
//! `dim Ext^1(S_g, S_h) = dim Z(g, h) - dim span{h - g}`.
//! The Ext quiver has `dim Ext^1(S_i, S_j)` arrows `i -> j`, which recovers
//! `Q` from a path coalgebra `KQ`.

mod presentation;
mod witness;

use std::collections::HashMap;
use std::sync::Arc;

pub use presentation::{Count, QuiverPresentation, VertexFamily};
pub use witness::{embedding_support, wildness_witness, WildnessWitness, WitnessKind};

use crate::coalgebra::{grouplikes, wedge, Coalgebra, Grouplikes, Quiver};
use crate::comodule::{Comodule, DimensionVector};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

/// Grouplikes of a pointed coalgebra, or `NotPointed`.
pub fn pointed_grouplikes(c: &Coalgebra) -> Result<Grouplikes> {
    let gl = grouplikes(c)?;
    if !gl.is_pointed() {
        return Err(Error::NotPointed);
    }
    Ok(gl)
}

/// Cocycles `Z(g, h) = {c : Delta c = g (x) c + c (x) h, eps(c) = 0}`.
pub fn cocycles(c: &Coalgebra, g: &[Scalar], h: &[Scalar]) -> Subspace {
    let f = c.field();
    let n = c.dim();
    let id = Matrix::identity(f, n);
    let gcol = Matrix::column(f, g);
    let hcol = Matrix::column(f, h);
    let sys = c
        .delta_matrix()
        .sub(&gcol.kronecker(&id))
        .sub(&id.kronecker(&hcol))
        .vstack(&Matrix::from_rows(f, n, vec![c.counit().to_vec()]));
    Subspace::from_rows(&sys.kernel_basis())
}

/// Coboundaries `span{h - g}`.
pub fn coboundaries(c: &Coalgebra, g: &[Scalar], h: &[Scalar]) -> Subspace {
    let diff: Vec<Scalar> = h.iter().zip(g).map(|(a, b)| a - b).collect();
    Subspace::span(c.field(), c.dim(), &[diff])
}

/// `dim Ext^1(S_g, S_h)` for grouplike vectors.
pub fn ext1_dim_grouplikes(c: &Coalgebra, g: &[Scalar], h: &[Scalar]) -> usize {
    cocycles(c, g, h).dim() - coboundaries(c, g, h).dim()
}

/// `dim Ext^1(S, T)`: classes of extensions `0 -> T -> Y -> S -> 0` of
/// 1-dimensional simple comodules.
pub fn ext1_dim(s: &Comodule, t: &Comodule) -> Result<usize> {
    if s.coalgebra() != t.coalgebra() {
        return Err(Error::invalid("simples over different coalgebras"));
    }
    let c = s.coalgebra();
    pointed_grouplikes(c)?;
    let g = grouplike_of(s)?;
    let h = grouplike_of(t)?;
    Ok(ext1_dim_grouplikes(c, &g, &h))
}

/// The grouplike `g` with `rho(x) = g (x) x` on a 1-dimensional comodule.
pub fn grouplike_of(s: &Comodule) -> Result<Vec<Scalar>> {
    if s.dim() != 1 {
        return Err(Error::invalid(format!(
            "expected a 1-dimensional simple comodule, got dimension {}",
            s.dim()
        )));
    }
    if !s.check().is_ok() {
        return Err(Error::invalid("not a comodule"));
    }
    Ok(s.phi().iter().map(|p| p[(0, 0)].clone()).collect())
}

/// Ext quiver: vertices are the grouplikes (labeled by their first nonzero
/// coordinate), with `mult[i][j] = dim Ext^1(S_i, S_j)` arrows `i -> j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtQuiver {
    pub vertices: Vec<String>,
    pub mult: Vec<Vec<usize>>,
}

impl ExtQuiver {
    /// As a quiver with arrows labeled `src-tgt-k`.
    pub fn quiver(&self) -> Quiver {
        let mut arrows = Vec::new();
        for (i, row) in self.mult.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                for k in 1..=m {
                    arrows.push((format!("{}-{}-{k}", self.vertices[i], self.vertices[j]), i, j));
                }
            }
        }
        Quiver::new(self.vertices.clone(), arrows).expect("well-formed")
    }

    pub fn arrow_count(&self) -> usize {
        self.mult.iter().flatten().sum()
    }
}

pub fn ext_quiver(c: &Coalgebra) -> Result<ExtQuiver> {
    let gl = pointed_grouplikes(c)?;
    let mult = gl
        .elements
        .iter()
        .map(|g| gl.elements.iter().map(|h| ext1_dim_grouplikes(c, g, h)).collect())
        .collect();
    Ok(ExtQuiver {
        vertices: gl.labels(c),
        mult,
    })
}

/// Memoized evaluation of the `cf(d)` recursion:
/// `cf(0) = 0`, `cf(e_g) = K g`, and otherwise the sum over all splittings
/// `e + f = d` (both nonzero) of `cf(f) ^ cf(e)`.
pub struct CfRecursion<'a> {
    coalgebra: &'a Coalgebra,
    grouplikes: HashMap<String, Vec<Scalar>>,
    memo: HashMap<String, Subspace>,
    budget: usize,
}

/// Default cap on the number of memoized dimension vectors.
pub const DOWNSET_BUDGET: usize = 4096;

impl<'a> CfRecursion<'a> {
    pub fn new(coalgebra: &'a Coalgebra) -> Result<CfRecursion<'a>> {
        let gl = pointed_grouplikes(coalgebra)?;
        let grouplikes = gl.labels(coalgebra).into_iter().zip(gl.elements).collect();
        Ok(CfRecursion {
            coalgebra,
            grouplikes,
            memo: HashMap::new(),
            budget: DOWNSET_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn eval(&mut self, d: &DimensionVector) -> Result<Subspace> {
        let key = d.to_string();
        if let Some(s) = self.memo.get(&key) {
            return Ok(s.clone());
        }
        if self.memo.len() >= self.budget {
            return Err(Error::budget("cf recursion downset", self.memo.len() as u128 + 1, self.budget as u128));
        }
        let c = self.coalgebra;
        let f = c.field();
        let result = match d.total() {
            0 => Subspace::zero(f, c.dim()),
            1 => {
                let (label, _) = d.entries().iter().next().unwrap();
                let g = self
                    .grouplikes
                    .get(label)
                    .ok_or_else(|| Error::invalid(format!("{label:?} is not a grouplike label")))?;
                Subspace::span(f, c.dim(), std::slice::from_ref(g))
            }
            _ => {
                for label in d.entries().keys() {
                    if !self.grouplikes.contains_key(label) {
                        return Err(Error::invalid(format!("{label:?} is not a grouplike label")));
                    }
                }
                let mut acc = Subspace::zero(f, c.dim());
                for (e, g) in d.splittings() {
                    let ce = self.eval(&e)?;
                    let cg = self.eval(&g)?;
                    acc = acc.sum(&wedge(c, &cg, &ce));
                }
                acc
            }
        };
        self.memo.insert(key, result.clone());
        Ok(result)
    }
}

/// The recursion value for `d`.
pub fn cf_dimvec(c: &Coalgebra, d: &DimensionVector) -> Result<Subspace> {
    CfRecursion::new(c)?.eval(d)
}

/// Relation between the recursion value and the oracle union.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CfComparison {
    Equal,
    /// Oracle strictly inside the recursion value; the gap dimension.
    StrictGap(usize),
    /// Oracle not contained in the recursion value.
    Violation,
}

#[derive(Clone, Debug)]
pub struct CfReport {
    pub dimvec: DimensionVector,
    pub recursion: Subspace,
    pub oracle: Subspace,
    pub comparison: CfComparison,
}

/// Compares [`cf_dimvec`] against the enumeration oracle.
pub fn cf_dimvec_report(c: &Arc<Coalgebra>, d: &DimensionVector, budget: u128) -> Result<CfReport> {
    let recursion = cf_dimvec(c, d)?;
    let oracle = crate::oracle::cf_dimvec_oracle(c, d, budget)?;
    Ok(compare(d.clone(), recursion, oracle))
}

pub(crate) fn compare(dimvec: DimensionVector, recursion: Subspace, oracle: Subspace) -> CfReport {
    let comparison = if !oracle.is_subspace_of(&recursion) {
        CfComparison::Violation
    } else if oracle == recursion {
        CfComparison::Equal
    } else {
        CfComparison::StrictGap(recursion.dim() - oracle.dim())
    };
    CfReport {
        dimvec,
        recursion,
        oracle,
        comparison,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::path_coalgebra;
    use crate::exactlin::Field;

    const Q: Field = Field::Rational;

    #[test]
    fn ext_examples() {
        let c = Arc::new(Coalgebra::grouplikes_span(Q, &["a", "b"]));
        let eq = ext_quiver(&c).unwrap();
        assert_eq!(eq.arrow_count(), 0);
        let c = Arc::new(path_coalgebra(Q, &Quiver::single_arrow(), 1).unwrap());
        let sa = Comodule::simple_at(c.clone(), "a").unwrap();
        let sb = Comodule::simple_at(c.clone(), "b").unwrap();
        assert_eq!(ext1_dim(&sa, &sb).unwrap(), 1);
        assert_eq!(ext1_dim(&sb, &sa).unwrap(), 0);
        assert_eq!(ext1_dim(&sa, &sa).unwrap(), 0);
        let l3 = Arc::new(path_coalgebra(Q, &Quiver::loops(3), 1).unwrap());
        let s = Comodule::simple_at(l3.clone(), "g").unwrap();
        assert_eq!(ext1_dim(&s, &s).unwrap(), 3);
    }

    #[test]
    fn ext_quiver_round_trip() {
        for q in [Quiver::single_arrow(), Quiver::two_cycle(), Quiver::loops(1), Quiver::kronecker(2), Quiver::line(3)] {
            let c = path_coalgebra(Q, &q, 2).unwrap();
            assert!(ext_quiver(&c).unwrap().quiver().same_shape(&q), "{q:?}");
        }
        let c = path_coalgebra(Q, &Quiver::loops(1), 1).unwrap();
        assert!(ext_quiver(&c).unwrap().quiver().same_shape(&Quiver::loops(1)));
    }

    #[test]
    fn cf_recursion_examples() {
        let c = path_coalgebra(Q, &Quiver::single_arrow(), 1).unwrap();
        assert_eq!(cf_dimvec(&c, &DimensionVector::unit("a")).unwrap(), c.span_of(&["a"]).unwrap());
        let d = DimensionVector::from_pairs(&[("a", 1), ("b", 1)]);
        assert!(cf_dimvec(&c, &d).unwrap().is_full());
        let l = path_coalgebra(Q, &Quiver::loops(1), 2).unwrap();
        let d = DimensionVector::from_pairs(&[("g", 2)]);
        assert_eq!(cf_dimvec(&l, &d).unwrap(), l.span_of(&["g", "l"]).unwrap());
        assert!(cf_dimvec(&c, &DimensionVector::unit("x")).is_err());
    }

    #[test]
    fn non_pointed_rejected() {
        let m = Coalgebra::matrix_coalgebra(Q, 2);
        assert!(matches!(ext_quiver(&m), Err(Error::NotPointed)));
    }
}
