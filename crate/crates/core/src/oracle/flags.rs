//! Union of coefficient coalgebras over all triangular coaction data of
//! composition length at most 3, at any prime.
//!
//! Length 3 data `(c_01, c_12, c_02)` have `c_01`, `c_12` free in their
//! cocycle spaces, and `c_02` exists iff `c_12 (x) c_01` lies in the image of
//! the linear system for `c_02`. For fixed `c_01` that condition is linear
//! in `c_12`, so enumerating `c_01` up to scalars covers every datum.

use std::sync::Arc;

use super::{cocycle_system, labeled_grouplikes, orderings, prime_of, quadratic_rhs};
use crate::coalgebra::Coalgebra;
use crate::comodule::DimensionVector;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};

pub fn cf_dimvec_flags(c: &Arc<Coalgebra>, d: &DimensionVector, budget: u128) -> Result<Subspace> {
    let f = c.field();
    let p = prime_of(f)?;
    let n = c.dim();
    let gl = labeled_grouplikes(c)?;
    for l in d.entries().keys() {
        if !gl.contains_key(l) {
            return Err(Error::invalid(format!("{l:?} is not a grouplike label")));
        }
    }
    if d.total() > 3 {
        return Err(Error::budget("composition length", d.total() as u128, 3));
    }
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let mut spent = 0u128;
    for order in orderings(d) {
        let gs: Vec<&Vec<Scalar>> = order.iter().map(|l| &gl[l]).collect();
        rows.extend(gs.iter().map(|g| (*g).clone()));
        if gs.len() < 2 {
            continue;
        }
        let a01 = cocycle_system(c, gs[1], gs[0]);
        let z01 = a01.kernel_basis().row_vecs();
        rows.extend(z01.iter().cloned());
        if gs.len() == 2 {
            continue;
        }
        let z12 = cocycle_system(c, gs[2], gs[1]).kernel_basis().row_vecs();
        let a02 = cocycle_system(c, gs[2], gs[0]);
        rows.extend(z12.iter().cloned());
        rows.extend(a02.kernel_basis().row_vecs());
        // Left kernel of a02: b is in the image iff obstruction * b = 0.
        let obstruction = a02.transpose().kernel_basis();
        let count = projective_count(p, z01.len());
        spent += count;
        if spent > budget {
            return Err(Error::budget("flag enumeration", spent, budget));
        }
        for u in projective_points(f, &z01) {
            let images: Vec<Vec<Scalar>> = z12
                .iter()
                .map(|v| quadratic_rhs(f, n, &[(v.as_slice(), u.as_slice())]))
                .collect();
            if images.is_empty() {
                break;
            }
            let w = Matrix::from_rows(f, n * n + 1, images.clone()).transpose();
            let solvable = if obstruction.rows() == 0 {
                Matrix::identity(f, z12.len())
            } else {
                obstruction.mul(&w).kernel_basis()
            };
            for beta in solvable.row_vecs() {
                let mut rhs = vec![f.zero(); n * n + 1];
                for (b, img) in beta.iter().zip(&images) {
                    for (r, x) in rhs.iter_mut().zip(img) {
                        *r += &(b * x);
                    }
                }
                let x = a02
                    .solve(&rhs)
                    .ok_or_else(|| Error::CheckFailed("flag obstruction test inconsistent".into()))?;
                rows.push(x);
            }
        }
    }
    Ok(Subspace::span(f, n, &rows))
}

fn projective_count(p: u64, k: usize) -> u128 {
    (0..k).map(|i| (p as u128).saturating_pow(i as u32)).sum()
}

/// One representative per line in the span of `basis`: coefficient vectors
/// whose first nonzero entry is 1.
fn projective_points(f: Field, basis: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let k = basis.len();
    let mut out = Vec::new();
    for lead in 0..k {
        let mut coeffs: Vec<Vec<Scalar>> = vec![vec![]];
        for _ in lead + 1..k {
            coeffs = coeffs
                .into_iter()
                .flat_map(|c| {
                    f.elements().unwrap().map(move |x| {
                        let mut c2 = c.clone();
                        c2.push(x);
                        c2
                    })
                })
                .collect();
        }
        for tail in coeffs {
            let mut v = basis[lead].clone();
            for (x, b) in tail.iter().zip(&basis[lead + 1..]) {
                for (vi, bi) in v.iter_mut().zip(b) {
                    *vi += &(x * bi);
                }
            }
            out.push(v);
        }
    }
    out
}
