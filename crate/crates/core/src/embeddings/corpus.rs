//! Exhaustive corpora over GF(p), one representative per isomorphism class.

use super::{FreeModule, NilpotentFreeModule, QuiverRep};
use crate::coalgebra::Quiver;
use crate::comodule::ActionModule;
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar};
use crate::oracle::prime_of;

/// All `rows x cols` matrices over GF(p), in lexicographic order.
fn all_matrices(field: Field, rows: usize, cols: usize) -> Vec<Matrix> {
    let mut out: Vec<Vec<Scalar>> = vec![vec![]];
    for _ in 0..rows * cols {
        out = out
            .into_iter()
            .flat_map(|v| {
                field.elements().unwrap().map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(|d| Matrix::new(field, rows, cols, d)).collect()
}

/// Tuples drawn from `choices[0] x choices[1] x ...`.
fn product(choices: &[Vec<Matrix>]) -> Vec<Vec<Matrix>> {
    let mut out: Vec<Vec<Matrix>> = vec![vec![]];
    for c in choices {
        out = out
            .into_iter()
            .flat_map(|v| {
                c.iter().map(move |m| {
                    let mut w = v.clone();
                    w.push(m.clone());
                    w
                })
            })
            .collect();
    }
    out
}

fn count(p: u64, entries: usize, budget: u128) -> Result<()> {
    let n = (p as u128).checked_pow(entries as u32).unwrap_or(u128::MAX);
    if n > budget {
        return Err(Error::budget("corpus candidates", n, budget));
    }
    Ok(())
}

/// Keeps the first member of each isomorphism class.
fn dedupe<T>(items: Vec<T>, module: impl Fn(&T) -> ActionModule) -> Result<Vec<T>> {
    let mut reps: Vec<(Vec<usize>, ActionModule, T)> = Vec::new();
    for it in items {
        let m = module(&it);
        let fp = m.fingerprint();
        let mut seen = false;
        for (f, r, _) in &reps {
            if *f == fp && r.is_isomorphic(&m)? {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push((fp, m, it));
        }
    }
    Ok(reps.into_iter().map(|(_, _, t)| t).collect())
}

/// Isomorphism classes of nilpotent modules of dimension `dim` in `k`
/// variables.
pub fn nilpotent_modules(field: Field, dim: usize, k: usize, budget: u128) -> Result<Vec<NilpotentFreeModule>> {
    let p = prime_of(field)?;
    count(p, k * dim * dim, budget)?;
    // A nilpotent generator satisfies X^dim = 0; filter on that first.
    let nil: Vec<Matrix> = all_matrices(field, dim, dim)
        .into_iter()
        .filter(|x| x.pow(dim as u64).is_zero())
        .collect();
    let mut found = Vec::new();
    for gens in product(&vec![nil; k]) {
        let m = FreeModule::new(field, dim, gens)?;
        if m.is_nilpotent() {
            found.push(NilpotentFreeModule(m));
        }
    }
    dedupe(found, |m| m.module().action_module())
}

/// Isomorphism classes of representations with the given dimension vector.
pub fn quiver_reps(field: Field, q: &Quiver, dims: &[usize], budget: u128) -> Result<Vec<QuiverRep>> {
    let p = prime_of(field)?;
    let entries: usize = q.arrows().iter().map(|(_, s, t)| dims[*s] * dims[*t]).sum();
    count(p, entries, budget)?;
    let choices: Vec<Vec<Matrix>> = q
        .arrows()
        .iter()
        .map(|(_, s, t)| all_matrices(field, dims[*t], dims[*s]))
        .collect();
    let reps = product(&choices)
        .into_iter()
        .map(|maps| QuiverRep::new(q.clone(), field, dims.to_vec(), maps))
        .collect::<Result<Vec<_>>>()?;
    dedupe(reps, QuiverRep::action_module)
}

/// Isomorphism classes of all nonzero representations of total dimension at
/// most `total`, ordered by dimension vector.
pub fn quiver_reps_up_to(field: Field, q: &Quiver, total: usize, budget: u128) -> Result<Vec<QuiverRep>> {
    let nv = q.vertices().len();
    let mut dims_list: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..nv {
        dims_list = dims_list
            .into_iter()
            .flat_map(|d| {
                (0..=total).map(move |x| {
                    let mut e = d.clone();
                    e.push(x);
                    e
                })
            })
            .collect();
    }
    dims_list.retain(|d| {
        let s: usize = d.iter().sum();
        s > 0 && s <= total
    });
    dims_list.sort_by_key(|d| (d.iter().sum::<usize>(), d.clone()));
    let mut out = Vec::new();
    for d in dims_list {
        out.extend(quiver_reps(field, q, &d, budget)?);
    }
    Ok(out)
}
