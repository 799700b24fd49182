//! Brute-force oracles over GF(p): comodules of a dimension vector up to
//! isomorphism, extension classes, minimal subcoalgebras and unions of
//! coefficient coalgebras.
//!
//! Every comodule over a pointed coalgebra has a basis adapted to a
//! composition series, in which
//! `rho(x_s) = g_s (x) x_s + sum_{t < s} c_ts (x) x_t`.
//! Coassociativity on `x_t` reads
//! `Delta c_ts = g_s (x) c_ts + c_ts (x) g_t + sum_{t < r < s} c_rs (x) c_tr`
//! and the counit law is `eps(c_ts) = 0`. The oracles enumerate exactly these
//! triangular data.

mod flags;

use std::collections::BTreeMap;
use std::sync::Arc;

pub use flags::cf_dimvec_flags;

use crate::coalgebra::{grouplikes, Coalgebra};
use crate::comodule::{Comodule, DimensionVector};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, Scalar, Subspace};

/// Default cap on the number of candidates any oracle may visit.
pub const ORACLE_BUDGET: u128 = 1 << 20;

pub(crate) fn prime_of(field: Field) -> Result<u64> {
    match field {
        Field::Prime(p) => Ok(p),
        Field::Rational => Err(Error::Unsupported("oracles run over GF(p) only".into())),
    }
}

/// Labeled grouplikes of a pointed coalgebra.
pub(crate) fn labeled_grouplikes(c: &Coalgebra) -> Result<BTreeMap<String, Vec<Scalar>>> {
    let gl = grouplikes(c)?;
    if !gl.is_pointed() {
        return Err(Error::NotPointed);
    }
    Ok(gl.labels(c).into_iter().zip(gl.elements).collect())
}

/// Distinct orderings of the composition factors of `d`.
pub(crate) fn orderings(d: &DimensionVector) -> Vec<Vec<String>> {
    fn go(rest: &mut BTreeMap<String, usize>, cur: &mut Vec<String>, out: &mut Vec<Vec<String>>) {
        let keys: Vec<String> = rest.iter().filter(|(_, &n)| n > 0).map(|(k, _)| k.clone()).collect();
        if keys.is_empty() {
            out.push(cur.clone());
            return;
        }
        for k in keys {
            *rest.get_mut(&k).unwrap() -= 1;
            cur.push(k.clone());
            go(rest, cur, out);
            cur.pop();
            *rest.get_mut(&k).unwrap() += 1;
        }
    }
    let mut rest = d.entries().clone();
    let mut out = Vec::new();
    go(&mut rest, &mut Vec::new(), &mut out);
    out
}

/// The linear part of the equation for `c_ts`: rows of `Delta - g_s (x) I -
/// I (x) g_t` followed by the counit row.
pub(crate) fn cocycle_system(c: &Coalgebra, gs: &[Scalar], gt: &[Scalar]) -> Matrix {
    let f = c.field();
    let n = c.dim();
    let id = Matrix::identity(f, n);
    c.delta_matrix()
        .sub(&Matrix::column(f, gs).kronecker(&id))
        .sub(&id.kronecker(&Matrix::column(f, gt)))
        .vstack(&Matrix::from_rows(f, n, vec![c.counit().to_vec()]))
}

/// Right-hand side `sum_r c_rs (x) c_tr`, with a trailing zero for the
/// counit row.
pub(crate) fn quadratic_rhs(f: Field, n: usize, pairs: &[(&[Scalar], &[Scalar])]) -> Vec<Scalar> {
    let mut out = vec![f.zero(); n * n + 1];
    for (left, right) in pairs {
        for (j, a) in left.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in right.iter().enumerate() {
                out[j * n + k] += &(a * b);
            }
        }
    }
    out
}

/// Comodule with factors `gs` (bottom first) and coefficients `coef[(t, s)]`.
pub(crate) fn triangular_comodule(
    c: &Arc<Coalgebra>,
    gs: &[Vec<Scalar>],
    coef: &BTreeMap<(usize, usize), Vec<Scalar>>,
) -> Result<Comodule> {
    let mut rho = Vec::new();
    for (s, g) in gs.iter().enumerate() {
        for (i, x) in g.iter().enumerate() {
            if !x.is_zero() {
                rho.push((s, i, s, x.clone()));
            }
        }
    }
    for (&(t, s), v) in coef {
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                rho.push((s, i, t, x.clone()));
            }
        }
    }
    Comodule::new(c.clone(), gs.len(), rho)
}

/// All vectors `base + sum lambda_i z_i` over GF(p).
fn affine_points(field: Field, base: &[Scalar], dirs: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let mut out = vec![base.to_vec()];
    for z in dirs {
        let mut next = Vec::with_capacity(out.len() * field.order().unwrap() as usize);
        for v in &out {
            for lam in field.elements().unwrap() {
                next.push(v.iter().zip(z).map(|(a, b)| a + &(&lam * b)).collect());
            }
        }
        out = next;
    }
    out
}

fn checked_pow(p: u64, k: usize) -> u128 {
    (p as u128).checked_pow(k as u32).unwrap_or(u128::MAX)
}

/// Every triangular coaction datum with composition factors in the order
/// `gs`, each passed to `visit`. Counts against `spent`.
fn for_each_triangular(
    c: &Arc<Coalgebra>,
    gs: &[Vec<Scalar>],
    budget: u128,
    spent: &mut u128,
    visit: &mut dyn FnMut(&BTreeMap<(usize, usize), Vec<Scalar>>) -> Result<()>,
) -> Result<()> {
    let m = gs.len();
    // Positions in solve order: column s, rows t from s-1 down to 0.
    let positions: Vec<(usize, usize)> = (1..m).flat_map(|s| (0..s).rev().map(move |t| (t, s))).collect();
    let systems: Vec<Matrix> = positions
        .iter()
        .map(|&(t, s)| cocycle_system(c, &gs[s], &gs[t]))
        .collect();
    let kernels: Vec<Vec<Vec<Scalar>>> = systems.iter().map(|a| a.kernel_basis().row_vecs()).collect();
    let p = prime_of(c.field())?;
    #[allow(clippy::too_many_arguments)]
    fn go(
        c: &Coalgebra,
        p: u64,
        k: usize,
        positions: &[(usize, usize)],
        systems: &[Matrix],
        kernels: &[Vec<Vec<Scalar>>],
        coef: &mut BTreeMap<(usize, usize), Vec<Scalar>>,
        budget: u128,
        spent: &mut u128,
        visit: &mut dyn FnMut(&BTreeMap<(usize, usize), Vec<Scalar>>) -> Result<()>,
    ) -> Result<()> {
        if k == positions.len() {
            *spent += 1;
            if *spent > budget {
                return Err(Error::budget("triangular coaction data", *spent, budget));
            }
            return visit(coef);
        }
        let (t, s) = positions[k];
        let pairs: Vec<(&[Scalar], &[Scalar])> = (t + 1..s)
            .map(|r| (coef[&(r, s)].as_slice(), coef[&(t, r)].as_slice()))
            .collect();
        let rhs = quadratic_rhs(c.field(), c.dim(), &pairs);
        let Some(base) = systems[k].solve(&rhs) else {
            return Ok(());
        };
        if checked_pow(p, kernels[k].len()) > budget {
            return Err(Error::budget("triangular coaction data", checked_pow(p, kernels[k].len()), budget));
        }
        for v in affine_points(c.field(), &base, &kernels[k]) {
            coef.insert((t, s), v);
            go(c, p, k + 1, positions, systems, kernels, coef, budget, spent, visit)?;
        }
        coef.remove(&(t, s));
        Ok(())
    }
    go(c, p, 0, &positions, &systems, &kernels, &mut BTreeMap::new(), budget, spent, visit)
}

/// Representatives of the isomorphism classes of comodules with dimension
/// vector `d`, by exhaustive enumeration of triangular data and pairwise
/// isomorphism tests.
pub fn enumerate_comodules(c: &Arc<Coalgebra>, d: &DimensionVector, budget: u128) -> Result<Vec<Comodule>> {
    prime_of(c.field())?;
    let gl = labeled_grouplikes(c)?;
    for l in d.entries().keys() {
        if !gl.contains_key(l) {
            return Err(Error::invalid(format!("{l:?} is not a grouplike label")));
        }
    }
    if d.is_zero() {
        return Ok(vec![Comodule::zero(c.clone())]);
    }
    let mut reps: Vec<(Vec<usize>, Comodule)> = Vec::new();
    let mut spent = 0u128;
    for order in orderings(d) {
        let gs: Vec<Vec<Scalar>> = order.iter().map(|l| gl[l].clone()).collect();
        for_each_triangular(c, &gs, budget, &mut spent, &mut |coef| {
            let m = triangular_comodule(c, &gs, coef)?;
            let fp = m.action_module().fingerprint();
            for (f, r) in &reps {
                if *f == fp && r.is_isomorphic(&m)? {
                    return Ok(());
                }
            }
            reps.push((fp, m));
            Ok(())
        })?;
    }
    Ok(reps.into_iter().map(|(_, m)| m).collect())
}

/// Extension classes `0 -> T -> Y -> S -> 0` of 1-dimensional simples.
#[derive(Clone, Debug)]
pub struct ExtensionCount {
    /// Number of equivalence classes, `p^dim`.
    pub classes: u128,
    pub dim: usize,
    /// One middle term per class, with `y_0` spanning the copy of `T`.
    pub representatives: Vec<Comodule>,
}

/// Tries every `c` in `C` as the off-diagonal coefficient, keeps those that
/// satisfy the comodule axioms, and groups them under the equivalences
/// `y_1 -> y_1 + lambda y_0`.
pub fn enumerate_extensions(s: &Comodule, t: &Comodule, budget: u128) -> Result<ExtensionCount> {
    let c = s.coalgebra().clone();
    if *c != **t.coalgebra() {
        return Err(Error::invalid("simples over different coalgebras"));
    }
    let f = c.field();
    let p = prime_of(f)?;
    let g = crate::ext::grouplike_of(s)?;
    let h = crate::ext::grouplike_of(t)?;
    let n = c.dim();
    let total = checked_pow(p, n);
    if total > budget {
        return Err(Error::budget("extension candidates", total, budget));
    }
    let zero = vec![f.zero(); n];
    let mut valid = Vec::new();
    for v in affine_points(f, &zero, &(0..n).map(|i| c.basis_vector(i)).collect::<Vec<_>>()) {
        let mut coef = BTreeMap::new();
        coef.insert((0, 1), v.clone());
        let y = triangular_comodule(&c, &[h.clone(), g.clone()], &coef)?;
        if y.check().is_ok() {
            valid.push((v, y));
        }
    }
    let mut reps: Vec<Comodule> = Vec::new();
    for (_, y) in valid {
        let mut seen = false;
        for r in &reps {
            if equivalent_extensions(r, &y) {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push(y);
        }
    }
    let classes = reps.len() as u128;
    let mut dim = 0;
    while checked_pow(p, dim) < classes {
        dim += 1;
    }
    if checked_pow(p, dim) != classes {
        return Err(Error::CheckFailed(format!(
            "{classes} extension classes is not a power of {p}"
        )));
    }
    Ok(ExtensionCount {
        classes,
        dim,
        representatives: reps,
    })
}

/// Some `y_1 -> y_1 + lambda y_0` is a comodule map `a -> b`.
fn equivalent_extensions(a: &Comodule, b: &Comodule) -> bool {
    let f = a.field();
    f.elements().unwrap().any(|lam| {
        let m = Matrix::new(f, 2, 2, vec![f.one(), lam, f.zero(), f.one()]);
        a.phi()
            .iter()
            .zip(b.phi())
            .all(|(pa, pb)| m.mul(pa) == pb.mul(&m))
    })
}

/// Smallest subcoalgebra containing the coaction coefficients, by closing
/// their span under taking both tensor legs of `Delta`.
pub fn min_subcoalgebra_oracle(m: &Comodule, budget: u128) -> Result<Subspace> {
    let c = m.coalgebra();
    let f = c.field();
    let n = c.dim();
    if n as u128 > budget {
        return Err(Error::budget("coalgebra dimension", n as u128, budget));
    }
    // One vector per matrix entry: the coefficients of `b_i (x) x_r` in `rho(x_s)`.
    let rows: Vec<Vec<Scalar>> = (0..m.dim())
        .flat_map(|r| (0..m.dim()).map(move |s| (r, s)))
        .map(|(r, s)| m.phi().iter().map(|p| p[(r, s)].clone()).collect())
        .collect();
    let mut span = Subspace::span(f, n, &rows);
    loop {
        let mut more = span.vectors();
        for w in span.vectors() {
            let d = c.delta_of(&w);
            more.extend(d.row_vecs());
            more.extend(d.transpose().row_vecs());
        }
        let next = Subspace::span(f, n, &more);
        if next == span {
            return Ok(span);
        }
        span = next;
    }
}

/// `sum cf(M)` over all comodules with dimension vector `d`. Uses the flag
/// enumeration, which is exhaustive for composition length at most 3 at any
/// prime.
pub fn cf_dimvec_oracle(c: &Arc<Coalgebra>, d: &DimensionVector, budget: u128) -> Result<Subspace> {
    cf_dimvec_flags(c, d, budget)
}

/// The same union computed from [`enumerate_comodules`]; feasible only for
/// small primes.
pub fn cf_dimvec_enumerated(c: &Arc<Coalgebra>, d: &DimensionVector, budget: u128) -> Result<Subspace> {
    let reps = enumerate_comodules(c, d, budget)?;
    Ok(reps
        .iter()
        .fold(Subspace::zero(c.field(), c.dim()), |acc, m| acc.sum(&m.cf())))
}
