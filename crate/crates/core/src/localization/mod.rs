//! Localization at vertex idempotents: `eCe`, the functor `T = (-)e`, its
//! right adjoint `S = eC (cotensor)_{eCe} -` and the identity `TS = Id`.
//!
//! For `e` in `C*` write `R_e(c) = sum e(c_1) c_2` and `L_e(c) = sum c_1 e(c_2)`.
//! Then `P = L_e R_e` sends `c` to `sum e(c_1) c_2 e(c_3)`, `eCe` is its
//! image with `Delta' = (P (x) P) Delta`, and `eC` is the image of `L_e`, a
//! left `C`-subcomodule of `C`. On a left comodule `M`, `e` acts by
//! `x -> sum e(x_{-1}) x_0` and `T(M)` is the image of that operator.

mod adjoint;

use std::sync::Arc;

pub use adjoint::left_adjoint;

use crate::coalgebra::{grouplikes, Coalgebra, Term};
use crate::comodule::{Bicomodule, Comodule, RightComodule, ShortExactTriple};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

/// Iteration cap for `e <- 3e^2 - 2e^3`; the defect squares each round.
const LIFT_ROUNDS: usize = 64;

/// An idempotent `e` of `C*` attached to a set of kept grouplikes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentPresentation {
    coalgebra: Arc<Coalgebra>,
    keep: Vec<String>,
    e: Vec<Scalar>,
}

impl IdempotentPresentation {
    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.coalgebra
    }

    pub fn keep(&self) -> &[String] {
        &self.keep
    }

    pub fn idempotent(&self) -> &[Scalar] {
        &self.e
    }
}

/// Lifts the projection onto the kept grouplikes (zero on the standard
/// complement of the coradical) to an idempotent of `C*`.
pub fn lift_idempotent(c: &Arc<Coalgebra>, keep: &[&str]) -> Result<IdempotentPresentation> {
    let f = c.field();
    let n = c.dim();
    let gl = grouplikes(c)?;
    if !gl.is_pointed() {
        return Err(Error::NotPointed);
    }
    let labels = gl.labels(c);
    for k in keep {
        if !labels.iter().any(|l| l == k) {
            return Err(Error::invalid(format!("{k:?} is not a grouplike label")));
        }
    }
    // e0 vanishes off the pivot coordinates of C_0 and takes the value 0/1
    // on each grouplike.
    let c0 = &gl.coradical;
    let piv = c0.pivots().to_vec();
    let sys_rows: Vec<Vec<Scalar>> = gl
        .elements
        .iter()
        .map(|g| piv.iter().map(|&p| g[p].clone()).collect())
        .collect();
    let sys = Matrix::from_rows(f, piv.len(), sys_rows);
    let rhs: Vec<Scalar> = labels
        .iter()
        .map(|l| if keep.contains(&l.as_str()) { f.one() } else { f.zero() })
        .collect();
    let sol = sys
        .solve(&rhs)
        .ok_or_else(|| Error::CheckFailed("grouplikes are not independent on the coradical pivots".into()))?;
    let mut e = vec![f.zero(); n];
    for (&p, x) in piv.iter().zip(sol) {
        e[p] = x;
    }
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    for _ in 0..LIFT_ROUNDS {
        let e2 = c.dual_mul(&e, &e);
        if e2 == e {
            let mut keep: Vec<String> = keep.iter().map(|s| s.to_string()).collect();
            keep.sort();
            keep.dedup();
            return Ok(IdempotentPresentation {
                coalgebra: c.clone(),
                keep,
                e,
            });
        }
        let e3 = c.dual_mul(&e2, &e);
        e = e2
            .iter()
            .zip(&e3)
            .map(|(a, b)| &(&three * a) - &(&two * b))
            .collect();
    }
    Err(Error::CheckFailed("idempotent lifting did not converge".into()))
}

/// `eCe` together with the maps relating it to `C`.
#[derive(Clone, Debug)]
pub struct Localization {
    presentation: IdempotentPresentation,
    local: Arc<Coalgebra>,
    /// `P` on column vectors.
    projection: Matrix,
    /// `L_e` on column vectors.
    left_strip: Matrix,
    image: Subspace,
}

impl Localization {
    pub fn presentation(&self) -> &IdempotentPresentation {
        &self.presentation
    }

    /// The coalgebra `eCe`.
    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.local
    }

    /// `eCe` as a subspace of `C`.
    pub fn image(&self) -> &Subspace {
        &self.image
    }

    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// Coordinates in `eCe` of `P(c)`.
    fn local_coords(&self, c: &[Scalar]) -> Vec<Scalar> {
        let pc = self.projection.mul_vec(c);
        self.image.pivots().iter().map(|&p| pc[p].clone()).collect()
    }

    /// The action matrix of `e` on a comodule.
    fn e_action(&self, m: &Comodule) -> Matrix {
        m.dual_action(&self.presentation.e)
    }
}

/// Matrices of `c -> sum e(c_1) c_2` and `c -> sum c_1 e(c_2)`.
fn strips(c: &Coalgebra, e: &[Scalar]) -> (Matrix, Matrix) {
    let f = c.field();
    let n = c.dim();
    let mut right = Matrix::zeros(f, n, n);
    let mut left = Matrix::zeros(f, n, n);
    for i in 0..n {
        for (j, k, mu) in c.delta(i) {
            right[(*k, i)] += &(mu * &e[*j]);
            left[(*j, i)] += &(mu * &e[*k]);
        }
    }
    (right, left)
}

pub fn localize_coalgebra(p: &IdempotentPresentation) -> Result<Localization> {
    let c = &p.coalgebra;
    let f = c.field();
    let (right, left) = strips(c, &p.e);
    let projection = left.mul(&right);
    let image = Subspace::from_rows(&projection.transpose());
    let piv = image.pivots().to_vec();
    let mut delta: Vec<Vec<Term>> = Vec::with_capacity(image.dim());
    for v in image.vectors() {
        let d = projection.mul(&c.delta_of(&v)).mul(&projection.transpose());
        let mut terms = Vec::new();
        for (a, &pa) in piv.iter().enumerate() {
            for (b, &pb) in piv.iter().enumerate() {
                let x = &d[(pa, pb)];
                if !x.is_zero() {
                    terms.push((a, b, x.clone()));
                }
            }
        }
        delta.push(terms);
    }
    let counit = image.vectors().iter().map(|v| c.counit_of(v)).collect();
    let labels = piv.iter().map(|&i| c.labels()[i].clone()).collect();
    let local = Arc::new(Coalgebra::new(f, labels, delta, counit)?);
    Ok(Localization {
        presentation: p.clone(),
        local,
        projection,
        left_strip: left,
        image,
    })
}

/// `T(M) = Me` with its `eCe`-coaction, and the basis of `Me` as columns.
pub fn localize_comodule(loc: &Localization, m: &Comodule) -> Result<(Comodule, Matrix)> {
    same_coalgebra(loc, m)?;
    let f = m.field();
    let e = loc.e_action(m);
    let w = Subspace::from_rows(&e.transpose());
    let basis = w.basis().transpose();
    let k = loc.local.dim();
    let r = w.dim();
    let mut phi = vec![Matrix::zeros(f, r, r); k];
    for (i, p) in m.phi().iter().enumerate() {
        let coeff = loc.local_coords(&loc.presentation.coalgebra.basis_vector(i));
        if coeff.iter().all(Scalar::is_zero) {
            continue;
        }
        let moved = e.mul(p).mul(&basis);
        let block = moved.select_rows(w.pivots());
        for (a, x) in coeff.iter().enumerate() {
            if !x.is_zero() {
                phi[a].axpy(x, &block);
            }
        }
    }
    Ok((Comodule::from_matrices(loc.local.clone(), phi)?, basis))
}

/// `T` on a comodule map `g: M -> N` (columns are images), in the bases
/// returned by [`localize_comodule`].
pub fn localize_map(loc: &Localization, m: &Comodule, n: &Comodule, g: &Matrix) -> Result<Matrix> {
    let (_, bm) = localize_comodule(loc, m)?;
    let wn = Subspace::from_rows(&loc.e_action(n).transpose());
    Ok(g.mul(&bm).select_rows(wn.pivots()))
}

/// `eC` as a `C`-`eCe`-bicomodule.
pub fn ec_bicomodule(loc: &Localization) -> Result<Bicomodule> {
    let c = &loc.presentation.coalgebra;
    let f = c.field();
    let y = Subspace::from_rows(&loc.left_strip.transpose());
    let r = y.dim();
    let py = y.pivots().to_vec();
    let pv = loc.image.pivots().to_vec();
    let mut phi = vec![Matrix::zeros(f, r, r); c.dim()];
    let mut psi = vec![Matrix::zeros(f, r, r); loc.local.dim()];
    for (s, v) in y.vectors().iter().enumerate() {
        let d = c.delta_of(v);
        for (i, ph) in phi.iter_mut().enumerate() {
            for (t, &pt) in py.iter().enumerate() {
                ph[(t, s)] = d[(i, pt)].clone();
            }
        }
        let dr = loc.left_strip.mul(&d).mul(&loc.projection.transpose());
        for (a, ps) in psi.iter_mut().enumerate() {
            for (t, &pt) in py.iter().enumerate() {
                ps[(t, s)] = dr[(pt, pv[a])].clone();
            }
        }
    }
    let left = Comodule::from_matrices(c.clone(), phi)?;
    let right = RightComodule::from_matrices(loc.local.clone(), psi)?;
    Bicomodule::new(left, right)
}

/// `S(N) = eC (cotensor)_{eCe} N` as a left `C`-comodule, with its inclusion
/// into `eC (x) N`.
pub fn section_s(loc: &Localization, n: &Comodule) -> Result<(Comodule, Matrix)> {
    if **n.coalgebra() != *loc.local {
        return Err(Error::invalid("comodule is not over the localized coalgebra"));
    }
    ec_bicomodule(loc)?.cotensor(n)
}

/// The natural map `T(S(N)) -> N`, `y (x) x -> eps(y) x`, in the basis of
/// `T(S(N))` returned by [`localize_comodule`], together with `T(S(N))`.
pub fn ts_counit(loc: &Localization, n: &Comodule) -> Result<(Comodule, Matrix)> {
    let f = n.field();
    let (s, incl) = section_s(loc, n)?;
    let (ts, basis) = localize_comodule(loc, &s)?;
    let y = Subspace::from_rows(&loc.left_strip.transpose());
    let c = &loc.presentation.coalgebra;
    let eps: Vec<Scalar> = y.vectors().iter().map(|v| c.counit_of(v)).collect();
    let row = Matrix::from_rows(f, eps.len(), vec![eps]);
    let contract = row.kronecker(&Matrix::identity(f, n.dim()));
    Ok((ts, contract.mul(&incl).mul(&basis)))
}

/// Outcome of [`verify_ts_identity`] for one sample comodule.
#[derive(Clone, Debug)]
pub struct TsEntry {
    pub dim: usize,
    pub section_dim: usize,
    /// The natural map is a bijective comodule map.
    pub iso: bool,
}

#[derive(Clone, Debug)]
pub struct TsReport {
    pub entries: Vec<TsEntry>,
    /// `(i, j, dim Hom(S n_i, S n_j), dim Hom(n_i, n_j))`.
    pub hom_dims: Vec<(usize, usize, usize, usize)>,
}

impl TsReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.iso) && self.hom_dims.iter().all(|h| h.2 == h.3)
    }
}

pub fn verify_ts_identity(loc: &Localization, sample: &[Comodule]) -> Result<TsReport> {
    let mut entries = Vec::new();
    let mut sections = Vec::new();
    for n in sample {
        let (ts, map) = ts_counit(loc, n)?;
        let iso = map.is_square()
            && map.rows() == n.dim()
            && (n.dim() == 0 || map.is_invertible())
            && ts.action_module().is_morphism(&n.action_module(), &map);
        let (s, _) = section_s(loc, n)?;
        entries.push(TsEntry {
            dim: n.dim(),
            section_dim: s.dim(),
            iso,
        });
        sections.push(s);
    }
    let mut hom_dims = Vec::new();
    for i in 0..sample.len() {
        for j in 0..sample.len() {
            hom_dims.push((
                i,
                j,
                sections[i].hom_space(&sections[j])?.len(),
                sample[i].hom_space(&sample[j])?.len(),
            ));
        }
    }
    Ok(TsReport { entries, hom_dims })
}

/// Whether `T` sends the triple to a short exact sequence.
pub fn is_exact_on(loc: &Localization, t: &ShortExactTriple) -> Result<bool> {
    let (x, _) = localize_comodule(loc, &t.sub)?;
    let (y, _) = localize_comodule(loc, &t.middle)?;
    let (z, _) = localize_comodule(loc, &t.quotient)?;
    let i = localize_map(loc, &t.sub, &t.middle, &t.sub_basis)?;
    let p = localize_map(loc, &t.middle, &t.quotient, &t.projection)?;
    let dims_ok = x.dim() + z.dim() == y.dim();
    let composite = i.cols() == 0 || p.rows() == 0 || p.mul(&i).is_zero();
    let inj = i.cols() == 0 || i.rank() == x.dim();
    let surj = p.rows() == 0 || p.rank() == z.dim();
    Ok(dims_ok && composite && inj && surj)
}

fn same_coalgebra(loc: &Localization, m: &Comodule) -> Result<()> {
    if **m.coalgebra() != *loc.presentation.coalgebra {
        return Err(Error::invalid("comodule is not over the localized coalgebra's parent"));
    }
    Ok(())
}

#[cfg(test)]
mod tests;
