//! Experimental left adjoint of `T` for finite-dimensional `C`:
//! `L(N) = C*e (x)_{eC*e} N`, with `eC*e` identified with `(eCe)*` by
//! restriction. Only checked on small examples.

use super::Localization;
use crate::comodule::{ActionModule, Comodule};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, Subspace};

pub fn left_adjoint(loc: &Localization, n: &Comodule) -> Result<Comodule> {
    if **n.coalgebra() != *loc.local {
        return Err(Error::invalid("comodule is not over the localized coalgebra"));
    }
    let c = &loc.presentation.coalgebra;
    let f = c.field();
    let dim = c.dim();
    let e = &loc.presentation.e;
    // C*e, spanned by products b_i* e.
    let rows: Vec<Vec<Scalar>> = (0..dim).map(|i| c.dual_mul(&c.basis_vector(i), e)).collect();
    let u = Subspace::span(f, dim, &rows);
    let ud = u.dim();
    let m = n.dim();
    let coords = |v: &[Scalar]| -> Vec<Scalar> { u.pivots().iter().map(|&p| v[p].clone()).collect() };
    let mult = |on_left: bool, g: &[Scalar]| -> Matrix {
        let cols: Vec<Vec<Scalar>> = u
            .vectors()
            .iter()
            .map(|x| coords(&if on_left { c.dual_mul(g, x) } else { c.dual_mul(x, g) }))
            .collect();
        Matrix::from_rows(f, ud, cols).transpose()
    };
    // r_a = (a-th dual basis functional of eCe) composed with c -> P(c).
    let k = loc.local.dim();
    let r: Vec<Vec<Scalar>> = (0..k)
        .map(|a| (0..dim).map(|i| loc.local_coords(&c.basis_vector(i))[a].clone()).collect())
        .collect();
    let id_n = Matrix::identity(f, m);
    let id_u = Matrix::identity(f, ud);
    let mut rel_rows: Vec<Vec<Scalar>> = Vec::new();
    for (a, ra) in r.iter().enumerate() {
        let rel = mult(false, ra).kronecker(&id_n).sub(&id_u.kronecker(&n.phi()[a]));
        rel_rows.extend(rel.transpose().row_vecs());
    }
    let rel = Subspace::span(f, ud * m, &rel_rows);
    let gens: Vec<Matrix> = (0..dim)
        .map(|i| mult(true, &c.basis_vector(i)).kronecker(&id_n))
        .collect();
    let big = ActionModule::new(f, ud * m, gens);
    let (q, _) = big.quotient(&rel)?;
    Comodule::from_matrices(c.clone(), q.gens().to_vec())
}
