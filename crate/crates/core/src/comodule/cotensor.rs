//! Right comodules, bicomodules and the cotensor product.

use std::sync::Arc;

use super::Comodule;
use crate::coalgebra::{CheckReport, Coalgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Subspace};

use super::action::ActionModule;

/// Right comodule `rho: M -> M (x) D`, stored as matrices `Psi_i` with
/// `(Psi_i)[t][s]` the coefficient of `x_t (x) b_i` in `rho(x_s)`. The axioms
/// read `sum_i mu_i^{jk} Psi_i = Psi_j Psi_k` and `sum_i eps_i Psi_i = I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightComodule {
    coalgebra: Arc<Coalgebra>,
    dim: usize,
    psi: Vec<Matrix>,
}

impl RightComodule {
    pub fn from_matrices(coalgebra: Arc<Coalgebra>, psi: Vec<Matrix>) -> Result<RightComodule> {
        if psi.len() != coalgebra.dim() {
            return Err(Error::invalid("one coaction matrix per coalgebra basis element expected"));
        }
        let dim = psi.first().map_or(0, Matrix::rows);
        if psi.iter().any(|p| p.rows() != dim || p.cols() != dim) {
            return Err(Error::invalid("coaction matrices must be square of equal size"));
        }
        Ok(RightComodule { coalgebra, dim, psi })
    }

    /// `D` as a right comodule over itself.
    pub fn regular(coalgebra: Arc<Coalgebra>) -> RightComodule {
        let f = coalgebra.field();
        let n = coalgebra.dim();
        let mut psi = vec![Matrix::zeros(f, n, n); n];
        for s in 0..n {
            for (j, k, mu) in coalgebra.delta(s) {
                psi[*k][(*j, s)] += mu;
            }
        }
        RightComodule { coalgebra, dim: n, psi }
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn psi(&self) -> &[Matrix] {
        &self.psi
    }

    pub fn check(&self) -> CheckReport {
        let c = &self.coalgebra;
        let f = c.field();
        let n = c.dim();
        let mut report = CheckReport::default();
        let mut lhs = vec![vec![Matrix::zeros(f, self.dim, self.dim); n]; n];
        for i in 0..n {
            for (j, k, mu) in c.delta(i) {
                lhs[*j][*k].axpy(mu, &self.psi[i]);
            }
        }
        for (j, row) in lhs.iter().enumerate() {
            for (k, l) in row.iter().enumerate() {
                if *l != self.psi[j].mul(&self.psi[k]) {
                    report.push(format!(
                        "right coassociativity fails on the {}(x){} component",
                        c.labels()[j],
                        c.labels()[k]
                    ));
                }
            }
        }
        let mut counit = Matrix::zeros(f, self.dim, self.dim);
        for (e, p) in c.counit().iter().zip(&self.psi) {
            counit.axpy(e, p);
        }
        if counit != Matrix::identity(f, self.dim) {
            report.push("right counit law fails".into());
        }
        report
    }
}

/// A space that is a left `C`-comodule and a right `D`-comodule with
/// commuting coactions.
#[derive(Clone, Debug)]
pub struct Bicomodule {
    pub left: Comodule,
    pub right: RightComodule,
}

impl Bicomodule {
    pub fn new(left: Comodule, right: RightComodule) -> Result<Bicomodule> {
        if left.dim() != right.dim() {
            return Err(Error::invalid("bicomodule sides have different dimensions"));
        }
        Ok(Bicomodule { left, right })
    }

    pub fn check(&self) -> CheckReport {
        let mut r = self.left.check();
        r.violations.extend(self.right.check().violations);
        for l in self.left.phi() {
            for p in self.right.psi() {
                if l.mul(p) != p.mul(l) {
                    r.push("left and right coactions do not commute".into());
                    return r;
                }
            }
        }
        r
    }

    /// `B (cotensor)_D N` with the induced left `C`-coaction, and its
    /// inclusion into `B (x) N` (columns).
    pub fn cotensor(&self, n: &Comodule) -> Result<(Comodule, Matrix)> {
        let k = cotensor(&self.right, n)?;
        let f = n.field();
        let incl = k.basis().transpose();
        let id = Matrix::identity(f, n.dim());
        let gens: Vec<Matrix> = self.left.phi().iter().map(|l| l.kronecker(&id)).collect();
        let big = ActionModule::new(f, self.left.dim() * n.dim(), gens);
        let restricted = if k.dim() == 0 {
            ActionModule::new(f, 0, vec![Matrix::zeros(f, 0, 0); self.left.phi().len()])
        } else {
            big.restrict(&incl)?
        };
        let m = Comodule::from_matrices(self.left.coalgebra().clone(), restricted.gens().to_vec())?;
        Ok((m, incl))
    }
}

/// `M (cotensor)_D N = ker(rho_M (x) id - id (x) rho_N)` inside `M (x) N`.
pub fn cotensor(m: &RightComodule, n: &Comodule) -> Result<Subspace> {
    if m.coalgebra() != n.coalgebra() {
        return Err(Error::invalid("cotensor over different coalgebras"));
    }
    let f = n.field();
    let (dm, dn) = (m.dim(), n.dim());
    if dm * dn == 0 {
        return Ok(Subspace::zero(f, dm * dn));
    }
    let im = Matrix::identity(f, dm);
    let in_ = Matrix::identity(f, dn);
    let mut sys = Matrix::zeros(f, 0, dm * dn);
    for (p, q) in m.psi().iter().zip(n.phi()) {
        let block = p.kronecker(&in_).sub(&im.kronecker(q));
        sys = Subspace::from_rows(&sys.vstack(&block)).basis().clone();
    }
    if sys.rows() == 0 {
        return Ok(Subspace::full(f, dm * dn));
    }
    Ok(Subspace::from_rows(&sys.kernel_basis()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{path_coalgebra, Quiver};
    use crate::exactlin::Field;

    #[test]
    fn cotensor_with_regular_is_identity() {
        let f = Field::Rational;
        let c = Arc::new(path_coalgebra(f, &Quiver::single_arrow(), 1).unwrap());
        let right = RightComodule::regular(c.clone());
        assert!(right.check().is_ok());
        let left = Comodule::regular(c.clone());
        let b = Bicomodule::new(left.clone(), right.clone()).unwrap();
        assert!(b.check().is_ok());
        let n = Comodule::new(
            c.clone(),
            2,
            vec![(0, 0, 0, f.one()), (0, 2, 1, f.one()), (1, 1, 1, f.one())],
        )
        .unwrap();
        let (dn, _) = b.cotensor(&n).unwrap();
        assert_eq!(dn.dim(), 2);
        assert!(dn.is_isomorphic(&n).unwrap());
        assert!(dn.check().is_ok());
        // rank-nullity sanity
        let k = cotensor(&right, &n).unwrap();
        assert_eq!(k.dim(), 2);
    }
}
