//! Finite-dimensional left comodules.
//!
//! A comodule on `K^m` is stored as matrices `Phi_i`, one per coalgebra basis
//! element, where `(Phi_i)[t][s]` is the coefficient of `b_i (x) x_t` in
//! `rho(x_s)`. The axioms read `sum_i mu_i^{jk} Phi_i = Phi_k Phi_j` and
//! `sum_i eps_i Phi_i = I`, and `f in C*` acts by `sum_i f_i Phi_i`.

mod action;
mod cotensor;
mod dimvec;

use std::sync::Arc;

pub use action::{ActionModule, Decomposition};
pub use cotensor::{cotensor, Bicomodule, RightComodule};
pub use dimvec::DimensionVector;

use crate::coalgebra::{grouplikes, CheckReport, Coalgebra, Grouplikes};
use crate::error::{Error, Result};
use crate::exactlin::{all_subspaces, Field, Matrix, Scalar, Subspace};

/// Default cap on the number of candidate subspaces examined when
/// enumerating subcomodules.
pub const SUBSPACE_BUDGET: u128 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comodule {
    coalgebra: Arc<Coalgebra>,
    dim: usize,
    phi: Vec<Matrix>,
}

/// `0 -> sub -> M -> quotient -> 0` with the inclusion as columns of
/// `sub_basis`.
#[derive(Clone, Debug)]
pub struct ShortExactTriple {
    pub sub: Comodule,
    pub middle: Comodule,
    pub quotient: Comodule,
    pub sub_basis: Matrix,
    pub projection: Matrix,
}

impl ShortExactTriple {
    pub fn is_trivial(&self) -> bool {
        self.sub.dim() == 0 || self.quotient.dim() == 0
    }
}

impl Comodule {
    /// From sparse terms `(s, i, t, c)`: `rho(x_s)` contains `c b_i (x) x_t`.
    pub fn new(
        coalgebra: Arc<Coalgebra>,
        dim: usize,
        rho: Vec<(usize, usize, usize, Scalar)>,
    ) -> Result<Comodule> {
        let f = coalgebra.field();
        let n = coalgebra.dim();
        let mut phi = vec![Matrix::zeros(f, dim, dim); n];
        for (s, i, t, c) in rho {
            if s >= dim || t >= dim || i >= n {
                return Err(Error::invalid(format!(
                    "coaction term ({s}, {i}, {t}) out of range"
                )));
            }
            if c.field() != f {
                return Err(Error::FieldMismatch(f, c.field()));
            }
            phi[i][(t, s)] += &c;
        }
        Ok(Comodule { coalgebra, dim, phi })
    }

    pub fn from_matrices(coalgebra: Arc<Coalgebra>, phi: Vec<Matrix>) -> Result<Comodule> {
        if phi.len() != coalgebra.dim() {
            return Err(Error::invalid("one coaction matrix per coalgebra basis element expected"));
        }
        let dim = phi.first().map_or(0, Matrix::rows);
        for p in &phi {
            if p.rows() != dim || p.cols() != dim {
                return Err(Error::invalid("coaction matrices must be square of equal size"));
            }
            if p.field() != coalgebra.field() {
                return Err(Error::FieldMismatch(coalgebra.field(), p.field()));
            }
        }
        Ok(Comodule { coalgebra, dim, phi })
    }

    pub fn zero(coalgebra: Arc<Coalgebra>) -> Comodule {
        let n = coalgebra.dim();
        let f = coalgebra.field();
        Comodule {
            coalgebra,
            dim: 0,
            phi: vec![Matrix::zeros(f, 0, 0); n],
        }
    }

    /// The simple comodule `K g` for a grouplike `g`.
    pub fn simple(coalgebra: Arc<Coalgebra>, g: &[Scalar]) -> Comodule {
        let f = coalgebra.field();
        let phi = g.iter().map(|x| Matrix::new(f, 1, 1, vec![x.clone()])).collect();
        Comodule {
            coalgebra,
            dim: 1,
            phi,
        }
    }

    /// The simple comodule at the grouplike labeled `label` (label of its
    /// first nonzero coordinate).
    pub fn simple_at(coalgebra: Arc<Coalgebra>, label: &str) -> Result<Comodule> {
        let gl = grouplikes(&coalgebra)?;
        let labels = gl.labels(&coalgebra);
        let k = labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::invalid(format!("no grouplike labeled {label:?}")))?;
        Ok(Comodule::simple(coalgebra, &gl.elements[k]))
    }

    /// `C` as a left comodule over itself via `Delta`.
    pub fn regular(coalgebra: Arc<Coalgebra>) -> Comodule {
        let f = coalgebra.field();
        let n = coalgebra.dim();
        let mut phi = vec![Matrix::zeros(f, n, n); n];
        for s in 0..n {
            for (j, k, mu) in coalgebra.delta(s) {
                phi[*j][(*k, s)] += mu;
            }
        }
        Comodule {
            coalgebra,
            dim: n,
            phi,
        }
    }

    pub fn coalgebra(&self) -> &Arc<Coalgebra> {
        &self.coalgebra
    }

    pub fn field(&self) -> Field {
        self.coalgebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn phi(&self) -> &[Matrix] {
        &self.phi
    }

    /// Sparse coaction terms `(s, i, t, c)` in lexicographic order.
    pub fn rho_terms(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for s in 0..self.dim {
            for (i, p) in self.phi.iter().enumerate() {
                for t in 0..self.dim {
                    let c = &p[(t, s)];
                    if !c.is_zero() {
                        out.push((s, i, t, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// Verifies coassociativity and the counit law.
    pub fn check(&self) -> CheckReport {
        let c = &self.coalgebra;
        let f = self.field();
        let n = c.dim();
        let mut report = CheckReport::default();
        // lhs[j][k] = sum_i mu_i^{jk} Phi_i
        let mut lhs: Vec<Vec<Option<Matrix>>> = vec![vec![None; n]; n];
        for i in 0..n {
            for (j, k, mu) in c.delta(i) {
                let e = lhs[*j][*k].get_or_insert_with(|| Matrix::zeros(f, self.dim, self.dim));
                e.axpy(mu, &self.phi[i]);
            }
        }
        let zero = Matrix::zeros(f, self.dim, self.dim);
        for j in 0..n {
            for k in 0..n {
                let l = lhs[j][k].as_ref().unwrap_or(&zero);
                let r = self.phi[k].mul(&self.phi[j]);
                if *l != r {
                    report.push(format!(
                        "coassociativity fails on the {}(x){} component",
                        c.labels()[j],
                        c.labels()[k]
                    ));
                }
            }
        }
        if self.dual_action(c.counit()) != Matrix::identity(f, self.dim) {
            report.push("counit law fails".into());
        }
        report
    }

    /// Matrix of `x -> f . x = sum f(x_-1) x_0`.
    pub fn dual_action(&self, f: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field(), self.dim, self.dim);
        for (x, p) in f.iter().zip(&self.phi) {
            if !x.is_zero() {
                m.axpy(x, p);
            }
        }
        m
    }

    /// Coefficient matrix: row `(t, s)` holds the `C`-coordinates of the
    /// coefficient `c_ts`.
    fn coefficient_matrix(&self) -> Matrix {
        let n = self.coalgebra.dim();
        let rows: Vec<Vec<Scalar>> = (0..self.dim)
            .flat_map(|t| (0..self.dim).map(move |s| (t, s)))
            .map(|(t, s)| (0..n).map(|i| self.phi[i][(t, s)].clone()).collect())
            .collect();
        Matrix::from_rows(self.field(), n, rows)
    }

    /// Coefficient coalgebra `cf(M)`: the span of the coaction coefficients.
    pub fn cf(&self) -> Subspace {
        Subspace::from_rows(&self.coefficient_matrix())
    }

    /// `{f in C* : f . x = 0 for all x}`.
    pub fn annihilator(&self) -> Subspace {
        let n = self.coalgebra.dim();
        if self.dim == 0 {
            return Subspace::full(self.field(), n);
        }
        // Columns: vec(Phi_i); f annihilates iff sum f_i vec(Phi_i) = 0.
        let cols: Vec<Vec<Scalar>> = self.phi.iter().map(Matrix::flatten).collect();
        let sys = Matrix::from_rows(self.field(), self.dim * self.dim, cols).transpose();
        Subspace::from_rows(&sys.kernel_basis())
    }

    pub fn action_module(&self) -> ActionModule {
        ActionModule::new(self.field(), self.dim, self.phi.clone())
    }

    fn from_action(&self, m: ActionModule) -> Comodule {
        Comodule {
            coalgebra: self.coalgebra.clone(),
            dim: m.dim(),
            phi: m.gens().to_vec(),
        }
    }

    fn same_coalgebra(&self, other: &Comodule) -> Result<()> {
        if Arc::ptr_eq(&self.coalgebra, &other.coalgebra) || self.coalgebra == other.coalgebra {
            Ok(())
        } else {
            Err(Error::invalid("comodules over different coalgebras"))
        }
    }

    /// Basis of comodule maps `self -> other`.
    pub fn hom_space(&self, other: &Comodule) -> Result<Vec<Matrix>> {
        self.same_coalgebra(other)?;
        Ok(self.action_module().hom_space(&other.action_module()))
    }

    /// `End(M)` structure constants and its Jacobson radical.
    pub fn end_ring_radical(&self) -> Result<(crate::exactlin::MatrixAlgebra, Subspace)> {
        self.action_module().end_ring_radical()
    }

    /// Indecomposable summands with their inclusion matrices.
    pub fn decompose(&self) -> Result<Vec<(Comodule, Matrix)>> {
        let d = self.action_module().decompose()?;
        Ok(d.pieces
            .into_iter()
            .map(|(m, inc)| (self.from_action(m), inc))
            .collect())
    }

    pub fn is_indecomposable(&self) -> Result<bool> {
        self.action_module().is_indecomposable()
    }

    pub fn isomorphism(&self, other: &Comodule, seed: u64) -> Result<Option<Matrix>> {
        self.same_coalgebra(other)?;
        self.action_module().isomorphism(&other.action_module(), seed)
    }

    pub fn is_isomorphic(&self, other: &Comodule) -> Result<bool> {
        Ok(self.isomorphism(other, 0)?.is_some())
    }

    pub fn direct_sum(&self, other: &Comodule) -> Result<Comodule> {
        self.same_coalgebra(other)?;
        Ok(self.from_action(self.action_module().direct_sum(&other.action_module())))
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<Comodule> {
        Ok(self.from_action(self.action_module().change_basis(p)?))
    }

    /// Subcomodule on the invariant subspace spanned by the columns of
    /// `basis`.
    pub fn restrict(&self, basis: &Matrix) -> Result<Comodule> {
        Ok(self.from_action(self.action_module().restrict(basis)?))
    }

    pub fn quotient(&self, sub: &Subspace) -> Result<(Comodule, Matrix)> {
        let (q, p) = self.action_module().quotient(sub)?;
        Ok((self.from_action(q), p))
    }

    /// Largest subcomodule with coefficients in the coradical.
    pub fn socle(&self) -> Result<Subspace> {
        let c0 = crate::coalgebra::coradical(&self.coalgebra)?;
        Ok(self.socle_for(&c0))
    }

    fn socle_for(&self, c0: &Subspace) -> Subspace {
        let f = self.field();
        let j = c0.orthogonal();
        if j.is_zero() || self.dim == 0 {
            return Subspace::full(f, self.dim);
        }
        let mut sys = Matrix::zeros(f, 0, self.dim);
        for v in j.vectors() {
            sys = sys.vstack(&self.dual_action(&v));
        }
        Subspace::from_rows(&sys.kernel_basis())
    }

    /// Composition multiplicities of the grouplike simples.
    pub fn dimension_vector(&self) -> Result<DimensionVector> {
        let gl = grouplikes(&self.coalgebra)?;
        self.dimension_vector_with(&gl)
    }

    pub fn dimension_vector_with(&self, gl: &Grouplikes) -> Result<DimensionVector> {
        if !gl.is_pointed() {
            return Err(Error::NotPointed);
        }
        let labels = gl.labels(&self.coalgebra);
        let mut dv = DimensionVector::default();
        let mut cur = self.clone();
        while cur.dim > 0 {
            let soc = cur.socle_for(&gl.coradical);
            let mut found = 0;
            for (g, label) in gl.elements.iter().zip(&labels) {
                let m = cur.isotypic_dim(g);
                if m > 0 {
                    dv.add(label, m);
                    found += m;
                }
            }
            if found != soc.dim() || found == 0 {
                return Err(Error::CheckFailed(
                    "socle is not a sum of grouplike simples".into(),
                ));
            }
            cur = cur.quotient(&soc)?.0;
        }
        Ok(dv)
    }

    /// `dim {x : rho(x) = g (x) x}`.
    fn isotypic_dim(&self, g: &[Scalar]) -> usize {
        let f = self.field();
        let mut sys = Matrix::zeros(f, 0, self.dim);
        for (p, gi) in self.phi.iter().zip(g) {
            sys = sys.vstack(&p.sub(&Matrix::identity(f, self.dim).scale(gi)));
        }
        self.dim - sys.rank()
    }

    /// All subcomodules. Over GF(p) every subspace is tested; over the
    /// rationals the sublattice generated by the socle and radical series
    /// is returned.
    pub fn subcomodules(&self, budget: u128) -> Result<Vec<Subspace>> {
        let m = self.action_module();
        match self.field() {
            Field::Prime(_) => Ok(all_subspaces(self.field(), self.dim, budget)?
                .into_iter()
                .filter(|s| m.is_invariant(s))
                .collect()),
            Field::Rational => self.series_lattice(budget),
        }
    }

    fn series_lattice(&self, budget: u128) -> Result<Vec<Subspace>> {
        let f = self.field();
        let c0 = crate::coalgebra::coradical(&self.coalgebra)?;
        let j = c0.orthogonal();
        let mut gens = vec![Subspace::zero(f, self.dim), Subspace::full(f, self.dim)];
        // Socle series.
        let mut cur = Subspace::zero(f, self.dim);
        loop {
            let (q, proj) = self.quotient(&cur)?;
            let soc = q.socle_for(&c0);
            if soc.is_zero() {
                break;
            }
            let pre = preimage(&proj, &soc).sum(&cur);
            if pre == cur {
                break;
            }
            gens.push(pre.clone());
            cur = pre;
        }
        // Radical series: rad N = J . N.
        let mut cur = Subspace::full(f, self.dim);
        while !cur.is_zero() {
            let mut rows = Vec::new();
            for v in j.vectors() {
                let a = self.dual_action(&v);
                for x in cur.vectors() {
                    rows.push(a.mul_vec(&x));
                }
            }
            let next = Subspace::span(f, self.dim, &rows);
            if next == cur {
                break;
            }
            gens.push(next.clone());
            cur = next;
        }
        let mut lattice: Vec<Subspace> = Vec::new();
        for g in gens {
            if !lattice.contains(&g) {
                lattice.push(g);
            }
        }
        loop {
            let mut added = false;
            let snapshot = lattice.clone();
            for a in &snapshot {
                for b in &snapshot {
                    for c in [a.sum(b), a.intersection(b)] {
                        if !lattice.contains(&c) {
                            lattice.push(c);
                            added = true;
                            if lattice.len() as u128 > budget {
                                return Err(Error::budget("subcomodule lattice", lattice.len() as u128, budget));
                            }
                        }
                    }
                }
            }
            if !added {
                break;
            }
        }
        lattice.sort_by_key(|s| (s.dim(), s.basis().flatten()));
        Ok(lattice)
    }

    /// Every short exact sequence `0 -> X -> M -> Z -> 0` with `X` among
    /// [`Comodule::subcomodules`].
    pub fn short_exact_triples(&self, budget: u128) -> Result<Vec<ShortExactTriple>> {
        self.subcomodules(budget)?
            .into_iter()
            .map(|s| self.triple_for(&s))
            .collect()
    }

    pub fn triple_for(&self, sub: &Subspace) -> Result<ShortExactTriple> {
        let basis = sub.basis().transpose();
        let x = self.restrict(&basis)?;
        let (z, proj) = self.quotient(sub)?;
        Ok(ShortExactTriple {
            sub: x,
            middle: self.clone(),
            quotient: z,
            sub_basis: basis,
            projection: proj,
        })
    }
}

/// `{x : proj x in target}` for a surjection `proj`.
fn preimage(proj: &Matrix, target: &Subspace) -> Subspace {
    let q = crate::coalgebra::quotient_map(target);
    let f = proj.field();
    if q.rows() == 0 {
        return Subspace::full(f, proj.cols());
    }
    Subspace::from_rows(&q.mul(proj).kernel_basis())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{path_coalgebra, Quiver};

    const Q: Field = Field::Rational;

    fn arrow(f: Field) -> Arc<Coalgebra> {
        Arc::new(path_coalgebra(f, &Quiver::single_arrow(), 1).unwrap())
    }

    /// rho(u) = a (x) u + x (x) v, rho(v) = b (x) v.
    fn uv(c: Arc<Coalgebra>) -> Comodule {
        let f = c.field();
        Comodule::new(c, 2, vec![(0, 0, 0, f.one()), (0, 2, 1, f.one()), (1, 1, 1, f.one())]).unwrap()
    }

    fn jordan_loop(f: Field) -> Comodule {
        let c = Arc::new(path_coalgebra(f, &Quiver::loops(1), 1).unwrap());
        // rho(v1) = g (x) v1, rho(v2) = l (x) v1 + g (x) v2
        Comodule::new(c, 2, vec![(0, 0, 0, f.one()), (1, 1, 0, f.one()), (1, 0, 1, f.one())]).unwrap()
    }

    #[test]
    fn check_examples() {
        let g = Arc::new(Coalgebra::grouplike_line(Q, "g"));
        assert!(Comodule::simple(g.clone(), &[Q.one()]).check().is_ok());
        let bad = Comodule::simple(g, &[Q.from_i64(2)]).check();
        assert!(bad.violations.iter().any(|v| v.contains("counit")));
        assert!(uv(arrow(Q)).check().is_ok());
        // The orientation with rho(v) = x (x) u + b (x) v is not coassociative
        // under Delta(x) = a (x) x + x (x) b.
        let wrong = Comodule::new(arrow(Q), 2, vec![(0, 0, 0, Q.one()), (1, 2, 0, Q.one()), (1, 1, 1, Q.one())]).unwrap();
        assert!(!wrong.check().is_ok());
    }

    #[test]
    fn cf_examples() {
        let c = arrow(Q);
        let sa = Comodule::simple_at(c.clone(), "a").unwrap();
        assert_eq!(sa.cf(), c.span_of(&["a"]).unwrap());
        assert_eq!(uv(c.clone()).cf(), Subspace::full(Q, 3));
        assert_eq!(Comodule::regular(c.clone()).cf(), Subspace::full(Q, 3));
        assert!(Comodule::regular(c.clone()).check().is_ok());
    }

    #[test]
    fn annihilator_examples() {
        let c = arrow(Q);
        assert!(Comodule::zero(c.clone()).annihilator().is_full());
        assert!(Comodule::regular(c.clone()).annihilator().is_zero());
        let sa = Comodule::simple_at(c.clone(), "a").unwrap();
        assert_eq!(sa.annihilator(), c.span_of(&["b", "x"]).unwrap());
        for m in [sa, uv(c.clone()), Comodule::regular(c)] {
            assert_eq!(m.cf().orthogonal(), m.annihilator());
        }
    }

    #[test]
    fn hom_examples() {
        let c = arrow(Q);
        let sa = Comodule::simple_at(c.clone(), "a").unwrap();
        let sb = Comodule::simple_at(c.clone(), "b").unwrap();
        assert_eq!(sa.hom_space(&sa).unwrap().len(), 1);
        assert!(sa.hom_space(&sb).unwrap().is_empty());
        assert_eq!(uv(c.clone()).hom_space(&uv(c)).unwrap().len(), 1);
    }

    #[test]
    fn end_radical_examples() {
        let c = arrow(Q);
        let sa = Comodule::simple_at(c.clone(), "a").unwrap();
        let (e, j) = sa.end_ring_radical().unwrap();
        assert_eq!((e.dim(), j.dim()), (1, 0));
        let (e, j) = sa.direct_sum(&sa).unwrap().end_ring_radical().unwrap();
        assert_eq!((e.dim(), j.dim()), (4, 0));
        let (e, j) = jordan_loop(Q).end_ring_radical().unwrap();
        assert_eq!((e.dim(), j.dim()), (2, 1));
    }

    #[test]
    fn decompose_examples() {
        let c = arrow(Q);
        let sa = Comodule::simple_at(c.clone(), "a").unwrap();
        let pieces = sa.direct_sum(&sa).unwrap().decompose().unwrap();
        assert_eq!(pieces.len(), 2);
        assert!(pieces.iter().all(|p| p.0.is_isomorphic(&sa).unwrap()));
        assert!(jordan_loop(Q).is_indecomposable().unwrap());
        assert!(uv(c).is_indecomposable().unwrap());
    }

    #[test]
    fn dimension_vector_examples() {
        let c = arrow(Q);
        let sa = Comodule::simple_at(c.clone(), "a").unwrap();
        assert_eq!(sa.dimension_vector().unwrap().to_string(), "a:1");
        assert_eq!(uv(c).dimension_vector().unwrap().to_string(), "a:1,b:1");
        let l = Arc::new(path_coalgebra(Q, &Quiver::loops(1), 2).unwrap());
        assert_eq!(Comodule::regular(l).dimension_vector().unwrap().to_string(), "g:3");
        let m = Arc::new(Coalgebra::matrix_coalgebra(Q, 2));
        assert!(matches!(Comodule::regular(m).dimension_vector(), Err(Error::NotPointed)));
    }

    #[test]
    fn triple_examples() {
        let f = Field::Prime(3);
        let c = arrow(f);
        let sa = Comodule::simple_at(c.clone(), "a").unwrap();
        let t = sa.short_exact_triples(SUBSPACE_BUDGET).unwrap();
        assert!(t.iter().all(ShortExactTriple::is_trivial));
        let t = uv(c.clone()).short_exact_triples(SUBSPACE_BUDGET).unwrap();
        let nontrivial: Vec<_> = t.iter().filter(|t| !t.is_trivial()).collect();
        assert_eq!(nontrivial.len(), 1);
        let tr = nontrivial[0];
        let sb = Comodule::simple_at(c.clone(), "b").unwrap();
        assert!(tr.sub.is_isomorphic(&sb).unwrap());
        assert!(tr.quotient.is_isomorphic(&sa).unwrap());
        let ss = sa.direct_sum(&sa).unwrap();
        let lines = ss
            .subcomodules(SUBSPACE_BUDGET)
            .unwrap()
            .into_iter()
            .filter(|s| s.dim() == 1)
            .count();
        assert_eq!(lines, 4);
    }

    #[test]
    fn rational_lattice_contains_socle() {
        let t = uv(arrow(Q)).short_exact_triples(SUBSPACE_BUDGET).unwrap();
        assert_eq!(t.iter().filter(|t| !t.is_trivial()).count(), 1);
    }
}
