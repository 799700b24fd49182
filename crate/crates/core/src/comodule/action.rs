//! Finite-dimensional modules presented by generator matrices.
//!
//! A module is `K^n` with a list of operators `A_i`; morphisms `M -> N` are
//! matrices `F` with `F A_i = B_i F` for all `i`. Comodules (generators
//! `Phi_i`), quiver representations and free-algebra modules all reduce to
//! this form, so Hom spaces, radicals, decompositions and isomorphism tests
//! are implemented once here.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{
    minpoly_factors, random_combination, Coordinatizer, Field, Matrix, MatrixAlgebra, Scalar,
    Subspace,
};

/// Number of random elements tried before falling back to certified
/// methods.
const RANDOM_TRIES: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionModule {
    field: Field,
    dim: usize,
    gens: Vec<Matrix>,
}

/// A direct-sum decomposition: each piece is given by a basis (columns of
/// `inclusion`) of an invariant subspace; concatenating the inclusions gives
/// an invertible matrix, the witness `pieces -> M`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub pieces: Vec<(ActionModule, Matrix)>,
}

impl Decomposition {
    /// The isomorphism from the direct sum of the pieces onto the module.
    pub fn witness(&self, field: Field, dim: usize) -> Matrix {
        let mut w = Matrix::zeros(field, dim, 0);
        for (_, inc) in &self.pieces {
            w = w.hstack(inc);
        }
        w
    }
}

impl ActionModule {
    pub fn new(field: Field, dim: usize, gens: Vec<Matrix>) -> ActionModule {
        for g in &gens {
            assert_eq!((g.rows(), g.cols()), (dim, dim), "generator shape");
        }
        ActionModule { field, dim, gens }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    /// Basis of `Hom(self, other)` as `other.dim x self.dim` matrices.
    pub fn hom_space(&self, other: &ActionModule) -> Vec<Matrix> {
        assert_eq!(self.gens.len(), other.gens.len(), "modules over different presentations");
        let (m, n) = (self.dim, other.dim);
        if m == 0 || n == 0 {
            return vec![];
        }
        let f = self.field;
        // Row-major vec(F): vec(F A) = (I (x) A^T) vec F, vec(B F) = (B (x) I) vec F.
        let mut blocks = Vec::with_capacity(self.gens.len());
        for (a, b) in self.gens.iter().zip(&other.gens) {
            let lhs = Matrix::identity(f, n).kronecker(&a.transpose());
            let rhs = b.kronecker(&Matrix::identity(f, m));
            blocks.push(lhs.sub(&rhs));
        }
        let sys = if blocks.is_empty() {
            Matrix::zeros(f, 0, n * m)
        } else {
            blocks.iter().skip(1).fold(blocks[0].clone(), |acc, b| acc.vstack(b))
        };
        let sys = Subspace::from_rows(&sys).basis().clone();
        let k = if sys.rows() == 0 {
            Matrix::identity(f, n * m)
        } else {
            sys.kernel_basis()
        };
        (0..k.rows())
            .map(|r| Matrix::new(f, n, m, k.row(r).to_vec()))
            .collect()
    }

    pub fn is_morphism(&self, other: &ActionModule, map: &Matrix) -> bool {
        self.gens
            .iter()
            .zip(&other.gens)
            .all(|(a, b)| map.mul(a) == b.mul(map))
    }

    /// `End(M)` as a matrix algebra on `K^dim`.
    pub fn end_algebra(&self) -> Result<MatrixAlgebra> {
        MatrixAlgebra::new(self.field, self.dim, self.hom_space(self))
    }

    /// `End(M)` with its Jacobson radical (in `End` coordinates).
    pub fn end_ring_radical(&self) -> Result<(MatrixAlgebra, Subspace)> {
        let alg = self.end_algebra()?;
        let j = alg.radical()?;
        Ok((alg, j))
    }

    /// Module structure on an invariant subspace with basis the columns of
    /// `basis`.
    pub fn restrict(&self, basis: &Matrix) -> Result<ActionModule> {
        let k = basis.cols();
        let coords = Coordinatizer::new(&basis.transpose())
            .ok_or_else(|| Error::invalid("dependent submodule basis"))?;
        let gens = self
            .gens
            .iter()
            .map(|a| {
                let img = a.mul(basis);
                let cols = (0..k)
                    .map(|c| {
                        coords
                            .coords(&img.col(c))
                            .ok_or_else(|| Error::invalid("subspace is not invariant"))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Matrix::from_rows(self.field, k, cols).transpose())
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ActionModule::new(self.field, k, gens))
    }

    /// Quotient by an invariant subspace. Returns the quotient together with
    /// the projection matrix `M -> M/U` (in the basis of standard vectors
    /// completing `U`).
    pub fn quotient(&self, sub: &Subspace) -> Result<(ActionModule, Matrix)> {
        if !self.gens.iter().all(|a| sub.is_invariant_under(a)) {
            return Err(Error::invalid("subspace is not invariant"));
        }
        let comp = sub.complement_indices();
        let q = comp.len();
        let f = self.field;
        // Basis: rows of sub, then unit vectors at comp.
        let mut full = sub.basis().clone();
        for &c in &comp {
            full = full.vstack(&Matrix::from_rows(f, self.dim, vec![crate::exactlin::unit(f, self.dim, c)]));
        }
        let coords = Coordinatizer::new(&full).expect("complement completes a basis");
        let d = sub.dim();
        let project = |v: &[Scalar]| coords.coords(v).unwrap()[d..].to_vec();
        let proj_cols: Vec<Vec<Scalar>> =
            (0..self.dim).map(|i| project(&crate::exactlin::unit(f, self.dim, i))).collect();
        let proj = Matrix::from_rows(f, q, proj_cols).transpose();
        let gens = self
            .gens
            .iter()
            .map(|a| {
                let cols: Vec<Vec<Scalar>> = comp.iter().map(|&c| project(&a.col(c))).collect();
                Matrix::from_rows(f, q, cols).transpose()
            })
            .collect();
        Ok((ActionModule::new(f, q, gens), proj))
    }

    pub fn direct_sum(&self, other: &ActionModule) -> ActionModule {
        assert_eq!(self.gens.len(), other.gens.len());
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| Matrix::block_diag(self.field, &[a.clone(), b.clone()]))
            .collect();
        ActionModule::new(self.field, self.dim + other.dim, gens)
    }

    /// Conjugate by an invertible `p`: generators `p^-1 A p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<ActionModule> {
        let inv = p
            .inverse()
            .ok_or_else(|| Error::invalid("change of basis is not invertible"))?;
        Ok(ActionModule::new(
            self.field,
            self.dim,
            self.gens.iter().map(|a| inv.mul(a).mul(p)).collect(),
        ))
    }

    /// Smallest invariant subspace containing `vectors`.
    pub fn generated_submodule(&self, vectors: &[Vec<Scalar>]) -> Subspace {
        let mut sub = Subspace::span(self.field, self.dim, vectors);
        loop {
            let mut more = sub.vectors();
            for v in sub.vectors() {
                for a in &self.gens {
                    more.push(a.mul_vec(&v));
                }
            }
            let next = Subspace::span(self.field, self.dim, &more);
            if next == sub {
                return sub;
            }
            sub = next;
        }
    }

    pub fn is_invariant(&self, sub: &Subspace) -> bool {
        self.gens.iter().all(|a| sub.is_invariant_under(a))
    }

    /// Finds `M = U (+) V` with both summands nonzero, or certifies that `M`
    /// is indecomposable (`Ok(None)`).
    pub fn split(&self) -> Result<Option<(Matrix, Matrix)>> {
        if self.dim <= 1 {
            return Ok(None);
        }
        let end = self.hom_space(self);
        if end.len() == 1 {
            return Ok(None);
        }
        // Fitting splits along basis elements, pairwise sums and random
        // elements.
        let mut candidates: Vec<Matrix> = end.clone();
        for i in 0..end.len() {
            for j in i + 1..end.len() {
                candidates.push(end[i].add(&end[j]));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..RANDOM_TRIES {
            candidates.push(random_combination(self.field, &end, &mut rng).unwrap());
        }
        for phi in &candidates {
            if let Some(s) = self.fitting_split(phi)? {
                return Ok(Some(s));
            }
        }
        // Certified path through End/J.
        let alg = MatrixAlgebra::new(self.field, self.dim, end)?;
        let j = alg.radical()?;
        let (quot, lift) = semisimple_quotient(&alg, &j)?;
        if quot.dim() == 1 {
            return Ok(None);
        }
        if quot.is_commutative() {
            let idems = quot.primitive_idempotents()?;
            if idems.len() == 1 {
                return Ok(None);
            }
            let e = lift_idempotent_matrix(&lift(&idems[0]))?;
            return Ok(Some(self.split_by_idempotent(&e)));
        }
        // Noncommutative semisimple quotient. A central idempotent splits;
        // otherwise search for a zero divisor.
        let center = center_of(&quot)?;
        if center.dim() > 1 {
            let idems = center.primitive_idempotents()?;
            if idems.len() > 1 {
                let z = center.element(&idems[0]);
                let in_quot = quot.coords_of(&z).unwrap();
                let e = lift_idempotent_matrix(&lift(&in_quot))?;
                return Ok(Some(self.split_by_idempotent(&e)));
            }
        }
        if matches!(self.field, Field::Prime(_)) {
            // A finite division ring is commutative, so the simple quotient
            // is a full matrix ring and has split elements.
            for _ in 0..20 * RANDOM_TRIES {
                let x = random_combination(self.field, quot.basis(), &mut rng).unwrap();
                let coords = quot.coords_of(&x).unwrap();
                if let Some(s) = self.fitting_split(&lift(&coords))? {
                    return Ok(Some(s));
                }
            }
        }
        Err(Error::Undecidable {
            field: self.field,
            reason: "endomorphism ring has a noncommutative semisimple quotient without a found split"
                .into(),
        })
    }

    fn fitting_split(&self, phi: &Matrix) -> Result<Option<(Matrix, Matrix)>> {
        let factors = minpoly_factors(phi)?;
        if factors.len() < 2 {
            return Ok(None);
        }
        let (q, m) = &factors[0];
        let first = q.pow(*m).eval_matrix(phi).kernel_basis().transpose();
        let mut rest = crate::exactlin::Poly::one(self.field);
        for (q, m) in &factors[1..] {
            rest = rest.mul(&q.pow(*m));
        }
        let second = rest.eval_matrix(phi).kernel_basis().transpose();
        Ok(Some((first, second)))
    }

    fn split_by_idempotent(&self, e: &Matrix) -> (Matrix, Matrix) {
        let id = Matrix::identity(self.field, self.dim);
        let u = id.sub(e).kernel_basis().transpose();
        let v = e.kernel_basis().transpose();
        (u, v)
    }

    /// Krull-Schmidt decomposition into indecomposables. Pieces are ordered
    /// by dimension, then by the canonical form of their generators.
    pub fn decompose(&self) -> Result<Decomposition> {
        let mut pieces = Vec::new();
        let mut stack = vec![(self.clone(), Matrix::identity(self.field, self.dim))];
        while let Some((m, inc)) = stack.pop() {
            if m.dim == 0 {
                continue;
            }
            match m.split()? {
                None => pieces.push((m, inc)),
                Some((u, v)) => {
                    let mu = m.restrict(&u)?;
                    let mv = m.restrict(&v)?;
                    stack.push((mv, inc.mul(&v)));
                    stack.push((mu, inc.mul(&u)));
                }
            }
        }
        pieces.sort_by_key(|(m, _)| (m.dim, m.gens.iter().map(Matrix::flatten).collect::<Vec<_>>()));
        Ok(Decomposition { pieces })
    }

    pub fn is_indecomposable(&self) -> Result<bool> {
        if self.dim == 0 {
            return Ok(false);
        }
        Ok(self.split()?.is_none())
    }

    /// An isomorphism `self -> other`, or `None` if none exists.
    ///
    /// Random invertible elements of `Hom` are tried first; the certified
    /// fallback decomposes both modules and matches indecomposables, using
    /// that `X ~ Y` (indecomposable) iff `g f` is invertible for some basis
    /// elements `f in Hom(X, Y)`, `g in Hom(Y, X)`.
    pub fn isomorphism(&self, other: &ActionModule, seed: u64) -> Result<Option<Matrix>> {
        if self.dim != other.dim || self.gens.len() != other.gens.len() {
            return Ok(None);
        }
        if self.dim == 0 {
            return Ok(Some(Matrix::zeros(self.field, 0, 0)));
        }
        let hom = self.hom_space(other);
        if hom.is_empty() {
            return Ok(None);
        }
        if other.hom_space(self).len() != hom.len() || self.hom_space(self).len() != hom.len() {
            return Ok(None);
        }
        for h in &hom {
            if h.is_invertible() {
                return Ok(Some(h.clone()));
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_TRIES {
            let h = random_combination(self.field, &hom, &mut rng).unwrap();
            if h.is_invertible() {
                return Ok(Some(h));
            }
        }
        let dm = self.decompose()?;
        let dn = other.decompose()?;
        if dm.pieces.len() != dn.pieces.len() {
            return Ok(None);
        }
        let mut used = vec![false; dn.pieces.len()];
        // witness maps source piece coordinates to target piece coordinates
        let mut blocks: Vec<(usize, Matrix)> = Vec::new();
        for (x, _) in &dm.pieces {
            let mut found = None;
            for (k, (y, _)) in dn.pieces.iter().enumerate() {
                if used[k] || x.dim != y.dim {
                    continue;
                }
                if let Some(f) = indecomposable_iso(x, y) {
                    found = Some((k, f));
                    break;
                }
            }
            match found {
                Some((k, f)) => {
                    used[k] = true;
                    blocks.push((k, f));
                }
                None => return Ok(None),
            }
        }
        // Assemble: M = P_M (+x_i), N = P_N (+y_k); iso = P_N . F . P_M^-1.
        let f = self.field;
        let pm = dm.witness(f, self.dim);
        let pn = dn.witness(f, other.dim);
        let offsets_n: Vec<usize> = dn
            .pieces
            .iter()
            .scan(0, |acc, (y, _)| {
                let o = *acc;
                *acc += y.dim;
                Some(o)
            })
            .collect();
        let mut big = Matrix::zeros(f, other.dim, self.dim);
        let mut col = 0;
        for (k, blk) in &blocks {
            big.set_block(offsets_n[*k], col, blk);
            col += blk.cols();
        }
        let iso = pn.mul(&big).mul(&pm.inverse().expect("decomposition witness is invertible"));
        debug_assert!(self.is_morphism(other, &iso));
        Ok(Some(iso))
    }

    pub fn is_isomorphic(&self, other: &ActionModule) -> Result<bool> {
        Ok(self.isomorphism(other, 0)?.is_some())
    }

    /// Cheap isomorphism invariants: dimension, dim End, ranks of generators.
    pub fn fingerprint(&self) -> Vec<usize> {
        let mut fp = vec![self.dim, self.hom_space(self).len()];
        fp.extend(self.gens.iter().map(Matrix::rank));
        fp
    }
}

/// For indecomposable `x`, `y`: an isomorphism if one exists.
fn indecomposable_iso(x: &ActionModule, y: &ActionModule) -> Option<Matrix> {
    let hxy = x.hom_space(y);
    let hyx = y.hom_space(x);
    for f in &hxy {
        for g in &hyx {
            if g.mul(f).is_invertible() {
                return Some(f.clone());
            }
        }
    }
    None
}

/// `A/J` as a matrix algebra via its regular representation, with a map
/// lifting quotient coordinates to matrices in `A`.
fn semisimple_quotient<'a>(
    alg: &'a MatrixAlgebra,
    j: &Subspace,
) -> Result<(MatrixAlgebra, impl Fn(&[Scalar]) -> Matrix + 'a)> {
    let f = alg.field();
    let h = alg.dim();
    let comp = j.complement_indices();
    let q = comp.len();
    let mut full = j.basis().clone();
    for &c in &comp {
        full = full.vstack(&Matrix::from_rows(f, h, vec![crate::exactlin::unit(f, h, c)]));
    }
    let coords = Coordinatizer::new(&full).expect("complement completes a basis");
    let jd = j.dim();
    let tail = move |v: &[Scalar]| coords.coords(v).unwrap()[jd..].to_vec();
    let consts = alg.structure_constants();
    let basis: Vec<Matrix> = comp
        .iter()
        .map(|&a| {
            let cols: Vec<Vec<Scalar>> = comp.iter().map(|&b| tail(&consts[a][b])).collect();
            Matrix::from_rows(f, q, cols).transpose()
        })
        .collect();
    let quot = MatrixAlgebra::new(f, q, basis)?;
    let comp2 = comp.clone();
    let lift = move |c: &[Scalar]| {
        let mut v = vec![f.zero(); h];
        for (x, &idx) in c.iter().zip(&comp2) {
            v[idx] = x.clone();
        }
        alg.element(&v)
    };
    Ok((quot, lift))
}

/// Center of a matrix algebra, as a matrix algebra on the same space.
fn center_of(alg: &MatrixAlgebra) -> Result<MatrixAlgebra> {
    let f = alg.field();
    let h = alg.dim();
    let consts = alg.structure_constants();
    // x = sum x_a b_a central iff sum_a x_a (b_a b_c - b_c b_a) = 0 for all c.
    let mut rows = Vec::new();
    for c in 0..h {
        for k in 0..h {
            rows.push((0..h).map(|a| &consts[a][c][k] - &consts[c][a][k]).collect());
        }
    }
    let sys = Matrix::from_rows(f, h, rows);
    let ker = sys.kernel_basis();
    let basis = (0..ker.rows()).map(|r| alg.element(ker.row(r))).collect();
    MatrixAlgebra::new(f, alg.size(), basis)
}

/// Lifts an idempotent modulo a nilpotent ideal by `e <- 3e^2 - 2e^3`.
pub(crate) fn lift_idempotent_matrix(e0: &Matrix) -> Result<Matrix> {
    let f = e0.field();
    let three = f.from_i64(3);
    let two = f.from_i64(2);
    let mut e = e0.clone();
    for _ in 0..64 {
        let e2 = e.mul(&e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = e2.mul(&e);
        e = e2.scale(&three).sub(&e3.scale(&two));
    }
    Err(Error::CheckFailed("idempotent lifting did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan(f: Field, n: usize) -> Matrix {
        let mut m = Matrix::zeros(f, n, n);
        for i in 0..n - 1 {
            m[(i, i + 1)] = f.one();
        }
        m
    }

    #[test]
    fn hom_of_jordan_block() {
        let f = Field::Rational;
        let m = ActionModule::new(f, 3, vec![jordan(f, 3)]);
        assert_eq!(m.hom_space(&m).len(), 3);
        assert!(m.is_indecomposable().unwrap());
        let (_, j) = m.end_ring_radical().unwrap();
        assert_eq!(j.dim(), 2);
    }

    #[test]
    fn semisimple_sum_decomposes() {
        for f in [Field::Rational, Field::Prime(2), Field::Prime(3)] {
            let z = Matrix::zeros(f, 1, 1);
            let s = ActionModule::new(f, 1, vec![z]);
            let ss = s.direct_sum(&s);
            let d = ss.decompose().unwrap();
            assert_eq!(d.pieces.len(), 2);
            let (end, j) = ss.end_ring_radical().unwrap();
            assert_eq!((end.dim(), j.dim()), (4, 0));
        }
    }

    #[test]
    fn decompose_witness_and_iso() {
        let f = Field::Prime(3);
        let j2 = ActionModule::new(f, 2, vec![jordan(f, 2)]);
        let j1 = ActionModule::new(f, 1, vec![Matrix::zeros(f, 1, 1)]);
        let m = j2.direct_sum(&j1).direct_sum(&j2);
        let p = Matrix::from_i64(f, &[&[1, 1, 0, 2, 0], &[0, 1, 1, 0, 0], &[1, 0, 1, 0, 1], &[0, 0, 0, 1, 1], &[2, 0, 0, 0, 1]]);
        assert!(p.is_invertible());
        let mc = m.change_basis(&p).unwrap();
        let d = mc.decompose().unwrap();
        let dims: Vec<usize> = d.pieces.iter().map(|x| x.0.dim()).collect();
        assert_eq!(dims, vec![1, 2, 2]);
        let w = d.witness(f, 5);
        assert!(w.is_invertible());
        let iso = m.isomorphism(&mc, 7).unwrap().unwrap();
        assert!(m.is_morphism(&mc, &iso) && iso.is_invertible());
        let other = j2.direct_sum(&j1).direct_sum(&j1).direct_sum(&j1);
        assert!(!m.is_isomorphic(&other).unwrap());
    }

    #[test]
    fn full_matrix_endomorphisms_split() {
        // Two copies of a 2-dim simple module over GF(2): End = M_2(GF(4)),
        // noncommutative semisimple.
        let f = Field::Prime(2);
        let c = Matrix::from_i64(f, &[&[0, 1], &[1, 1]]);
        let s = ActionModule::new(f, 2, vec![c]);
        assert!(s.is_indecomposable().unwrap());
        let d = s.direct_sum(&s).decompose().unwrap();
        assert_eq!(d.pieces.len(), 2);
    }

    #[test]
    fn quotient_and_restrict() {
        let f = Field::Rational;
        let m = ActionModule::new(f, 3, vec![jordan(f, 3)]);
        let sub = Subspace::coordinate(f, 3, &[0]);
        assert!(m.is_invariant(&sub));
        let (q, proj) = m.quotient(&sub).unwrap();
        assert_eq!(q.gens()[0], jordan(f, 2));
        assert_eq!(proj.rows(), 2);
        let r = m.restrict(&Subspace::coordinate(f, 3, &[0, 1]).basis().transpose()).unwrap();
        assert_eq!(r.gens()[0], jordan(f, 2));
    }
}
