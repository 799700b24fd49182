//! Finite-dimensional matrix algebras and their Jacobson radicals.
//!
//! The radical is computed from trace forms: Dickson's criterion when the
//! characteristic is zero or exceeds the matrix size, and the iterated
//! lifted-trace refinement (Rónyai; Cohen, Ivanyos and Wales) for small
//! characteristic. Both results are checked to be nilpotent ideals.

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use super::poly::minpoly_factors;
use super::subspace::{Coordinatizer, Subspace};
use crate::error::{Error, Result};

/// A subalgebra of `M_n(K)` given by a basis of matrices.
#[derive(Clone, Debug)]
pub struct MatrixAlgebra {
    field: Field,
    size: usize,
    basis: Vec<Matrix>,
    coords: Coordinatizer,
}

impl MatrixAlgebra {
    /// `basis` must be linearly independent and closed under products.
    pub fn new(field: Field, size: usize, basis: Vec<Matrix>) -> Result<MatrixAlgebra> {
        let rows: Vec<Vec<Scalar>> = basis.iter().map(Matrix::flatten).collect();
        let flat = Matrix::from_rows(field, size * size, rows);
        let coords = Coordinatizer::new(&flat)
            .ok_or_else(|| Error::invalid("algebra basis is linearly dependent"))?;
        let alg = MatrixAlgebra {
            field,
            size,
            basis,
            coords,
        };
        for a in &alg.basis {
            for b in &alg.basis {
                if alg.coords_of(&a.mul(b)).is_none() {
                    return Err(Error::invalid("algebra basis is not closed under products"));
                }
            }
        }
        Ok(alg)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Size of the matrices.
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn coords_of(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        self.coords.coords(&m.flatten())
    }

    pub fn element(&self, coords: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(self.field, self.size, self.size);
        for (c, b) in coords.iter().zip(&self.basis) {
            m.axpy(c, b);
        }
        m
    }

    /// `c[a][b]` is the coordinate vector of `basis[a] * basis[b]`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<Scalar>>> {
        self.basis
            .iter()
            .map(|a| {
                self.basis
                    .iter()
                    .map(|b| self.coords_of(&a.mul(b)).expect("closed under products"))
                    .collect()
            })
            .collect()
    }

    /// Jacobson radical as a subspace of coordinate space `K^dim`.
    pub fn radical(&self) -> Result<Subspace> {
        let j = match self.field {
            Field::Prime(p) if (p as usize) <= self.size => self.radical_small_char(p)?,
            _ => self.radical_dickson(),
        };
        if !self.is_ideal(&j) || !self.is_nilpotent(&j) {
            return Err(Error::Unsupported(format!(
                "radical computation over {} produced a non-nilpotent or non-ideal subspace",
                self.field
            )));
        }
        Ok(j)
    }

    fn radical_dickson(&self) -> Subspace {
        let h = self.dim();
        let mut g = Matrix::zeros(self.field, h, h);
        for a in 0..h {
            for b in 0..h {
                g[(a, b)] = self.basis[a].mul(&self.basis[b]).trace();
            }
        }
        Subspace::from_rows(&g.kernel_basis())
    }

    fn radical_small_char(&self, p: u64) -> Result<Subspace> {
        let h = self.dim();
        let mut levels = 0u32;
        while (p as u128).pow(levels + 1) <= self.size as u128 {
            levels += 1;
        }
        let mut ideal = Subspace::full(self.field, h);
        for i in 0..=levels {
            let xs: Vec<Matrix> = ideal.vectors().iter().map(|c| self.element(c)).collect();
            if xs.is_empty() {
                break;
            }
            let mut g = Matrix::zeros(self.field, xs.len(), h);
            for (r, x) in xs.iter().enumerate() {
                for (b, y) in self.basis.iter().enumerate() {
                    g[(r, b)] = lifted_trace_form(&x.mul(y), p, i)?;
                }
            }
            let w = g.transpose().kernel_basis();
            let basis_rows: Vec<Vec<Scalar>> = (0..w.rows())
                .map(|k| {
                    let mut acc = vec![self.field.zero(); h];
                    for (r, v) in ideal.vectors().iter().enumerate() {
                        let c = &w[(k, r)];
                        if c.is_zero() {
                            continue;
                        }
                        for (a, x) in acc.iter_mut().zip(v) {
                            *a += &(c * x);
                        }
                    }
                    acc
                })
                .collect();
            ideal = Subspace::span(self.field, h, &basis_rows);
        }
        Ok(ideal)
    }

    /// Coordinates of the identity matrix, if the algebra is unital in it.
    pub fn unit(&self) -> Option<Vec<Scalar>> {
        self.coords_of(&Matrix::identity(self.field, self.size))
    }

    /// Left multiplication by `x` on coordinate space, restricted to the
    /// subspace `sub` (which must be invariant), in the basis of `sub`.
    fn left_mul_on(&self, x: &Matrix, sub: &Subspace) -> Matrix {
        let cols: Vec<Vec<Scalar>> = sub
            .vectors()
            .iter()
            .map(|v| {
                let y = self.coords_of(&x.mul(&self.element(v))).unwrap();
                sub.coordinates(&y).expect("invariant subspace")
            })
            .collect();
        Matrix::from_rows(self.field, sub.dim(), cols).transpose()
    }

    /// Primitive idempotents of a commutative unital algebra, as coordinate
    /// vectors, ordered by the pivot of the component they cut out.
    ///
    /// Each component `eA` is split by the Fitting decomposition of left
    /// multiplication by `e*b` for every basis element `b`; the unit projects
    /// onto the pieces. Fails with `Undecidable` when a minimal polynomial
    /// cannot be factored over the field.
    pub fn primitive_idempotents(&self) -> Result<Vec<Vec<Scalar>>> {
        let unit = self
            .unit()
            .ok_or_else(|| Error::invalid("algebra does not contain the identity"))?;
        let mut idems = vec![unit];
        for b in &self.basis {
            let mut next = Vec::new();
            for e in idems {
                let em = self.element(&e);
                let comp = self.component(&em);
                let y = em.mul(b);
                let op = self.left_mul_on(&y, &comp);
                let factors = minpoly_factors(&op)?;
                if factors.len() < 2 {
                    next.push(e);
                    continue;
                }
                // Generalized eigenspaces inside eA, in eA coordinates.
                let mut pieces = Vec::new();
                for (q, m) in &factors {
                    let k = q.pow(*m).eval_matrix(&op).kernel_basis();
                    pieces.push(k);
                }
                let stacked = pieces
                    .iter()
                    .skip(1)
                    .fold(pieces[0].clone(), |acc, k| acc.vstack(k));
                let e_local = comp.coordinates(&e).unwrap();
                let split = stacked
                    .transpose()
                    .solve(&e_local)
                    .expect("pieces span the component");
                let mut offset = 0;
                for k in &pieces {
                    let part = &split[offset..offset + k.rows()];
                    offset += k.rows();
                    let local = k.vec_mul(part);
                    next.push(comp.basis().vec_mul(&local));
                }
            }
            idems = next;
        }
        idems.sort_by_key(|e| self.component(&self.element(e)).pivots().to_vec());
        Ok(idems)
    }

    /// The subspace `eA` in coordinates.
    pub fn component(&self, e: &Matrix) -> Subspace {
        let rows: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .map(|b| self.coords_of(&e.mul(b)).unwrap())
            .collect();
        Subspace::span(self.field, self.dim(), &rows)
    }

    /// Whether all basis elements commute.
    pub fn is_commutative(&self) -> bool {
        self.basis
            .iter()
            .enumerate()
            .all(|(i, a)| self.basis[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Whether the coordinate subspace is a two-sided ideal.
    pub fn is_ideal(&self, sub: &Subspace) -> bool {
        sub.vectors().iter().all(|c| {
            let x = self.element(c);
            self.basis.iter().all(|b| {
                sub.contains(&self.coords_of(&x.mul(b)).unwrap())
                    && sub.contains(&self.coords_of(&b.mul(&x)).unwrap())
            })
        })
    }

    /// Whether the coordinate subspace generates a nilpotent subalgebra.
    pub fn is_nilpotent(&self, sub: &Subspace) -> bool {
        let gens: Vec<Matrix> = sub.vectors().iter().map(|c| self.element(c)).collect();
        words_vanish(self.field, self.size, &gens)
    }
}

/// Whether every product of `size` matrices drawn from `gens` is zero, i.e.
/// the (non-unital) algebra generated by `gens` is nilpotent.
pub fn words_vanish(field: Field, size: usize, gens: &[Matrix]) -> bool {
    if gens.is_empty() {
        return true;
    }
    // Span of all words of length k, tracked as a subspace of M_n.
    let flat = |ms: &[Matrix]| {
        Subspace::span(
            field,
            size * size,
            &ms.iter().map(Matrix::flatten).collect::<Vec<_>>(),
        )
    };
    let mut level: Vec<Matrix> = flat(gens)
        .vectors()
        .iter()
        .map(|v| Matrix::new(field, size, size, v.clone()))
        .collect();
    for _ in 0..=size {
        if level.is_empty() {
            return true;
        }
        let next: Vec<Matrix> = level
            .iter()
            .flat_map(|w| gens.iter().map(move |g| w.mul(g)))
            .collect();
        level = flat(&next)
            .vectors()
            .iter()
            .map(|v| Matrix::new(field, size, size, v.clone()))
            .collect();
    }
    level.is_empty()
}

/// `Tr(lift(z)^(p^i)) / p^i mod p` for a matrix over GF(p).
fn lifted_trace_form(z: &Matrix, p: u64, i: u32) -> Result<Scalar> {
    let field = z.field();
    let modulus = (p as u128).pow(i + 1);
    let n = z.rows();
    let lift: Vec<u128> = z.data().iter().map(|s| s.residue().unwrap() as u128).collect();
    let mul = |a: &[u128], b: &[u128]| {
        let mut out = vec![0u128; n * n];
        for r in 0..n {
            for k in 0..n {
                let x = a[r * n + k];
                if x == 0 {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] = (out[r * n + c] + x * b[k * n + c]) % modulus;
                }
            }
        }
        out
    };
    let mut acc = lift.clone();
    for _ in 0..i {
        // raise to the p-th power
        let base = acc.clone();
        for _ in 1..p {
            acc = mul(&acc, &base);
        }
    }
    let tr = (0..n).fold(0u128, |t, k| (t + acc[k * n + k]) % modulus);
    let scale = (p as u128).pow(i);
    if tr % scale != 0 {
        return Err(Error::Unsupported(
            "lifted trace not divisible; radical refinement failed".into(),
        ));
    }
    Ok(field.from_i64(((tr / scale) % p as u128) as i64))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn upper_triangular(field: Field, n: usize) -> Vec<Matrix> {
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                let mut m = Matrix::zeros(field, n, n);
                m[(i, j)] = field.one();
                out.push(m);
            }
        }
        out
    }

    #[test]
    fn radical_of_upper_triangular() {
        for field in [Field::Rational, Field::Prime(2), Field::Prime(3), Field::Prime(101)] {
            let alg = MatrixAlgebra::new(field, 3, upper_triangular(field, 3)).unwrap();
            let j = alg.radical().unwrap();
            assert_eq!(j.dim(), 3, "strictly upper part over {field}");
            for c in j.vectors() {
                let m = alg.element(&c);
                for i in 0..3 {
                    for k in 0..=i {
                        assert!(m[(i, k)].is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn radical_of_group_algebra_in_char_two() {
        let f = Field::Prime(2);
        let swap = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
        let alg = MatrixAlgebra::new(f, 2, vec![Matrix::identity(f, 2), swap]).unwrap();
        let j = alg.radical().unwrap();
        assert_eq!(j, Subspace::span(f, 2, &[vec![f.one(), f.one()]]));
    }

    #[test]
    fn full_matrix_algebra_is_semisimple() {
        for field in [Field::Prime(2), Field::Rational] {
            let mut basis = Vec::new();
            for i in 0..2 {
                for j in 0..2 {
                    let mut m = Matrix::zeros(field, 2, 2);
                    m[(i, j)] = field.one();
                    basis.push(m);
                }
            }
            let alg = MatrixAlgebra::new(field, 2, basis).unwrap();
            assert!(alg.radical().unwrap().is_zero());
        }
    }

    #[test]
    fn splits_diagonal_algebra() {
        for field in [Field::Rational, Field::Prime(3)] {
            let basis: Vec<Matrix> = (0..3)
                .map(|i| {
                    let mut m = Matrix::zeros(field, 3, 3);
                    m[(i, i)] = field.one();
                    m
                })
                .collect();
            let alg = MatrixAlgebra::new(field, 3, basis).unwrap();
            let idems = alg.primitive_idempotents().unwrap();
            assert_eq!(idems.len(), 3);
            for (i, e) in idems.iter().enumerate() {
                let mut expect = vec![field.zero(); 3];
                expect[i] = field.one();
                assert_eq!(e, &expect);
            }
        }
    }

    #[test]
    fn field_extension_does_not_split() {
        // Q[x]/(x^2 + 1) as 2x2 matrices.
        let f = Field::Rational;
        let j = Matrix::from_i64(f, &[&[0, -1], &[1, 0]]);
        let alg = MatrixAlgebra::new(f, 2, vec![Matrix::identity(f, 2), j]).unwrap();
        assert_eq!(alg.primitive_idempotents().unwrap().len(), 1);
        // Over GF(5), x^2 + 1 = (x - 2)(x - 3) splits.
        let f = Field::Prime(5);
        let j = Matrix::from_i64(f, &[&[0, -1], &[1, 0]]);
        let alg = MatrixAlgebra::new(f, 2, vec![Matrix::identity(f, 2), j]).unwrap();
        assert_eq!(alg.primitive_idempotents().unwrap().len(), 2);
    }

    #[test]
    fn rejects_non_closed_basis() {
        let f = Field::Rational;
        let e = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
        assert!(MatrixAlgebra::new(f, 2, vec![e]).is_err());
    }
}
