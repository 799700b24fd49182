//! Subspaces of `K^n` in canonical reduced form.

use std::fmt;

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

/// A subspace of `K^n` stored by an RREF basis, so equality of subspaces is
/// equality of the stored matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The span of the rows of `rows`.
    pub fn from_rows(rows: &Matrix) -> Subspace {
        let r = rows.rref();
        let basis = r.matrix.select_rows(&(0..r.rank).collect::<Vec<_>>());
        Subspace {
            ambient: rows.cols(),
            basis,
            pivots: r.pivots,
        }
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<Scalar>]) -> Subspace {
        Subspace::from_rows(&Matrix::from_rows(field, ambient, vectors.to_vec()))
    }

    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace::from_rows(&Matrix::zeros(field, 0, ambient))
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::from_rows(&Matrix::identity(field, ambient))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: Field, ambient: usize, idx: &[usize]) -> Subspace {
        let rows = idx.iter().map(|&i| unit(field, ambient, i)).collect::<Vec<_>>();
        Subspace::span(field, ambient, &rows)
    }

    pub fn field(&self) -> Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// RREF basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` with respect to the RREF basis, if `v` lies in the
    /// subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(v.len(), self.ambient);
        let coords: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = self.basis.vec_mul(&coords);
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_rows(&self.basis.vstack(&other.basis))
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.orthogonal().sum(&other.orthogonal()).orthogonal()
    }

    /// Annihilator under the standard pairing `<x, f> = sum x_i f_i`.
    pub fn orthogonal(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field(), self.ambient);
        }
        Subspace::from_rows(&self.basis.kernel_basis())
    }

    /// Standard basis vectors completing this subspace to the whole space.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Image of this subspace under `x -> m * x` (column convention).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient);
        let rows: Vec<Vec<Scalar>> = self.vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(self.field(), m.rows(), &rows)
    }

    /// Whether `m` maps the subspace into itself.
    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.vectors().iter().all(|v| self.contains(&m.mul_vec(v)))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{}", self.basis)
    }
}

/// Every subspace of `GF(p)^n`, enumerated by RREF shape. Fails over the
/// rationals and when the count exceeds `budget`.
pub fn all_subspaces(field: Field, n: usize, budget: u128) -> Result<Vec<Subspace>> {
    let q = field
        .order()
        .ok_or_else(|| Error::Unsupported("subspace enumeration needs a finite field".into()))?
        as u128;
    // Gaussian binomial sum.
    let mut total: u128 = 0;
    for k in 0..=n {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..k {
            num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
            den = den.saturating_mul(q.saturating_pow((i + 1) as u32) - 1);
        }
        total = total.saturating_add(num / den.max(1));
    }
    if total > budget {
        return Err(Error::budget("subspace enumeration", total, budget));
    }
    let elems: Vec<Scalar> = field.elements().unwrap().collect();
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            // Free entries: row r, column c > pivots[r], c not a pivot.
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pv = pivots.clone();
                    (pivots[r] + 1..n).filter(move |c| !pv.contains(c)).map(move |c| (r, c))
                })
                .collect();
            let mut counter = vec![0usize; free.len()];
            loop {
                let mut m = Matrix::zeros(field, k, n);
                for (r, &p) in pivots.iter().enumerate() {
                    m[(r, p)] = field.one();
                }
                for (slot, &(r, c)) in free.iter().enumerate() {
                    m[(r, c)] = elems[counter[slot]].clone();
                }
                out.push(Subspace {
                    ambient: n,
                    basis: m,
                    pivots: pivots.clone(),
                });
                let mut i = 0;
                while i < counter.len() {
                    counter[i] += 1;
                    if counter[i] < elems.len() {
                        break;
                    }
                    counter[i] = 0;
                    i += 1;
                }
                if i == counter.len() {
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out.sort();
    out
}

pub fn unit(field: Field, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

/// Coordinates with respect to an arbitrary linearly independent family.
#[derive(Clone, Debug)]
pub struct Coordinatizer {
    rref: Matrix,
    pivots: Vec<usize>,
    transform: Matrix,
    len: usize,
}

impl Coordinatizer {
    /// `vectors` are the rows; returns `None` if they are dependent.
    pub fn new(vectors: &Matrix) -> Option<Coordinatizer> {
        let h = vectors.rows();
        let n = vectors.cols();
        let aug = vectors.hstack(&Matrix::identity(vectors.field(), h));
        let r = aug.rref();
        let pivots: Vec<usize> = r.pivots.iter().copied().filter(|&p| p < n).collect();
        if pivots.len() != h {
            return None;
        }
        Some(Coordinatizer {
            rref: r.matrix.block(0, 0, h, n),
            transform: r.matrix.block(0, n, h, h),
            pivots,
            len: h,
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let c: Vec<Scalar> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        if self.rref.vec_mul(&c).as_slice() != v {
            return None;
        }
        Some(self.transform.vec_mul(&c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(Q, 3, &[vec![Q.one(), Q.one(), Q.zero()], vec![Q.zero(), Q.one(), Q.zero()]]);
        let b = Subspace::coordinate(Q, 3, &[0, 1]);
        assert_eq!(a, b);
    }

    #[test]
    fn orthogonal_and_intersection() {
        let a = Subspace::coordinate(Q, 3, &[0, 1]);
        let b = Subspace::coordinate(Q, 3, &[1, 2]);
        assert_eq!(a.intersection(&b), Subspace::coordinate(Q, 3, &[1]));
        assert_eq!(a.orthogonal(), Subspace::coordinate(Q, 3, &[2]));
        assert_eq!(Subspace::zero(Q, 3).orthogonal(), Subspace::full(Q, 3));
        assert_eq!(Subspace::full(Q, 3).orthogonal(), Subspace::zero(Q, 3));
    }

    #[test]
    fn subspace_counts_over_gf3() {
        let f = Field::Prime(3);
        // 1 + 13 + 13 + 1 subspaces of GF(3)^3.
        let all = all_subspaces(f, 3, 1000).unwrap();
        assert_eq!(all.len(), 28);
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), 28);
        for s in &all {
            assert_eq!(&Subspace::from_rows(s.basis()), s);
        }
        assert!(all_subspaces(f, 3, 10).is_err());
        assert!(all_subspaces(Q, 2, 1000).is_err());
    }

    #[test]
    fn coordinatizer_roundtrip() {
        let m = Matrix::from_i64(Q, &[&[1, 1, 0], &[0, 2, 1]]);
        let c = Coordinatizer::new(&m).unwrap();
        let v = m.vec_mul(&[Q.from_i64(3), Q.from_i64(-2)]);
        assert_eq!(c.coords(&v).unwrap(), vec![Q.from_i64(3), Q.from_i64(-2)]);
        assert!(c.coords(&[Q.one(), Q.zero(), Q.zero()]).is_none());
    }
}
