//! Finite-dimensional coalgebras given by structure constants.
//!
//! Elements of `C` and of the dual algebra `C*` are coordinate vectors in the
//! labeled basis and its dual basis. Tensor coordinates use the left-major
//! pairing `(j, k) -> j * n + k` everywhere.
//!
//! The product on `C*` is `(f g)(c) = sum f(c2) g(c1)`, the multiplication for
//! which a left comodule is a left `C*`-module via `f . x = sum f(x_-1) x_0`.

mod quiver;
mod structure;

use std::collections::BTreeMap;
use std::fmt;

pub use quiver::{path_coalgebra, path_coalgebra_capped, Quiver, PATH_BASIS_CAP};
pub use structure::{
    coradical, coradical_filtration, grouplikes, is_pointed, orthogonal,
    orthogonal_ideal_product, wedge, Grouplikes,
};

use crate::error::{Error, Result};
use crate::exactlin::{Coordinatizer, Field, Matrix, MatrixAlgebra, Scalar, Subspace};

/// Sparse triple `(j, k, mu)` standing for `mu * b_j (x) b_k`.
pub type Term = (usize, usize, Scalar);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coalgebra {
    field: Field,
    labels: Vec<String>,
    delta: Vec<Vec<Term>>,
    counit: Vec<Scalar>,
}

/// Outcome of an axiom check; empty `violations` means the axioms hold.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub violations: Vec<String>,
}

impl CheckReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn push(&mut self, msg: String) {
        self.violations.push(msg);
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Coalgebra {
    /// Builds a coalgebra from structure constants. Shapes and label
    /// uniqueness are validated here; the axioms are checked separately by
    /// [`Coalgebra::check`].
    pub fn new(
        field: Field,
        labels: Vec<String>,
        delta: Vec<Vec<Term>>,
        counit: Vec<Scalar>,
    ) -> Result<Coalgebra> {
        let n = labels.len();
        if delta.len() != n || counit.len() != n {
            return Err(Error::invalid(format!(
                "basis has {n} labels but delta has {} entries and counit {}",
                delta.len(),
                counit.len()
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::invalid(format!("duplicate basis label {l:?}")));
            }
        }
        for s in counit.iter().chain(delta.iter().flatten().map(|t| &t.2)) {
            if s.field() != field {
                return Err(Error::FieldMismatch(field, s.field()));
            }
        }
        let mut norm = Vec::with_capacity(n);
        for (i, terms) in delta.into_iter().enumerate() {
            let mut acc: BTreeMap<(usize, usize), Scalar> = BTreeMap::new();
            for (j, k, mu) in terms {
                if j >= n || k >= n {
                    return Err(Error::invalid(format!(
                        "delta of basis element {i} refers to index out of range"
                    )));
                }
                let e = acc.entry((j, k)).or_insert_with(|| field.zero());
                *e += &mu;
            }
            norm.push(
                acc.into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|((j, k), v)| (j, k, v))
                    .collect(),
            );
        }
        Ok(Coalgebra {
            field,
            labels,
            delta: norm,
            counit,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `Delta(b_i)` as sparse terms, sorted by `(j, k)`.
    pub fn delta(&self, i: usize) -> &[Term] {
        &self.delta[i]
    }

    pub fn counit(&self) -> &[Scalar] {
        &self.counit
    }

    /// The 1-dimensional coalgebra spanned by a grouplike.
    pub fn grouplike_line(field: Field, label: &str) -> Coalgebra {
        Coalgebra::new(
            field,
            vec![label.to_string()],
            vec![vec![(0, 0, field.one())]],
            vec![field.one()],
        )
        .expect("well-formed")
    }

    /// Span of grouplikes with the given labels (cosemisimple, pointed).
    pub fn grouplikes_span(field: Field, labels: &[&str]) -> Coalgebra {
        Coalgebra::new(
            field,
            labels.iter().map(|s| s.to_string()).collect(),
            (0..labels.len()).map(|i| vec![(i, i, field.one())]).collect(),
            vec![field.one(); labels.len()],
        )
        .expect("well-formed")
    }

    /// Dual of the `n x n` matrix algebra: `Delta(e_ij) = sum_k e_ik (x) e_kj`.
    pub fn matrix_coalgebra(field: Field, n: usize) -> Coalgebra {
        let idx = |i: usize, j: usize| i * n + j;
        let mut labels = Vec::new();
        let mut delta = Vec::new();
        let mut counit = Vec::new();
        for i in 0..n {
            for j in 0..n {
                labels.push(format!("e{}{}", i + 1, j + 1));
                delta.push((0..n).map(|k| (idx(i, k), idx(k, j), field.one())).collect());
                counit.push(if i == j { field.one() } else { field.zero() });
            }
        }
        Coalgebra::new(field, labels, delta, counit).expect("well-formed")
    }

    /// Verifies coassociativity and both counit laws exactly.
    pub fn check(&self) -> CheckReport {
        let mut report = CheckReport::default();
        let n = self.dim();
        for i in 0..n {
            let mut left: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            let mut right: BTreeMap<(usize, usize, usize), Scalar> = BTreeMap::new();
            for (j, k, mu) in &self.delta[i] {
                for (a, b, nu) in &self.delta[*j] {
                    *left.entry((*a, *b, *k)).or_insert_with(|| self.field.zero()) += &(mu * nu);
                }
                for (a, b, nu) in &self.delta[*k] {
                    *right.entry((*j, *a, *b)).or_insert_with(|| self.field.zero()) += &(mu * nu);
                }
            }
            left.retain(|_, v| !v.is_zero());
            right.retain(|_, v| !v.is_zero());
            if left != right {
                let keys: std::collections::BTreeSet<_> = left.keys().chain(right.keys()).collect();
                for key in keys {
                    let zero = self.field.zero();
                    let l = left.get(key).unwrap_or(&zero);
                    let r = right.get(key).unwrap_or(&zero);
                    if l != r {
                        report.push(format!(
                            "coassociativity fails at {}: coefficient of {}(x){}(x){} is {} vs {}",
                            self.labels[i],
                            self.labels[key.0],
                            self.labels[key.1],
                            self.labels[key.2],
                            l,
                            r
                        ));
                        break;
                    }
                }
            }
            let mut via_left = vec![self.field.zero(); n];
            let mut via_right = vec![self.field.zero(); n];
            for (j, k, mu) in &self.delta[i] {
                via_left[*k] += &(&self.counit[*j] * mu);
                via_right[*j] += &(mu * &self.counit[*k]);
            }
            let mut unit = vec![self.field.zero(); n];
            unit[i] = self.field.one();
            if via_left != unit {
                report.push(format!("left counit law fails at {}", self.labels[i]));
            }
            if via_right != unit {
                report.push(format!("right counit law fails at {}", self.labels[i]));
            }
        }
        report
    }

    /// `(A (x) B) Delta` as a matrix, for `A: C -> U` and `B: C -> V`.
    /// Rows use the left-major pairing of `U (x) V`.
    pub fn tensor_after_delta(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let n = self.dim();
        assert_eq!(a.cols(), n);
        assert_eq!(b.cols(), n);
        let (ra, rb) = (a.rows(), b.rows());
        let mut out = Matrix::zeros(self.field, ra * rb, n);
        for i in 0..n {
            for (j, k, mu) in &self.delta[i] {
                for u in 0..ra {
                    let x = &a[(u, *j)];
                    if x.is_zero() {
                        continue;
                    }
                    let xm = x * mu;
                    for v in 0..rb {
                        let y = &b[(v, *k)];
                        if !y.is_zero() {
                            out[(u * rb + v, i)] += &(&xm * y);
                        }
                    }
                }
            }
        }
        out
    }

    /// `Delta` as an `n^2 x n` matrix.
    pub fn delta_matrix(&self) -> Matrix {
        let id = Matrix::identity(self.field, self.dim());
        self.tensor_after_delta(&id, &id)
    }

    /// `Delta(v)` for a coordinate vector, as an `n x n` matrix whose
    /// `(j, k)` entry is the coefficient of `b_j (x) b_k`.
    pub fn delta_of(&self, v: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut out = Matrix::zeros(self.field, n, n);
        for (i, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, k, mu) in &self.delta[i] {
                out[(*j, *k)] += &(c * mu);
            }
        }
        out
    }

    pub fn counit_of(&self, v: &[Scalar]) -> Scalar {
        crate::exactlin::dot(v, &self.counit, self.field)
    }

    /// Product in `C*`: `(f g)(c) = sum f(c2) g(c1)`.
    pub fn dual_mul(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        self.delta
            .iter()
            .map(|terms| {
                let mut acc = self.field.zero();
                for (j, k, mu) in terms {
                    let (a, b) = (&g[*j], &f[*k]);
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(&(mu * a) * b);
                    }
                }
                acc
            })
            .collect()
    }

    /// Convolution `(f * g)(c) = sum f(c1) g(c2)`, the opposite product.
    pub fn convolve(&self, f: &[Scalar], g: &[Scalar]) -> Vec<Scalar> {
        self.dual_mul(g, f)
    }

    /// Matrix of left multiplication `g -> f g` on `C*`.
    pub fn dual_left_mul(&self, f: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for (i, terms) in self.delta.iter().enumerate() {
            for (j, k, mu) in terms {
                if !f[*k].is_zero() {
                    m[(i, *j)] += &(mu * &f[*k]);
                }
            }
        }
        m
    }

    /// `C*` through its faithful left regular representation; coordinates in
    /// the algebra agree with dual-basis coordinates.
    pub fn dual_algebra(&self) -> MatrixAlgebra {
        let n = self.dim();
        let basis = (0..n)
            .map(|i| self.dual_left_mul(&crate::exactlin::unit(self.field, n, i)))
            .collect();
        MatrixAlgebra::new(self.field, n, basis).expect("regular representation of C* is faithful")
    }

    /// Whether `Delta(V) subset V (x) V`.
    pub fn is_subcoalgebra(&self, v: &Subspace) -> bool {
        let q = quotient_map(v);
        let id = Matrix::identity(self.field, self.dim());
        let basis = v.basis().transpose();
        self.tensor_after_delta(&q, &id).mul(&basis).is_zero()
            && self.tensor_after_delta(&id, &q).mul(&basis).is_zero()
    }

    /// The subcoalgebra on `v`, in the basis of `v`'s canonical rows. Labels
    /// are those of the pivot columns. Returns the coalgebra and the
    /// inclusion matrix (one row per new basis element, in old coordinates).
    pub fn restrict(&self, v: &Subspace) -> Result<(Coalgebra, Matrix)> {
        if !self.is_subcoalgebra(v) {
            return Err(Error::NotSubcoalgebra(format!(
                "subspace of dimension {} is not closed under the comultiplication",
                v.dim()
            )));
        }
        let incl = v.basis().clone();
        let coal = self.transport(&incl, v.pivots())?;
        Ok((coal, incl))
    }

    /// Structure constants on the span of the rows of `incl`, assumed to be
    /// an independent family spanning a subcoalgebra.
    pub(crate) fn transport(&self, incl: &Matrix, pivots: &[usize]) -> Result<Coalgebra> {
        let m = incl.rows();
        let coords = Coordinatizer::new(incl)
            .ok_or_else(|| Error::invalid("dependent subcoalgebra basis"))?;
        let mut delta = Vec::with_capacity(m);
        for r in 0..m {
            let d = self.delta_of(incl.row(r));
            // d = incl^T X incl; first strip the right factor row by row.
            let z: Vec<Vec<Scalar>> = (0..d.rows())
                .map(|j| coords.coords(d.row(j)).ok_or_else(not_closed))
                .collect::<Result<_>>()?;
            let z = Matrix::from_rows(self.field, m, z);
            let mut terms = Vec::new();
            for b in 0..m {
                let x = coords.coords(&z.col(b)).ok_or_else(not_closed)?;
                for (a, s) in x.into_iter().enumerate() {
                    if !s.is_zero() {
                        terms.push((a, b, s));
                    }
                }
            }
            delta.push(terms);
        }
        let counit = (0..m).map(|r| self.counit_of(incl.row(r))).collect();
        let labels = pivots.iter().map(|&p| self.labels[p].clone()).collect();
        Coalgebra::new(self.field, labels, delta, counit)
    }

    /// Basis element as a coordinate vector.
    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        crate::exactlin::unit(self.field, self.dim(), i)
    }

    /// Subspace spanned by the named basis elements.
    pub fn span_of(&self, labels: &[&str]) -> Result<Subspace> {
        let idx = labels
            .iter()
            .map(|l| {
                self.index_of(l)
                    .ok_or_else(|| Error::invalid(format!("unknown basis label {l:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::coordinate(self.field, self.dim(), &idx))
    }

    /// Renders a vector as a linear combination of basis labels.
    pub fn format_vector(&self, v: &[Scalar]) -> String {
        let parts: Vec<String> = v
            .iter()
            .zip(&self.labels)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, l)| if c.is_one() { l.clone() } else { format!("{c}*{l}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

fn not_closed() -> Error {
    Error::NotSubcoalgebra("comultiplication leaves the subspace".into())
}

/// A matrix whose kernel is exactly `v` (rows span the orthogonal).
pub(crate) fn quotient_map(v: &Subspace) -> Matrix {
    v.orthogonal().basis().clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    #[test]
    fn grouplike_line_is_valid() {
        assert!(Coalgebra::grouplike_line(Q, "g").check().is_ok());
    }

    #[test]
    fn bad_counit_is_reported() {
        let c = Coalgebra::new(Q, vec!["g".into()], vec![vec![(0, 0, Q.one())]], vec![Q.zero()])
            .unwrap();
        let r = c.check();
        assert!(!r.is_ok());
        assert!(r.violations.iter().any(|v| v.contains("counit") && v.contains('g')));
    }

    #[test]
    fn matrix_coalgebra_is_valid() {
        for n in 1..=3 {
            assert!(Coalgebra::matrix_coalgebra(Q, n).check().is_ok());
        }
    }

    #[test]
    fn non_coassociative_is_reported() {
        // Delta(x) = x (x) x + x (x) g but Delta(g) = g (x) g.
        let c = Coalgebra::new(
            Q,
            vec!["g".into(), "x".into()],
            vec![vec![(0, 0, Q.one())], vec![(1, 1, Q.one()), (1, 0, Q.one())]],
            vec![Q.one(), Q.zero()],
        )
        .unwrap();
        assert!(c.check().violations.iter().any(|v| v.contains("coassociativity")));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let r = Coalgebra::new(
            Q,
            vec!["g".into(), "g".into()],
            vec![vec![], vec![]],
            vec![Q.zero(), Q.zero()],
        );
        assert!(r.is_err());
    }

    #[test]
    fn counit_is_unit_of_dual() {
        let c = Coalgebra::matrix_coalgebra(Q, 2);
        let f: Vec<Scalar> = (0..4).map(|i| Q.from_i64(i as i64 + 1)).collect();
        assert_eq!(c.dual_mul(c.counit(), &f), f);
        assert_eq!(c.dual_mul(&f, c.counit()), f);
    }
}
