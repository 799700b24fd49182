//! Univariate polynomials, minimal polynomials of matrices, and factoring.
//!
//! Over GF(p) factoring is complete (square-free decomposition followed by
//! Berlekamp). Over the rationals we split off rational roots and accept
//! leftover factors of degree two or three as irreducible; anything larger
//! is reported as undecidable rather than guessed.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{Field, Scalar};
use super::matrix::Matrix;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    /// Coefficients from the constant term up; no trailing zeros.
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Poly {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: Field) -> Poly {
        Poly::new(field, vec![])
    }

    pub fn one(field: Field) -> Poly {
        Poly::new(field, vec![field.one()])
    }

    pub fn x(field: Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// `x - root`.
    pub fn linear(root: &Scalar) -> Poly {
        let f = root.field();
        Poly::new(f, vec![-root, f.one()])
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> Poly {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.inv().unwrap();
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        Poly::new(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let z = self.field.zero();
        let c = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&z) + other.coeffs.get(i).unwrap_or(&z))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let mut c = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += &(a * b);
            }
        }
        Poly::new(self.field, c)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(self.field), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().inv().unwrap();
        let mut r = self.coeffs.clone();
        let Some(n) = self.degree() else {
            return (Poly::zero(self.field), Poly::zero(self.field));
        };
        if n < dd {
            return (Poly::zero(self.field), self.clone());
        }
        let mut q = vec![self.field.zero(); n - dd + 1];
        for k in (0..=n - dd).rev() {
            let coef = &r[k + dd] * &lead_inv;
            if coef.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] -= &(&coef * dc);
            }
            q[k] = coef;
        }
        (Poly::new(self.field, q), Poly::new(self.field, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.divrem(d).1
    }

    /// Exact quotient; panics if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> Poly {
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a * &self.field.from_i64(i as i64))
            .collect();
        Poly::new(self.field, c)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(self.field, n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            acc = acc.add(&Matrix::identity(self.field, n).scale(c));
        }
        acc
    }

    /// `self^e mod modulus`.
    fn powmod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(self.field);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    fn sort_key(&self) -> (usize, Vec<Scalar>) {
        (self.coeffs.len(), self.coeffs.clone())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let show_coef = !c.is_one() || i == 0;
            if show_coef {
                write!(f, "{c}")?;
                if i > 0 {
                    write!(f, "*")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Minimal polynomial of a square matrix (monic), by the first linear
/// dependency among `I, m, m^2, ...`.
pub fn minpoly(m: &Matrix) -> Poly {
    assert!(m.is_square(), "minimal polynomial of a non-square matrix");
    let field = m.field();
    let n = m.rows();
    let mut powers: Vec<Vec<Scalar>> = vec![Matrix::identity(field, n).flatten()];
    let mut cur = Matrix::identity(field, n);
    loop {
        cur = cur.mul(m);
        let target = cur.flatten();
        let k = powers.len();
        // Columns are the previous powers.
        let mut sys = Matrix::zeros(field, n * n, k);
        for (j, p) in powers.iter().enumerate() {
            for (i, v) in p.iter().enumerate() {
                sys[(i, j)] = v.clone();
            }
        }
        if let Some(c) = sys.solve(&target) {
            let mut coeffs: Vec<Scalar> = c.iter().map(|a| -a).collect();
            coeffs.push(field.one());
            return Poly::new(field, coeffs);
        }
        powers.push(target);
    }
}

/// Minimal polynomial of `m` factored into monic irreducibles with
/// multiplicities, sorted by degree then coefficients.
pub fn minpoly_factors(m: &Matrix) -> Result<Vec<(Poly, usize)>> {
    factor(&minpoly(m))
}

/// Factors a nonzero polynomial into monic irreducibles.
pub fn factor(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    if f.is_zero() {
        return Err(Error::invalid("cannot factor the zero polynomial"));
    }
    let f = f.monic();
    let mut out = Vec::new();
    for (part, mult) in squarefree(&f) {
        for irr in factor_squarefree(&part)? {
            out.push((irr, mult));
        }
    }
    out.sort_by_key(|a| a.0.sort_key());
    Ok(out)
}

/// Square-free decomposition: pairs `(g, i)` with `f = prod g^i`, each `g`
/// square-free, monic and nonconstant.
pub fn squarefree(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    if f.degree().unwrap_or(0) == 0 {
        return vec![];
    }
    match f.field() {
        Field::Rational => yun(&f),
        Field::Prime(p) => squarefree_mod_p(&f, p),
    }
}

fn yun(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let fp = f.derivative();
    let b = f.gcd(&fp);
    let mut c = f.div_exact(&b);
    let mut d = fp.div_exact(&b).sub(&c.derivative());
    let mut i = 1;
    while c.degree().unwrap_or(0) > 0 {
        let a = c.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a);
        d = d.div_exact(&a).sub(&c.derivative());
        i += 1;
    }
    out
}

fn squarefree_mod_p(f: &Poly, p: u64) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let fp = f.derivative();
    let mut c = f.gcd(&fp);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while w.degree().unwrap_or(0) > 0 {
        let y = w.gcd(&c);
        let fac = w.div_exact(&y);
        if fac.degree().unwrap_or(0) > 0 {
            out.push((fac, i));
        }
        w = y.clone();
        c = c.div_exact(&y);
        i += 1;
    }
    if c.degree().unwrap_or(0) > 0 {
        // c is a polynomial in x^p; take the p-th root coefficientwise.
        let p = p as usize;
        let root = Poly::new(
            c.field(),
            c.coeffs().iter().step_by(p).cloned().collect(),
        );
        for (g, j) in squarefree_mod_p(&root, p as u64) {
            out.push((g, j * p));
        }
    }
    out
}

fn factor_squarefree(f: &Poly) -> Result<Vec<Poly>> {
    match f.field() {
        Field::Prime(p) => Ok(berlekamp(f, p)),
        Field::Rational => factor_rational_squarefree(f),
    }
}

fn berlekamp(f: &Poly, p: u64) -> Vec<Poly> {
    let field = f.field();
    let n = f.degree().unwrap();
    if n <= 1 {
        return vec![f.monic()];
    }
    // Row i holds x^(i p) mod f.
    let xp = Poly::x(field).powmod(p, f);
    let mut q = Matrix::zeros(field, n, n);
    let mut cur = Poly::one(field);
    for i in 0..n {
        for (j, c) in cur.coeffs().iter().enumerate() {
            q[(i, j)] = c.clone();
        }
        cur = cur.mul(&xp).rem(f);
    }
    let qi = q.sub(&Matrix::identity(field, n));
    let kernel = qi.transpose().kernel_basis();
    let r = kernel.rows();
    if r == 1 {
        return vec![f.monic()];
    }
    let mut factors = vec![f.monic()];
    for k in 0..r {
        if factors.len() == r {
            break;
        }
        let g = Poly::new(field, kernel.row(k).to_vec());
        if g.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut next = Vec::new();
        for h in factors {
            if h.degree().unwrap() == 1 {
                next.push(h);
                continue;
            }
            let mut rest = h.clone();
            for s in field.elements().unwrap() {
                if rest.degree().unwrap() <= 1 {
                    break;
                }
                let d = rest.gcd(&g.sub(&Poly::new(field, vec![s])));
                let dd = d.degree().unwrap();
                if dd > 0 && dd < rest.degree().unwrap() {
                    rest = rest.div_exact(&d);
                    next.push(d);
                }
            }
            next.push(rest);
        }
        factors = next;
    }
    factors
}

fn factor_rational_squarefree(f: &Poly) -> Result<Vec<Poly>> {
    let mut out = Vec::new();
    let mut rest = f.monic();
    for root in rational_roots(&rest)? {
        let lin = Poly::linear(&root);
        rest = rest.div_exact(&lin);
        out.push(lin);
    }
    match rest.degree().unwrap() {
        0 => {}
        2 | 3 => out.push(rest),
        d => {
            return Err(Error::Undecidable {
                field: Field::Rational,
                reason: format!("root-free factor of degree {d} ({rest}) cannot be certified irreducible"),
            })
        }
    }
    Ok(out)
}

/// Distinct rational roots of a polynomial over Q.
fn rational_roots(f: &Poly) -> Result<Vec<Scalar>> {
    let field = Field::Rational;
    // Scale to a primitive integer polynomial.
    let mut lcm = BigInt::one();
    for c in f.coeffs() {
        lcm = lcm.lcm(c.as_rational().unwrap().denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect();
    let mut roots = Vec::new();
    let mut lo = 0;
    while ints[lo].is_zero() {
        lo += 1;
    }
    if lo > 0 {
        roots.push(field.zero());
    }
    if lo == ints.len() - 1 {
        return Ok(roots);
    }
    let a0 = ints[lo].abs();
    let an = ints.last().unwrap().abs();
    for num in divisors(&a0)? {
        for den in divisors(&an)? {
            if num.gcd(&den) != BigInt::one() {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Scalar::Rat(num_rational::BigRational::new(
                    &num * BigInt::from(sign),
                    den.clone(),
                ));
                if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Ok(roots)
}

fn divisors(n: &BigInt) -> Result<Vec<BigInt>> {
    let Some(v) = n.to_u64().filter(|&v| v < 1_000_000_000_000) else {
        return Err(Error::Undecidable {
            field: Field::Rational,
            reason: format!("coefficient {n} too large for rational-root search"),
        });
    };
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= v {
        if v % d == 0 {
            small.push(BigInt::from(d));
            if d * d != v {
                large.push(BigInt::from(v / d));
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    Ok(small)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn p(field: Field, c: &[i64]) -> Poly {
        Poly::from_i64(field, c)
    }

    #[test]
    fn minpoly_examples() {
        assert_eq!(minpoly(&Matrix::identity(Q, 3)), p(Q, &[-1, 1]));
        let j = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
        assert_eq!(minpoly(&j), p(Q, &[0, 0, 1]));
        let d = Matrix::from_i64(Q, &[&[1, 0], &[0, 2]]);
        assert_eq!(minpoly(&d), p(Q, &[2, -3, 1]));
    }

    #[test]
    fn minpoly_factor_examples() {
        let f = minpoly_factors(&Matrix::identity(Q, 2)).unwrap();
        assert_eq!(f, vec![(p(Q, &[-1, 1]), 1)]);
        let j = Matrix::from_i64(Q, &[&[0, 1], &[0, 0]]);
        assert_eq!(minpoly_factors(&j).unwrap(), vec![(p(Q, &[0, 1]), 2)]);
        let d = Matrix::from_i64(Q, &[&[1, 0], &[0, 2]]);
        assert_eq!(
            minpoly_factors(&d).unwrap(),
            vec![(p(Q, &[-2, 1]), 1), (p(Q, &[-1, 1]), 1)]
        );
    }

    #[test]
    fn rational_quadratic_is_irreducible() {
        let f = p(Q, &[-2, 0, 1]).mul(&p(Q, &[1, 1]).pow(2));
        let fac = factor(&f).unwrap();
        assert_eq!(fac, vec![(p(Q, &[1, 1]), 2), (p(Q, &[-2, 0, 1]), 1)]);
    }

    #[test]
    fn rational_quartic_without_roots_is_undecidable() {
        let f = p(Q, &[2, 0, 0, 0, 1]);
        assert!(matches!(factor(&f), Err(Error::Undecidable { .. })));
    }

    #[test]
    fn berlekamp_splits_over_gf() {
        let f5 = Field::Prime(5);
        // x^4 - 1 = (x-1)(x-2)(x-3)(x-4) over GF(5)
        let fac = factor(&p(f5, &[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(fac.len(), 4);
        assert!(fac.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
        // x^2 + 2 is irreducible over GF(5)
        let fac = factor(&p(f5, &[2, 0, 1])).unwrap();
        assert_eq!(fac, vec![(p(f5, &[2, 0, 1]), 1)]);
        // (x+1)^5 = x^5 + 1 over GF(5)
        let fac = factor(&p(f5, &[1, 0, 0, 0, 0, 1])).unwrap();
        assert_eq!(fac, vec![(p(f5, &[1, 1]), 5)]);
    }

    #[test]
    fn berlekamp_product_of_quadratics() {
        let f3 = Field::Prime(3);
        // (x^2+1)(x^2+x+2) over GF(3), both irreducible
        let a = p(f3, &[1, 0, 1]);
        let b = p(f3, &[2, 1, 1]);
        let fac = factor(&a.mul(&b)).unwrap();
        assert_eq!(fac.len(), 2);
        let prod = fac.iter().fold(Poly::one(f3), |acc, (g, m)| acc.mul(&g.pow(*m)));
        assert_eq!(prod, a.mul(&b));
    }
}
