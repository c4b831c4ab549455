//! Exact linear algebra over ℚ.
//!
//! Every subspace is held as the nonzero rows of its reduced row-echelon
//! basis. RREF is canonical, so two [`Subspace`] values are equal exactly when
//! they describe the same subspace, and `==` is the subspace equality used by
//! all direct-sum and containment checks downstream.
//!
//! Vectors are coordinate rows. A [`Matrix`] acts on column vectors, so the
//! eigenspace of `m` for `λ` is `kernel(m - λI)`.

use crate::error::{Error, Result};
use crate::functional::Functional;
use crate::rational::{self, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows).map(|i| rational::format_all(self.row(i))).collect();
        write!(f, "Matrix{rows:?}")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m.set(i, i, e.clone());
        }
        m
    }

    /// Builds a matrix from rows of equal length. `cols` is needed to give a
    /// zero-row matrix its width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Result<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        let n = rows.len();
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Column `j` of the result is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Result<Self> {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| rational::int(x)).collect()).collect();
        Matrix::from_rows(cols, rows).expect("ragged integer matrix")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        (0..self.rows).map(move |i| self.row(i))
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.row_vectors().map(<[Rational]>::to_vec).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.data[idx] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    /// `self - λI`.
    pub fn shift(&self, lambda: &Rational) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            let v = m.get(i, i) - lambda;
            m.set(i, i, v);
        }
        m
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + self.get(i, i))
    }

    pub fn commutator(&self, rhs: &Matrix) -> Matrix {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn rank(&self) -> usize {
        rref_with_pivots(self).1.len()
    }

    /// Stacks `self` on top of `below`.
    pub fn vstack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend(below.data.iter().cloned());
        Matrix { rows: self.rows + below.rows, cols: self.cols, data }
    }

    /// One solution `x` of `self · x = b`, if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for (i, bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, bi.clone());
        }
        let (r, pivots) = rref_with_pivots(&aug);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r.get(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (r, pivots) = rref_with_pivots(&self.hstack(&Matrix::identity(n)));
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.get(i, n + j).clone());
            }
        }
        Some(out)
    }

    pub fn hstack(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows);
        let cols = self.cols + right.cols;
        let mut out = Matrix::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..right.cols {
                out.set(i, self.cols + j, right.get(i, j).clone());
            }
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a * rhs.get(k, l));
                    }
                }
            }
        }
        out
    }
}

fn rref_with_pivots(m: &Matrix) -> (Matrix, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..a.cols {
        if row == a.rows {
            break;
        }
        let Some(p) = (row..a.rows).find(|&r| !a.get(r, col).is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..a.cols {
                a.data.swap(p * a.cols + j, row * a.cols + j);
            }
        }
        let inv = a.get(row, col).recip();
        for j in col..a.cols {
            let v = a.get(row, j) * &inv;
            a.set(row, j, v);
        }
        for r in 0..a.rows {
            if r == row || a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col).clone();
            for j in col..a.cols {
                let sub = a.get(row, j) * &factor;
                if !sub.is_zero() {
                    let v = a.get(r, j) - sub;
                    a.set(r, j, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (a, pivots)
}

/// Reduced row-echelon form; shape is kept, zero rows sink to the bottom.
pub fn rref(m: &Matrix) -> Matrix {
    rref_with_pivots(m).0
}

/// `{v : m·v = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let (r, pivots) = rref_with_pivots(m);
    let n = m.cols;
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..n).filter(|&f| !is_pivot[f]).map(|free| {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(row, free);
        }
        v
    });
    Subspace::span(n, vectors)
}

/// Joint kernel of several matrices with the same column count.
pub fn joint_kernel(ambient: usize, ms: &[&Matrix]) -> Subspace {
    let mut stacked = Matrix::zeros(0, ambient);
    for m in ms {
        stacked = stacked.vstack(m);
    }
    kernel(&stacked)
}

/// A subspace of ℚⁿ held by its canonical RREF basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, {:?})", self.ambient_dim(), self.basis)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span<V: AsRef<[Rational]>>(ambient: usize, vectors: impl IntoIterator<Item = V>) -> Self {
        let rows: Vec<Vec<Rational>> = vectors.into_iter().map(|v| v.as_ref().to_vec()).collect();
        let m = Matrix::from_rows(ambient, rows).expect("vector length differs from ambient dimension");
        Subspace::row_space(&m)
    }

    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = rref_with_pivots(m);
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { basis: Matrix::from_rows(m.cols, rows).expect("rref rows"), pivots }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: &[usize]) -> Self {
        Subspace::span(
            ambient,
            indices.iter().map(|&i| {
                let mut v = vec![Rational::zero(); ambient];
                v[i] = Rational::one();
                v
            }),
        )
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> impl Iterator<Item = &[Rational]> + '_ {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Remainder of `v` after elimination against the basis.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim());
        let mut r = v.to_vec();
        for (row, &p) in self.pivots.iter().enumerate() {
            if r[p].is_zero() {
                continue;
            }
            let c = r[p].clone();
            for (x, b) in r.iter_mut().zip(self.basis.row(row)) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        r
    }

    pub fn contains_vector(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim(), found: other.ambient_dim() });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.plus(other))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(self.meet(other))
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.includes(other))
    }

    pub(crate) fn plus(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.ambient_dim(), other.ambient_dim());
        if other.is_zero() || self.is_full() {
            return self.clone();
        }
        if self.is_zero() {
            return other.clone();
        }
        Subspace::row_space(&self.basis.vstack(&other.basis))
    }

    pub(crate) fn meet(&self, other: &Subspace) -> Subspace {
        debug_assert_eq!(self.ambient_dim(), other.ambient_dim());
        let n = self.ambient_dim();
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(n);
        }
        if self.is_full() {
            return other.clone();
        }
        if other.is_full() {
            return self.clone();
        }
        // x·A = y·B  <=>  [Aᵀ | -Bᵀ] (x, y) = 0
        let k = self.dim();
        let mut columns: Vec<Vec<Rational>> = self.basis_vectors().map(<[Rational]>::to_vec).collect();
        columns.extend(other.basis_vectors().map(|b| b.iter().map(|x| -x).collect::<Vec<_>>()));
        let system = Matrix::from_columns(n, &columns).expect("columns have ambient length");
        let ker = kernel(&system);
        Subspace::span(
            n,
            ker.basis_vectors().map(|sol| {
                let mut v = vec![Rational::zero(); n];
                for (coef, a) in sol[..k].iter().zip(self.basis_vectors()) {
                    if coef.is_zero() {
                        continue;
                    }
                    for (x, y) in v.iter_mut().zip(a) {
                        *x += coef * y;
                    }
                }
                v
            }),
        )
    }

    pub(crate) fn includes(&self, other: &Subspace) -> bool {
        debug_assert_eq!(self.ambient_dim(), other.ambient_dim());
        other.dim() <= self.dim() && other.basis_vectors().all(|v| self.contains_vector(v))
    }

    /// Complement of `self` inside `outer` (which must contain `self`), built by
    /// walking the RREF basis of `outer` in order and keeping each vector that is
    /// not yet in the running span.
    pub fn complement_within(&self, outer: &Subspace) -> Subspace {
        debug_assert!(outer.includes(self));
        let mut running = self.clone();
        let mut kept = Vec::new();
        for v in outer.basis_vectors() {
            if !running.contains_vector(v) {
                kept.push(v.to_vec());
                running = Subspace::span(self.ambient_dim(), running.basis_vectors().chain(std::iter::once(v)));
            }
        }
        Subspace::span(self.ambient_dim(), kept)
    }

    /// Sum of a family of subspaces.
    pub fn sum_all<'a>(ambient: usize, spaces: impl IntoIterator<Item = &'a Subspace>) -> Subspace {
        let mut stacked = Matrix::zeros(0, ambient);
        for s in spaces {
            stacked = stacked.vstack(&s.basis);
        }
        Subspace::row_space(&stacked)
    }

    /// True iff the family is independent, i.e. the dimension of its sum is the
    /// sum of the dimensions.
    pub fn independent<'a>(ambient: usize, spaces: impl IntoIterator<Item = &'a Subspace> + Clone) -> bool {
        let total: usize = spaces.clone().into_iter().map(Subspace::dim).sum();
        Subspace::sum_all(ambient, spaces).dim() == total
    }

    /// Image of the subspace under `m`.
    pub fn image(&self, m: &Matrix) -> Subspace {
        Subspace::span(m.rows(), self.basis_vectors().map(|v| m.mul_vec(v)))
    }
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and rational eigenvalues.

/// Coefficients in ascending degree; the last entry is the leading coefficient.
pub type Poly = Vec<Rational>;

/// Monic characteristic polynomial `det(xI - m)` by Faddeev-LeVerrier.
pub fn characteristic_polynomial(m: &Matrix) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut c = vec![Rational::zero(); n + 1];
    c[n] = Rational::one();
    let mut acc = Matrix::zeros(n, n);
    for k in 1..=n {
        acc = m.mul(&acc);
        for i in 0..n {
            let v = acc.get(i, i) + &c[n + 1 - k];
            acc.set(i, i, v);
        }
        let t = m.mul(&acc).trace();
        c[n - k] = -t / rational::int(k as i64);
    }
    Ok(c)
}

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn degree(p: &Poly) -> usize {
    p.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

fn is_zero_poly(p: &Poly) -> bool {
    p.iter().all(Zero::is_zero)
}

pub fn poly_eval(p: &Poly, x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

fn derivative(p: &Poly) -> Poly {
    if p.len() <= 1 {
        return vec![Rational::zero()];
    }
    p.iter().enumerate().skip(1).map(|(i, c)| c * rational::int(i as i64)).collect()
}

/// Polynomial long division: `(quotient, remainder)`.
fn div_rem(a: &Poly, b: &Poly) -> (Poly, Poly) {
    let db = degree(b);
    let lead = b[db].clone();
    let mut r = a.clone();
    trim(&mut r);
    if is_zero_poly(&r) || degree(&r) < db {
        return (vec![Rational::zero()], r);
    }
    let mut q = vec![Rational::zero(); degree(&r) - db + 1];
    while !is_zero_poly(&r) && degree(&r) >= db {
        let dr = degree(&r);
        let coef = &r[dr] / &lead;
        let shift = dr - db;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            let v = &r[i + shift] - &coef * bc;
            r[i + shift] = v;
        }
        q[shift] = coef;
        r.truncate(dr);
        if r.is_empty() {
            r.push(Rational::zero());
        }
        trim(&mut r);
    }
    (q, r)
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let mut x = a.clone();
    let mut y = b.clone();
    trim(&mut x);
    trim(&mut y);
    while !is_zero_poly(&y) {
        let (_, r) = div_rem(&x, &y);
        x = y;
        y = r;
    }
    let lead = x[degree(&x)].clone();
    if !lead.is_zero() {
        for c in x.iter_mut() {
            *c /= &lead;
        }
    }
    x
}

/// Divisors of `n > 0`. Trial division stops at `TRIAL_LIMIT`; a cofactor left
/// over after that is treated as prime. A missed divisor can only hide a root,
/// which the eigenspace dimension check then reports as `NotSplitOverField`.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    const TRIAL_LIMIT: u64 = 1_000_000;
    let mut rest = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d: u64 = 2;
    while d <= TRIAL_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > rest {
            break;
        }
        let mut e = 0;
        while (&rest % &bd).is_zero() {
            rest /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > BigInt::one() {
        factors.push((rest, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for base in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(base * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

/// Distinct rational roots of `p`, ascending, via the rational root theorem.
pub fn rational_roots(p: &Poly) -> Vec<Rational> {
    let mut p = p.clone();
    trim(&mut p);
    if is_zero_poly(&p) || degree(&p) == 0 {
        return Vec::new();
    }
    let mut roots = Vec::new();
    if p[0].is_zero() {
        roots.push(Rational::zero());
        while p.len() > 1 && p[0].is_zero() {
            p.remove(0);
        }
    }
    if degree(&p) > 0 {
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let ints: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();
        let constant = &ints[0];
        let leading = &ints[ints.len() - 1];
        let nums = divisors(constant);
        let dens = divisors(leading);
        let mut candidates: Vec<Rational> = Vec::new();
        for num in &nums {
            for den in &dens {
                let q = Rational::new(num.clone(), den.clone());
                candidates.push(q.clone());
                candidates.push(-q);
            }
        }
        candidates.sort();
        candidates.dedup();
        roots.extend(candidates.into_iter().filter(|q| poly_eval(&p, q).is_zero()));
    }
    roots.sort();
    roots
}

/// All eigenvalues of `m` with algebraic multiplicity, ascending. Fails unless
/// `m` is diagonalizable over ℚ.
pub fn rational_eigenvalues(m: &Matrix) -> Result<Vec<Rational>> {
    Ok(eigen_decomposition(m)?.into_iter().flat_map(|(l, s)| std::iter::repeat_n(l, s.dim())).collect())
}

/// Distinct eigenvalues with their eigenspaces, ascending by eigenvalue.
pub fn eigen_decomposition(m: &Matrix) -> Result<Vec<(Rational, Subspace)>> {
    let chi = characteristic_polynomial(m)?;
    let n = m.rows;
    if n == 0 {
        return Ok(Vec::new());
    }
    let squarefree = {
        let g = poly_gcd(&chi, &derivative(&chi));
        div_rem(&chi, &g).0
    };
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in rational_roots(&squarefree) {
        let space = kernel(&m.shift(&lambda));
        total += space.dim();
        out.push((lambda, space));
    }
    if total != n {
        return Err(Error::NotSplitOverField);
    }
    Ok(out)
}

/// Common eigenspace decomposition of pairwise commuting operators. Each
/// entry pairs the tuple of eigenvalues (as a [`Functional`]) with its joint
/// eigenspace; entries are sorted lexicographically by functional.
pub fn joint_eigenspaces(ms: &[Matrix]) -> Result<Vec<(Functional, Subspace)>> {
    let Some(first) = ms.first() else {
        return Ok(Vec::new());
    };
    let n = first.rows;
    for m in ms {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.rows, cols: m.cols });
        }
        if m.rows != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.rows });
        }
    }
    for i in 0..ms.len() {
        for j in i + 1..ms.len() {
            if !ms[i].commutator(&ms[j]).is_zero() {
                return Err(Error::NonCommuting { first: i, second: j });
            }
        }
    }
    let mut parts: Vec<(Vec<Rational>, Subspace)> = vec![(Vec::new(), Subspace::full(n))];
    for m in ms {
        let eig = eigen_decomposition(m)?;
        let mut next = Vec::new();
        for (coords, space) in &parts {
            for (lambda, eigspace) in &eig {
                let piece = space.meet(eigspace);
                if !piece.is_zero() {
                    let mut c = coords.clone();
                    c.push(lambda.clone());
                    next.push((c, piece));
                }
            }
        }
        parts = next;
    }
    let total: usize = parts.iter().map(|(_, s)| s.dim()).sum();
    if total != n {
        return Err(Error::NotSplitOverField);
    }
    let mut out: Vec<(Functional, Subspace)> = parts.into_iter().map(|(c, s)| (Functional::new(c), s)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Coordinates of `v` in the (independent) basis given by `basis` rows.
pub fn coordinates_in(basis: &[Vec<Rational>], v: &[Rational]) -> Option<Vec<Rational>> {
    let n = v.len();
    let system = Matrix::from_columns(n, basis).ok()?;
    system.solve(v)
}
