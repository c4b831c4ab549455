//! Lie algebras presented by structure constants on a finite basis.
//!
//! Only brackets `[e_i, e_j]` with `i < j` are stored; `[e_j, e_i] = -[e_i, e_j]`
//! and `[e_i, e_i] = 0` hold by convention. The Jacobi identity is checked on
//! every basis triple before a [`LieAlgebra`] can be built.

use crate::error::{Error, Result};
use crate::linalg::{joint_kernel, Matrix, Subspace};
use crate::par;
use crate::rational::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A raw bracket table, not yet known to satisfy the Jacobi identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    dim: usize,
    brackets: BTreeMap<(usize, usize), Vec<Rational>>,
}

impl StructureConstants {
    pub fn new(dim: usize) -> Self {
        StructureConstants { dim, brackets: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j]`. Either order is accepted; `(j, i)` stores the negation.
    pub fn set(&mut self, i: usize, j: usize, value: Vec<Rational>) -> Result<()> {
        if i >= self.dim || j >= self.dim {
            return Err(Error::InvalidStructure(format!("bracket index ({i}, {j}) out of range for dim {}", self.dim)));
        }
        if value.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: value.len() });
        }
        if i == j {
            if value.iter().all(Zero::is_zero) {
                return Ok(());
            }
            return Err(Error::InvalidStructure(format!("[e{i}, e{i}] must vanish")));
        }
        let (key, value) = if i < j { ((i, j), value) } else { ((j, i), value.into_iter().map(|x| -x).collect()) };
        if value.iter().all(Zero::is_zero) {
            self.brackets.remove(&key);
        } else {
            self.brackets.insert(key, value);
        }
        Ok(())
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), Vec<Rational>> {
        &self.brackets
    }

    /// `[e_i, e_j]` for any pair.
    pub fn basis_bracket(&self, i: usize, j: usize) -> Vec<Rational> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => vec![Rational::zero(); self.dim],
            Less => self.brackets.get(&(i, j)).cloned().unwrap_or_else(|| vec![Rational::zero(); self.dim]),
            Greater => self
                .brackets
                .get(&(j, i))
                .map(|v| v.iter().map(|x| -x).collect())
                .unwrap_or_else(|| vec![Rational::zero(); self.dim]),
        }
    }

    /// `ad_{e_i}` as a matrix: column `j` holds `[e_i, e_j]`.
    fn ad_matrices(&self) -> Vec<Matrix> {
        (0..self.dim)
            .map(|i| {
                let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.basis_bracket(i, j)).collect();
                Matrix::from_columns(self.dim, &cols).expect("bracket vectors have length dim")
            })
            .collect()
    }

    /// First basis triple `i < j < k` on which the Jacobi identity fails.
    pub fn jacobi_violation(&self) -> Option<(usize, usize, usize)> {
        let ad = self.ad_matrices();
        let n = self.dim;
        // [[x, y], z] = -ad_z [x, y]
        let cyc = |a: usize, b: usize, c: usize| ad[c].mul_vec(&self.basis_bracket(a, b));
        par::find_first(n, |i| {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s1 = cyc(i, j, k);
                    let s2 = cyc(j, k, i);
                    let s3 = cyc(k, i, j);
                    if s1.iter().zip(&s2).zip(&s3).any(|((a, b), c)| !(a + b + c).is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
            None
        })
    }

    pub fn satisfies_jacobi(&self) -> bool {
        self.jacobi_violation().is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    table: StructureConstants,
    cartan: Vec<usize>,
    ad: Vec<Matrix>,
}

impl LieAlgebra {
    pub fn new(names: Vec<String>, table: StructureConstants, cartan: Vec<usize>) -> Result<Self> {
        let n = table.dim();
        if names.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: names.len() });
        }
        if cartan.is_empty() {
            return Err(Error::InvalidStructure("cartan index list is empty".into()));
        }
        let mut seen = vec![false; n];
        for &c in &cartan {
            if c >= n {
                return Err(Error::InvalidStructure(format!("cartan index {c} out of range for dim {n}")));
            }
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::InvalidStructure(format!("cartan index {c} repeated")));
            }
        }
        if let Some(triple) = table.jacobi_violation() {
            return Err(Error::JacobiViolation { triple });
        }
        let ad = table.ad_matrices();
        Ok(LieAlgebra { names, table, cartan, ad })
    }

    /// Convenience constructor with integer constants, `(i, j, [e_i, e_j])`.
    pub fn from_int_brackets(names: &[&str], brackets: &[(usize, usize, &[i64])], cartan: &[usize]) -> Result<Self> {
        let mut table = StructureConstants::new(names.len());
        for &(i, j, v) in brackets {
            table.set(i, j, v.iter().map(|&x| crate::rational::int(x)).collect())?;
        }
        LieAlgebra::new(names.iter().map(|s| s.to_string()).collect(), table, cartan.to_vec())
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn structure(&self) -> &StructureConstants {
        &self.table
    }

    pub fn cartan_indices(&self) -> &[usize] {
        &self.cartan
    }

    /// `ad_{e_i}`.
    pub fn ad(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    /// `ad_x` for an arbitrary element.
    pub fn ad_of(&self, x: &[Rational]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (c, a) in x.iter().zip(&self.ad) {
            if !c.is_zero() {
                m = m.add(&a.scale(c));
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[i] = num_traits::One::one();
        v
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        for len in [x.len(), y.len()] {
            if len != n {
                return Err(Error::DimensionMismatch { expected: n, found: len });
            }
        }
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (c, a) in x.iter().zip(&self.ad) {
            if c.is_zero() {
                continue;
            }
            for (o, v) in out.iter_mut().zip(a.mul_vec(y)) {
                if !v.is_zero() {
                    *o += c * v;
                }
            }
        }
        out
    }

    /// `span{[a, b] : a ∈ A, b ∈ B}`.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis_vectors() {
            for y in b.basis_vectors() {
                vs.push(self.bracket_unchecked(x, y));
            }
        }
        Subspace::span(self.dim(), vs)
    }

    pub fn cartan(&self) -> Subspace {
        Subspace::coordinate(self.dim(), &self.cartan)
    }

    /// `{x : [x, L] = 0}`.
    pub fn center(&self) -> Subspace {
        let ads: Vec<&Matrix> = self.ad.iter().collect();
        joint_kernel(self.dim(), &ads)
    }

    /// `[L, L]`.
    pub fn derived(&self) -> Subspace {
        Subspace::span(self.dim(), self.table.entries().values())
    }

    pub fn is_perfect(&self) -> bool {
        self.derived().is_full() && self.center().is_zero()
    }

    /// `[L, S] ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim()
            && self.ad.iter().all(|a| s.basis_vectors().all(|v| s.contains_vector(&a.mul_vec(v))))
    }

    /// `[S, S] ⊆ S`.
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        if s.ambient_dim() != self.dim() {
            return false;
        }
        let basis: Vec<&[Rational]> = s.basis_vectors().collect();
        basis.iter().enumerate().all(|(i, x)| {
            basis[i + 1..].iter().all(|y| s.contains_vector(&self.bracket_unchecked(x, y)))
        })
    }

    /// External direct sum; the second summand's basis follows the first.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n1 = self.dim();
        let n = n1 + other.dim();
        let mut table = StructureConstants::new(n);
        let embed = |v: &[Rational], offset: usize| {
            let mut out = vec![Rational::zero(); n];
            out[offset..offset + v.len()].clone_from_slice(v);
            out
        };
        for (&(i, j), v) in self.table.entries() {
            table.set(i, j, embed(v, 0)).expect("in range");
        }
        for (&(i, j), v) in other.table.entries() {
            table.set(i + n1, j + n1, embed(v, n1)).expect("in range");
        }
        let names = self.names.iter().chain(&other.names).cloned().collect();
        let cartan = self.cartan.iter().copied().chain(other.cartan.iter().map(|c| c + n1)).collect();
        LieAlgebra::new(names, table, cartan).expect("direct sum of Lie algebras is a Lie algebra")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    /// sl₂ on (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
    fn sl2() -> LieAlgebra {
        LieAlgebra::from_int_brackets(
            &["e", "f", "h"],
            &[(0, 1, &[0, 0, 1]), (2, 0, &[2, 0, 0]), (2, 1, &[0, -2, 0])],
            &[2],
        )
        .unwrap()
    }

    #[test]
    fn bracket_examples() {
        let l = sl2();
        let (e, f, h) = (ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1]));
        assert_eq!(l.bracket(&h, &e).unwrap(), ints(&[2, 0, 0]));
        assert_eq!(l.bracket(&e, &e).unwrap(), ints(&[0, 0, 0]));
        let epf: Vec<Rational> = e.iter().zip(&f).map(|(a, b)| a + b).collect();
        assert_eq!(l.bracket(&epf, &h).unwrap(), ints(&[-2, 2, 0]));
        assert!(matches!(l.bracket(&ints(&[1]), &h), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn jacobi_examples() {
        assert!(sl2().structure().satisfies_jacobi());
        let mut bad = StructureConstants::new(3);
        bad.set(2, 0, ints(&[2, 0, 0])).unwrap();
        bad.set(2, 1, ints(&[0, -2, 0])).unwrap();
        bad.set(0, 1, ints(&[1, 0, 0])).unwrap();
        assert_eq!(bad.jacobi_violation(), Some((0, 1, 2)));
        let err = LieAlgebra::new(vec!["e".into(), "f".into(), "h".into()], bad, vec![2]).unwrap_err();
        assert_eq!(err, Error::JacobiViolation { triple: (0, 1, 2) });
        assert!(StructureConstants::new(4).satisfies_jacobi());
    }

    #[test]
    fn center_examples() {
        assert!(sl2().center().is_zero());
        let ab = LieAlgebra::from_int_brackets(&["z"], &[], &[0]).unwrap();
        assert!(ab.center().is_full());
        let with_z = sl2().direct_sum(&ab);
        assert_eq!(with_z.center(), Subspace::coordinate(4, &[3]));
    }

    #[test]
    fn derived_and_perfect() {
        let l = sl2();
        assert!(l.derived().is_full());
        assert!(l.is_perfect());
        let ab = LieAlgebra::from_int_brackets(&["z"], &[], &[0]).unwrap();
        assert!(ab.derived().is_zero());
        assert!(!ab.is_perfect());
        let b = LieAlgebra::from_int_brackets(&["h", "e"], &[(0, 1, &[0, 1])], &[0]).unwrap();
        assert_eq!(b.derived(), Subspace::coordinate(2, &[1]));
        assert!(!b.is_perfect());
    }

    #[test]
    fn ideal_and_subalgebra() {
        let l = sl2();
        assert!(l.is_ideal(&Subspace::full(3)));
        assert!(l.is_subalgebra(&Subspace::full(3)));
        let e = Subspace::coordinate(3, &[0]);
        assert!(!l.is_ideal(&e));
        assert!(l.is_subalgebra(&e));
        let ll = l.direct_sum(&l);
        let first = Subspace::coordinate(6, &[0, 1, 2]);
        assert!(ll.is_ideal(&first));
        assert!(ll.is_subalgebra(&first));
        assert_eq!(ll.cartan_indices(), &[2, 5]);
    }

    #[test]
    fn set_rejects_bad_entries() {
        let mut t = StructureConstants::new(2);
        assert!(t.set(0, 2, ints(&[0, 0])).is_err());
        assert!(t.set(0, 1, ints(&[0])).is_err());
        assert!(t.set(1, 1, ints(&[1, 0])).is_err());
        t.set(1, 0, ints(&[0, 1])).unwrap();
        assert_eq!(t.basis_bracket(0, 1), ints(&[0, -1]));
    }
}
