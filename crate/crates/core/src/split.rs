//! Root-space decomposition with respect to the designated Cartan subalgebra.
//!
//! The roots are the nonzero joint eigenvalue tuples of `ad_{h_i}` over the
//! Cartan basis, with `[h, x] = α(h) x` on `L_α`.

use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::functional::{self, Functional};
use crate::linalg::{joint_eigenspaces, Matrix, Subspace};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitData {
    algebra: LieAlgebra,
    cartan: Subspace,
    roots: Vec<(Functional, Subspace)>,
    zero_space: Subspace,
}

/// Checks that the Cartan basis is abelian, that every `ad_h` is diagonalizable
/// over ℚ, and that the zero root space is exactly `H`.
pub fn split(algebra: &LieAlgebra) -> Result<SplitData> {
    let cartan_idx = algebra.cartan_indices();
    for (a, &i) in cartan_idx.iter().enumerate() {
        for &j in &cartan_idx[a + 1..] {
            if algebra.structure().basis_bracket(i, j).iter().any(|x| !x.is_zero()) {
                return Err(Error::CartanNotAbelian { first: i, second: j });
            }
        }
    }
    let ads: Vec<Matrix> = cartan_idx.iter().map(|&i| algebra.ad(i).clone()).collect();
    let parts = joint_eigenspaces(&ads)?;
    let cartan = algebra.cartan();
    let rank = cartan_idx.len();
    let mut zero_space = Subspace::zero(algebra.dim());
    let mut roots = Vec::new();
    for (f, space) in parts {
        if f.is_zero() {
            zero_space = space;
        } else {
            roots.push((f, space));
        }
    }
    if zero_space != cartan {
        return Err(Error::NotSelfCentralizing { zero_dim: zero_space.dim(), cartan_dim: rank });
    }
    Ok(SplitData { algebra: algebra.clone(), cartan, roots, zero_space })
}

impl SplitData {
    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn cartan(&self) -> &Subspace {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.algebra.cartan_indices().len()
    }

    /// Nonzero roots with their root spaces, sorted lexicographically.
    pub fn roots(&self) -> &[(Functional, Subspace)] {
        &self.roots
    }

    pub fn root_functionals(&self) -> Vec<Functional> {
        self.roots.iter().map(|(f, _)| f.clone()).collect()
    }

    pub fn zero_space(&self) -> &Subspace {
        &self.zero_space
    }

    /// `L_f`: `H` for the zero functional, the zero subspace off `Λ ∪ {0}`.
    pub fn root_space(&self, f: &Functional) -> Subspace {
        if f.is_zero() {
            return self.zero_space.clone();
        }
        self.roots
            .binary_search_by(|(g, _)| g.cmp(f))
            .map(|i| self.roots[i].1.clone())
            .unwrap_or_else(|_| Subspace::zero(self.algebra.dim()))
    }

    pub fn is_root(&self, f: &Functional) -> bool {
        self.roots.binary_search_by(|(g, _)| g.cmp(f)).is_ok()
    }

    pub fn is_symmetric_roots(&self) -> bool {
        functional::is_symmetric(self.roots.iter().map(|(f, _)| f))
    }

    pub fn check_symmetric(&self) -> Result<()> {
        functional::check_system(&self.root_functionals(), "root system", Some(self.rank()))
    }

    /// `Σ_α [L_α, L_{-α}]`, which lies in `H`.
    pub fn coroot_span(&self) -> Subspace {
        let parts: Vec<Subspace> = self
            .roots
            .iter()
            .map(|(a, la)| self.algebra.bracket_spaces(la, &self.root_space(&-a)))
            .collect();
        Subspace::sum_all(self.algebra.dim(), &parts)
    }

    /// Names of basis vectors spanning each root space, when the root space is
    /// a coordinate subspace; otherwise the basis rows are rendered.
    pub fn describe_space(&self, s: &Subspace) -> Vec<String> {
        describe(self.algebra.names(), s)
    }
}

/// Render each basis vector of `s` as a linear combination of `names`.
pub fn describe(names: &[String], s: &Subspace) -> Vec<String> {
    s.basis_vectors()
        .map(|v| {
            let mut terms = Vec::new();
            for (c, name) in v.iter().zip(names) {
                if c.is_zero() {
                    continue;
                }
                let coef = crate::rational::format(c);
                let term = match coef.as_str() {
                    "1" => name.clone(),
                    "-1" => format!("-{name}"),
                    _ => format!("{coef}*{name}"),
                };
                terms.push(term);
            }
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join(" + ").replace("+ -", "- ")
            }
        })
        .collect()
}
