//! Fixed and anti-fixed parts of an involutive automorphism.
//!
//! For `ξ` on a split algebra `𝔏` with `ξ(H) ⊆ H`, the fixed subalgebra
//! `Sym(𝔏, ξ)` is split with respect to `Sym(H, ξ)` and `Skw(𝔏, ξ)` is a weight
//! module over it under the bracket.

use crate::algebra::{LieAlgebra, StructureConstants};
use crate::error::{Error, Result};
use crate::functional::Functional;
use crate::linalg::{coordinates_in, kernel, Matrix, Subspace};
use crate::par;
use crate::rational::{int, Rational};
use crate::split::split;
use crate::weight::ModuleAction;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    pub ambient: LieAlgebra,
    /// Columns are the images of the basis vectors.
    pub matrix: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongShape { rows: usize, cols: usize, dim: usize },
    NotInvolutive,
    NotAutomorphism { i: usize, j: usize },
    CartanNotStable,
    AmbientNotSplit(Error),
    /// `Π_part(𝔏_root) = 0`, with `Π_0 = (1+ξ)/2` and `Π_1 = (1-ξ)/2`.
    ProjectionVanishes { root: Functional, part: u8 },
}

impl Violation {
    /// `Π_1(H) = 0`: the only failure that leaves the construction usable,
    /// with an empty zero-weight space.
    pub fn is_zero_root_skew_case(&self) -> bool {
        matches!(self, Violation::ProjectionVanishes { root, part: 1 } if root.is_zero())
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongShape { rows, cols, dim } => write!(f, "xi is {rows}x{cols}, algebra has dim {dim}"),
            Violation::NotInvolutive => write!(f, "xi^2 is not the identity"),
            Violation::NotAutomorphism { i, j } => write!(f, "xi[e{i}, e{j}] != [xi e{i}, xi e{j}]"),
            Violation::CartanNotStable => write!(f, "xi does not map H into H"),
            Violation::AmbientNotSplit(e) => write!(f, "ambient algebra is not split: {e}"),
            Violation::ProjectionVanishes { root, part: 1 } if root.is_zero() => {
                write!(f, "Pi_1(H) = 0 (zero root, skew part; degenerate case)")
            }
            Violation::ProjectionVanishes { root, part } => write!(f, "Pi_{part}(L_{root}) = 0"),
        }
    }
}

impl Involution {
    pub fn new(ambient: LieAlgebra, matrix: Matrix) -> Self {
        Involution { ambient, matrix }
    }

    fn image(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    /// All violated conditions; empty when `ξ` is a valid input for [`Involution::build`].
    pub fn validate(&self) -> Vec<Violation> {
        let n = self.ambient.dim();
        if self.matrix.rows() != n || self.matrix.cols() != n {
            return vec![Violation::WrongShape { rows: self.matrix.rows(), cols: self.matrix.cols(), dim: n }];
        }
        let mut out = Vec::new();
        if self.matrix.mul(&self.matrix) != Matrix::identity(n) {
            out.push(Violation::NotInvolutive);
        }
        let columns: Vec<Vec<Rational>> = (0..n).map(|j| self.matrix.column(j)).collect();
        let bad = par::find_first(n, |i| {
            (i + 1..n).find_map(|j| {
                let lhs = self.image(&self.ambient.structure().basis_bracket(i, j));
                let rhs = self.ambient.bracket_unchecked(&columns[i], &columns[j]);
                (lhs != rhs).then_some(Violation::NotAutomorphism { i, j })
            })
        });
        out.extend(bad);
        let h = self.ambient.cartan();
        if !h.includes(&h.image(&self.matrix)) {
            out.push(Violation::CartanNotStable);
        }
        match split(&self.ambient) {
            Err(e) => out.push(Violation::AmbientNotSplit(e)),
            Ok(s) => {
                let plus = self.matrix.add(&Matrix::identity(n));
                let minus = Matrix::identity(n).sub(&self.matrix);
                let zero = Functional::zero(s.rank());
                let spaces = std::iter::once((zero, s.cartan().clone())).chain(s.roots().iter().cloned());
                for (root, space) in spaces {
                    for (part, proj) in [(0u8, &plus), (1u8, &minus)] {
                        if space.image(proj).is_zero() {
                            out.push(Violation::ProjectionVanishes { root: root.clone(), part });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    /// `Sym(𝔏, ξ)`.
    pub fn sym(&self) -> Subspace {
        kernel(&self.matrix.sub(&Matrix::identity(self.ambient.dim())))
    }

    /// `Skw(𝔏, ξ)`.
    pub fn skw(&self) -> Subspace {
        kernel(&self.matrix.add(&Matrix::identity(self.ambient.dim())))
    }

    /// Builds `(Sym(𝔏, ξ), Skw(𝔏, ξ))`. The algebra basis starts with a basis of
    /// `Sym(H, ξ)` (its Cartan part); both bases are recorded as ambient vectors.
    pub fn build(&self) -> Result<Built> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(Error::ValidationFailed(violations));
        }
        let n = self.ambient.dim();
        let sym = self.sym();
        let skw = self.skw();
        let sym_h = sym.meet(&self.ambient.cartan());
        let rest = sym_h.complement_within(&sym);
        let sym_basis: Vec<Vec<Rational>> = sym_h.basis_vectors().chain(rest.basis_vectors()).map(<[_]>::to_vec).collect();
        let skw_basis: Vec<Vec<Rational>> = skw.basis_vectors().map(<[_]>::to_vec).collect();
        let d = sym_basis.len();
        let m = skw_basis.len();
        debug_assert_eq!(d + m, n);

        let express = |basis: &[Vec<Rational>], v: &[Rational]| {
            coordinates_in(basis, v).ok_or_else(|| Error::InvalidStructure("bracket leaves the eigenspace".into()))
        };
        let mut table = StructureConstants::new(d);
        for i in 0..d {
            for j in i + 1..d {
                let v = self.ambient.bracket_unchecked(&sym_basis[i], &sym_basis[j]);
                table.set(i, j, express(&sym_basis, &v)?)?;
            }
        }
        let names: Vec<String> = (0..d).map(|i| format!("sym{i}")).collect();
        let algebra = LieAlgebra::new(names, table, (0..sym_h.dim()).collect())?;
        let split_data = split(&algebra)?;

        let mut rho = Vec::with_capacity(d);
        for x in &sym_basis {
            let mut cols = Vec::with_capacity(m);
            for y in &skw_basis {
                cols.push(express(&skw_basis, &self.ambient.bracket_unchecked(x, y))?);
            }
            rho.push(Matrix::from_columns(m, &cols)?);
        }
        let module_names = (0..m).map(|a| format!("skw{a}")).collect();
        let module = ModuleAction::from_matrices(split_data, module_names, rho)?;
        Ok(Built { algebra, module, sym_basis, skw_basis })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Built {
    pub algebra: LieAlgebra,
    pub module: ModuleAction,
    /// Ambient coordinates of the algebra basis.
    pub sym_basis: Vec<Vec<Rational>>,
    /// Ambient coordinates of the module basis.
    pub skw_basis: Vec<Vec<Rational>>,
}

/// `ξ` swapping the two summands of `L ⊕ L`.
pub fn swap_matrix(dim: usize) -> Matrix {
    let mut m = Matrix::zeros(2 * dim, 2 * dim);
    for i in 0..dim {
        m.set(i + dim, i, int(1));
        m.set(i, i + dim, int(1));
    }
    m
}
