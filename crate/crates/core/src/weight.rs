//! Modules over a split Lie algebra and their weight decomposition.

use crate::error::{Error, Result};
use crate::functional::{self, Functional};
use crate::linalg::{joint_eigenspaces, joint_kernel, Matrix, Subspace};
use crate::par;
use crate::rational::Rational;
use crate::split::SplitData;
use num_traits::Zero;
use std::collections::BTreeMap;

/// A representation of a split Lie algebra on `ℚ^dim`.
///
/// `rho(i)` is the matrix of `e_i`; its column `a` is `e_i · v_a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleAction {
    split: SplitData,
    names: Vec<String>,
    rho: Vec<Matrix>,
}

impl ModuleAction {
    /// Builds from sparse action constants `(i, a) ↦ e_i · v_a`; absent keys act
    /// as zero. The module axiom `[x, y]·v = x·(y·v) - y·(x·v)` is checked on
    /// every basis pair.
    pub fn new(split: SplitData, names: Vec<String>, action: &BTreeMap<(usize, usize), Vec<Rational>>) -> Result<Self> {
        let m = names.len();
        let n = split.algebra().dim();
        let mut rho = vec![Matrix::zeros(m, m); n];
        for (&(i, a), v) in action {
            if i >= n || a >= m {
                return Err(Error::InvalidStructure(format!("action index ({i}, {a}) out of range")));
            }
            if v.len() != m {
                return Err(Error::DimensionMismatch { expected: m, found: v.len() });
            }
            for (r, x) in v.iter().enumerate() {
                rho[i].set(r, a, x.clone());
            }
        }
        ModuleAction::from_matrices(split, names, rho)
    }

    pub fn from_matrices(split: SplitData, names: Vec<String>, rho: Vec<Matrix>) -> Result<Self> {
        let m = names.len();
        let n = split.algebra().dim();
        if rho.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: rho.len() });
        }
        for r in &rho {
            if r.rows() != m || r.cols() != m {
                return Err(Error::DimensionMismatch { expected: m, found: r.rows().max(r.cols()) });
            }
        }
        let module = ModuleAction { split, names, rho };
        if let Some((pair, vector)) = module.axiom_violation() {
            return Err(Error::ModuleAxiomViolation { pair, vector });
        }
        Ok(module)
    }

    fn axiom_violation(&self) -> Option<((usize, usize), usize)> {
        let n = self.split.algebra().dim();
        par::find_first(n, |i| {
            for j in i + 1..n {
                let lhs = self.rho_of(&self.split.algebra().structure().basis_bracket(i, j));
                let rhs = self.rho[i].commutator(&self.rho[j]);
                if lhs != rhs {
                    let a = (0..self.dim()).find(|&a| lhs.column(a) != rhs.column(a)).unwrap_or(0);
                    return Some(((i, j), a));
                }
            }
            None
        })
    }

    pub fn split(&self) -> &SplitData {
        &self.split
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.rho
    }

    /// Nonzero action constants keyed by `(algebra index, module index)`.
    pub fn action_entries(&self) -> BTreeMap<(usize, usize), Vec<Rational>> {
        let mut out = BTreeMap::new();
        for (i, r) in self.rho.iter().enumerate() {
            for a in 0..self.dim() {
                let col = r.column(a);
                if col.iter().any(|x| !x.is_zero()) {
                    out.insert((i, a), col);
                }
            }
        }
        out
    }

    /// Matrix of an arbitrary algebra element.
    pub fn rho_of(&self, x: &[Rational]) -> Matrix {
        let m = self.dim();
        let mut out = Matrix::zeros(m, m);
        for (c, r) in x.iter().zip(&self.rho) {
            if !c.is_zero() {
                out = out.add(&r.scale(c));
            }
        }
        out
    }

    pub fn act(&self, x: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.split.algebra().dim();
        if x.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: x.len() });
        }
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: v.len() });
        }
        Ok(self.rho_of(x).mul_vec(v))
    }

    /// `span{x · v : x ∈ A, v ∈ W}` for `A ⊆ L`, `W ⊆ V`.
    pub fn act_spaces(&self, a: &Subspace, w: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in a.basis_vectors() {
            let r = self.rho_of(x);
            vs.extend(w.basis_vectors().map(|v| r.mul_vec(v)));
        }
        Subspace::span(self.dim(), vs)
    }

    /// `𝒵(V) = {v : L v = 0}`.
    pub fn module_center(&self) -> Subspace {
        let ms: Vec<&Matrix> = self.rho.iter().collect();
        joint_kernel(self.dim(), &ms)
    }

    /// `LV = V`.
    pub fn lv_equals_v(&self) -> bool {
        let mut cols = Vec::new();
        for r in &self.rho {
            cols.extend((0..self.dim()).map(|a| r.column(a)));
        }
        Subspace::span(self.dim(), cols).is_full()
    }

    /// `[x]·S ⊆ S` for every basis element `x` of `L`.
    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim()
            && self.rho.iter().all(|r| s.basis_vectors().all(|v| s.contains_vector(&r.mul_vec(v))))
    }

    /// Direct sum of two modules over the same algebra.
    pub fn direct_sum(&self, other: &ModuleAction) -> Result<ModuleAction> {
        if self.split != other.split {
            return Err(Error::MismatchedAlgebra);
        }
        let (m1, m2) = (self.dim(), other.dim());
        let rho = self
            .rho
            .iter()
            .zip(&other.rho)
            .map(|(a, b)| {
                let mut out = Matrix::zeros(m1 + m2, m1 + m2);
                for i in 0..m1 {
                    for j in 0..m1 {
                        out.set(i, j, a.get(i, j).clone());
                    }
                }
                for i in 0..m2 {
                    for j in 0..m2 {
                        out.set(m1 + i, m1 + j, b.get(i, j).clone());
                    }
                }
                out
            })
            .collect();
        let names = self.names.iter().chain(&other.names).cloned().collect();
        ModuleAction::from_matrices(self.split.clone(), names, rho)
    }

    /// Same module in the basis given by the columns of `p`; `p_inv` must be
    /// its inverse.
    pub fn change_basis(&self, p: &Matrix, p_inv: &Matrix) -> Result<ModuleAction> {
        if p.mul(p_inv) != Matrix::identity(self.dim()) {
            return Err(Error::InvalidStructure("change of basis is not invertible".into()));
        }
        let rho = self.rho.iter().map(|r| p_inv.mul(r).mul(p)).collect();
        ModuleAction::from_matrices(self.split.clone(), self.names.clone(), rho)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightData {
    module: ModuleAction,
    weights: Vec<(Functional, Subspace)>,
    zero_space: Subspace,
}

/// Joint eigenspace decomposition of the Cartan action.
pub fn weight_decompose(module: &ModuleAction) -> Result<WeightData> {
    let m = module.dim();
    let cartan: Vec<Matrix> =
        module.split().algebra().cartan_indices().iter().map(|&i| module.rho(i).clone()).collect();
    let parts = joint_eigenspaces(&cartan).map_err(|e| match e {
        Error::NotSplitOverField | Error::NonCommuting { .. } => Error::NotWeightModule,
        other => other,
    })?;
    let mut zero_space = Subspace::zero(m);
    let mut weights = Vec::new();
    for (f, space) in parts {
        if f.is_zero() {
            zero_space = space;
        } else {
            weights.push((f, space));
        }
    }
    Ok(WeightData { module: module.clone(), weights, zero_space })
}

/// Outcome of the weight-multiplicativity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Multiplicativity {
    pub holds: bool,
    /// Whether `V_0 = Σ L_{-β} V_β`, which switches on the second condition.
    pub zero_space_generated: bool,
}

impl WeightData {
    pub fn module(&self) -> &ModuleAction {
        &self.module
    }

    pub fn split(&self) -> &SplitData {
        self.module.split()
    }

    /// Nonzero weights with their weight spaces, sorted lexicographically.
    pub fn weights(&self) -> &[(Functional, Subspace)] {
        &self.weights
    }

    pub fn weight_functionals(&self) -> Vec<Functional> {
        self.weights.iter().map(|(f, _)| f.clone()).collect()
    }

    pub fn zero_space(&self) -> &Subspace {
        &self.zero_space
    }

    /// `V_f`: `V_0` for the zero functional, the zero subspace off `𝒫 ∪ {0}`.
    pub fn weight_space(&self, f: &Functional) -> Subspace {
        if f.is_zero() {
            return self.zero_space.clone();
        }
        self.weights
            .binary_search_by(|(g, _)| g.cmp(f))
            .map(|i| self.weights[i].1.clone())
            .unwrap_or_else(|_| Subspace::zero(self.module.dim()))
    }

    pub fn is_weight(&self, f: &Functional) -> bool {
        self.weights.binary_search_by(|(g, _)| g.cmp(f)).is_ok()
    }

    pub fn is_symmetric_weights(&self) -> bool {
        functional::is_symmetric(self.weights.iter().map(|(f, _)| f))
    }

    /// Both `Λ` and `𝒫` symmetric (and zero-free).
    pub fn check_symmetric(&self) -> Result<()> {
        self.split().check_symmetric()?;
        functional::check_system(&self.weight_functionals(), "weight system", Some(self.split().rank()))
    }

    /// `L_α V_γ`.
    pub fn product(&self, root: &Functional, weight: &Functional) -> Subspace {
        self.module.act_spaces(&self.split().root_space(root), &self.weight_space(weight))
    }

    /// `Σ_{α ∈ Λ ∩ 𝒫} L_{-α} V_α`, a subspace of `V_0`.
    pub fn generated_zero_part(&self) -> Subspace {
        let parts: Vec<Subspace> = self
            .weights
            .iter()
            .filter(|(a, _)| self.split().is_root(a))
            .map(|(a, va)| self.module.act_spaces(&self.split().root_space(&-a), va))
            .collect();
        Subspace::sum_all(self.module.dim(), &parts)
    }

    pub fn zero_space_generated(&self) -> bool {
        self.generated_zero_part() == self.zero_space
    }

    pub fn is_completely_pointed(&self) -> bool {
        self.weights.iter().all(|(_, s)| s.dim() == 1)
    }

    pub fn is_weight_multiplicative(&self) -> bool {
        self.weight_multiplicativity().holds
    }

    /// (a) `L_α V_γ ≠ 0` whenever `α ∈ Λ`, `γ, α+γ ∈ 𝒫`; and (b), only when
    /// `V_0 = Σ L_{-β} V_β`, for each `β ∈ Λ ∩ 𝒫`:
    /// `L_β(L_{-β}V_β) ≠ 0 ⇒ L_{-β}(L_β V_{-β}) ≠ 0`.
    pub fn weight_multiplicativity(&self) -> Multiplicativity {
        let split = self.split();
        let mut holds = true;
        'outer: for (alpha, la) in split.roots() {
            for (gamma, vg) in &self.weights {
                if self.is_weight(&(alpha + gamma)) && self.module.act_spaces(la, vg).is_zero() {
                    holds = false;
                    break 'outer;
                }
            }
        }
        let zero_space_generated = self.zero_space_generated();
        if holds && zero_space_generated {
            for (beta, vb) in &self.weights {
                if !split.is_root(beta) {
                    continue;
                }
                let lb = split.root_space(beta);
                let lmb = split.root_space(&-beta);
                let forward = self.module.act_spaces(&lb, &self.module.act_spaces(&lmb, vb));
                if forward.is_zero() {
                    continue;
                }
                let back = self.module.act_spaces(&lmb, &self.module.act_spaces(&lb, &self.weight_space(&-beta)));
                if back.is_zero() {
                    holds = false;
                    break;
                }
            }
        }
        Multiplicativity { holds, zero_space_generated }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LieAlgebra;
    use crate::rational::int;
    use crate::split::split;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    fn sl2() -> SplitData {
        split(
            &LieAlgebra::from_int_brackets(
                &["e", "f", "h"],
                &[(0, 1, &[0, 0, 1]), (2, 0, &[2, 0, 0]), (2, 1, &[0, -2, 0])],
                &[2],
            )
            .unwrap(),
        )
        .unwrap()
    }

    /// Basis x, y: e·y = x, f·x = y, h·x = x, h·y = -y.
    fn natural() -> ModuleAction {
        let mut action = BTreeMap::new();
        action.insert((0, 1), ints(&[1, 0]));
        action.insert((1, 0), ints(&[0, 1]));
        action.insert((2, 0), ints(&[1, 0]));
        action.insert((2, 1), ints(&[0, -1]));
        ModuleAction::new(sl2(), vec!["x".into(), "y".into()], &action).unwrap()
    }

    fn adjoint() -> ModuleAction {
        let s = sl2();
        let rho = (0..3).map(|i| s.algebra().ad(i).clone()).collect();
        ModuleAction::from_matrices(s, vec!["e".into(), "f".into(), "h".into()], rho).unwrap()
    }

    #[test]
    fn act_examples() {
        let v = natural();
        assert_eq!(v.act(&ints(&[0, 0, 1]), &ints(&[1, 0])).unwrap(), ints(&[1, 0]));
        assert_eq!(v.act(&ints(&[1, 0, 0]), &ints(&[0, 1])).unwrap(), ints(&[1, 0]));
        assert_eq!(v.act(&ints(&[0, 1, 0]), &ints(&[1, 1])).unwrap(), ints(&[0, 1]));
        assert!(v.act(&ints(&[0, 1]), &ints(&[1, 1])).is_err());
    }

    #[test]
    fn axiom_is_enforced() {
        let mut action = BTreeMap::new();
        // h acts as 1 on x but e·y = x is missing its partner f·x = y: [e,f]=h fails.
        action.insert((0, 1), ints(&[1, 0]));
        action.insert((2, 0), ints(&[1, 0]));
        action.insert((2, 1), ints(&[0, -1]));
        let err = ModuleAction::new(sl2(), vec!["x".into(), "y".into()], &action).unwrap_err();
        assert!(matches!(err, Error::ModuleAxiomViolation { pair: (0, 1), .. }));
    }

    #[test]
    fn weight_decompositions() {
        let adj = weight_decompose(&adjoint()).unwrap();
        assert_eq!(adj.weight_functionals(), vec![Functional::from_ints(&[-2]), Functional::from_ints(&[2])]);
        assert_eq!(adj.zero_space(), &Subspace::coordinate(3, &[2]));

        let nat = weight_decompose(&natural()).unwrap();
        assert_eq!(nat.weight_functionals(), vec![Functional::from_ints(&[-1]), Functional::from_ints(&[1])]);
        assert!(nat.zero_space().is_zero());

        let sum = weight_decompose(&natural().direct_sum(&adjoint()).unwrap()).unwrap();
        let p: Vec<String> = sum.weight_functionals().iter().map(|f| f.to_string()).collect();
        assert_eq!(p, ["(-2)", "(-1)", "(1)", "(2)"]);
        assert_eq!(sum.zero_space(), &Subspace::coordinate(5, &[4]));
    }

    #[test]
    fn non_weight_module() {
        let t = split(&LieAlgebra::from_int_brackets(&["h"], &[], &[0]).unwrap()).unwrap();
        let m = ModuleAction::from_matrices(t, vec!["a".into(), "b".into()], vec![Matrix::from_i64(&[&[0, 1], &[0, 0]])])
            .unwrap();
        assert_eq!(weight_decompose(&m), Err(Error::NotWeightModule));
    }

    #[test]
    fn centers_and_lv() {
        assert!(natural().module_center().is_zero());
        assert!(adjoint().module_center().is_zero());
        let trivial = ModuleAction::from_matrices(sl2(), vec!["t".into()], vec![Matrix::zeros(1, 1); 3]).unwrap();
        assert!(trivial.module_center().is_full());
        assert!(!trivial.lv_equals_v());
        assert!(natural().lv_equals_v());
    }

    #[test]
    fn pointed_and_multiplicative() {
        let nat = weight_decompose(&natural()).unwrap();
        assert!(nat.is_completely_pointed());
        assert!(nat.is_weight_multiplicative());
        let adj = weight_decompose(&adjoint()).unwrap();
        assert!(adj.is_completely_pointed());
        let mult = adj.weight_multiplicativity();
        assert!(mult.holds && mult.zero_space_generated);
        let double = weight_decompose(&natural().direct_sum(&natural()).unwrap()).unwrap();
        assert!(!double.is_completely_pointed());
    }

    #[test]
    fn weight_shift_law_on_adjoint() {
        let w = weight_decompose(&natural().direct_sum(&adjoint()).unwrap()).unwrap();
        let s = w.split();
        let mut roots = s.root_functionals();
        roots.push(Functional::zero(1));
        let mut weights = w.weight_functionals();
        weights.push(Functional::zero(1));
        for a in &roots {
            for g in &weights {
                let target = w.weight_space(&(a + g));
                assert!(target.includes(&w.product(a, g)), "L_{a} V_{g} escapes");
            }
        }
        // H·V_0 = 0
        assert!(w.product(&Functional::zero(1), &Functional::zero(1)).is_zero());
    }
}
