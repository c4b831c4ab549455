//! Hand-checkable algebras and modules, plus seeded random generators for
//! property tests and benchmarks.

use crate::algebra::{LieAlgebra, StructureConstants};
use crate::functional::Functional;
use crate::involution::{swap_matrix, Involution};
use crate::linalg::{coordinates_in, Matrix};
use crate::par;
use crate::rational::{int, Rational};
use crate::split::{split, SplitData};
use crate::weight::ModuleAction;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

fn diag(entries: &[i64]) -> Matrix {
    Matrix::diagonal(&entries.iter().map(|&x| int(x)).collect::<Vec<_>>())
}

fn split_of(l: &LieAlgebra) -> SplitData {
    split(l).expect("fixture algebra is split")
}

fn module(s: SplitData, names: &[&str], rho: Vec<Matrix>) -> ModuleAction {
    ModuleAction::from_matrices(s, names.iter().map(|x| x.to_string()).collect(), rho).expect("fixture module")
}

/// sl₂ on `(e, f, h)` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`, `H = span{h}`.
pub fn sl2() -> LieAlgebra {
    LieAlgebra::from_int_brackets(&["e", "f", "h"], &[(0, 1, &[0, 0, 1]), (2, 0, &[2, 0, 0]), (2, 1, &[0, -2, 0])], &[2])
        .expect("sl2")
}

/// `sl₂ ⊕ sl₂` on `(e1, f1, h1, e2, f2, h2)`.
pub fn sl2_sum() -> LieAlgebra {
    let l = sl2().direct_sum(&sl2());
    let names = ["e1", "f1", "h1", "e2", "f2", "h2"].map(String::from).to_vec();
    LieAlgebra::new(names, l.structure().clone(), l.cartan_indices().to_vec()).expect("sl2 + sl2")
}

/// `span{h, e, f}` with `[h,e] = e`, `[h,f] = -f`, `[e,f] = 0`.
pub fn ef_zero() -> LieAlgebra {
    LieAlgebra::from_int_brackets(&["h", "e", "f"], &[(0, 1, &[0, 1, 0]), (0, 2, &[0, 0, -1])], &[0]).expect("ef_zero")
}

/// `span{h, e}` with `[h,e] = e`.
pub fn borel() -> LieAlgebra {
    LieAlgebra::from_int_brackets(&["h", "e"], &[(0, 1, &[0, 1])], &[0]).expect("borel")
}

/// Abelian algebra of dimension `rank`, all of it Cartan.
pub fn torus(rank: usize) -> LieAlgebra {
    let names: Vec<String> = (1..=rank).map(|i| format!("h{i}")).collect();
    LieAlgebra::new(names, StructureConstants::new(rank), (0..rank).collect()).expect("torus")
}

/// `sl_n` on the matrix units `E_ij` (`i ≠ j`, row-major) followed by
/// `H_i = E_ii - E_{i+1,i+1}`.
pub fn sl_n(n: usize) -> LieAlgebra {
    let (names, mats) = sl_n_basis(n);
    let flat: Vec<Vec<Rational>> = mats.iter().map(|m| m.to_rows().concat()).collect();
    let d = mats.len();
    let mut table = StructureConstants::new(d);
    for i in 0..d {
        for j in i + 1..d {
            let c = mats[i].commutator(&mats[j]).to_rows().concat();
            let coords = coordinates_in(&flat, &c).expect("sl_n is closed");
            table.set(i, j, coords).expect("in range");
        }
    }
    LieAlgebra::new(names, table, (n * n - n..d).collect()).expect("sl_n")
}

fn sl_n_basis(n: usize) -> (Vec<String>, Vec<Matrix>) {
    let mut names = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Matrix::zeros(n, n);
                m.set(i, j, int(1));
                names.push(format!("E{}{}", i + 1, j + 1));
                mats.push(m);
            }
        }
    }
    for i in 0..n - 1 {
        let mut m = Matrix::zeros(n, n);
        m.set(i, i, int(1));
        m.set(i + 1, i + 1, int(-1));
        names.push(format!("H{}", i + 1));
        mats.push(m);
    }
    (names, mats)
}

/// Defining representation of `sl_n` on `ℚⁿ`.
pub fn sl_n_natural(n: usize) -> ModuleAction {
    let (_, mats) = sl_n_basis(n);
    let names: Vec<String> = (1..=n).map(|i| format!("u{i}")).collect();
    ModuleAction::from_matrices(split_of(&sl_n(n)), names, mats).expect("sl_n natural")
}

/// sl₂ on `(x, y)`: `e·y = x`, `f·x = y`, `h·x = x`, `h·y = -y`.
pub fn sl2_natural() -> ModuleAction {
    module(
        split_of(&sl2()),
        &["x", "y"],
        vec![Matrix::from_i64(&[&[0, 1], &[0, 0]]), Matrix::from_i64(&[&[0, 0], &[1, 0]]), diag(&[1, -1])],
    )
}

pub fn adjoint(l: &LieAlgebra) -> ModuleAction {
    let rho = (0..l.dim()).map(|i| l.ad(i).clone()).collect();
    ModuleAction::from_matrices(split_of(l), l.names().to_vec(), rho).expect("adjoint module")
}

pub fn sl2_adjoint() -> ModuleAction {
    adjoint(&sl2())
}

pub fn trivial(l: &LieAlgebra, dim: usize) -> ModuleAction {
    let rho = vec![Matrix::zeros(dim, dim); l.dim()];
    let names = (0..dim).map(|i| format!("t{i}")).collect();
    ModuleAction::from_matrices(split_of(l), names, rho).expect("trivial module")
}

pub fn natural_plus_adjoint() -> ModuleAction {
    sl2_natural().direct_sum(&sl2_adjoint()).expect("same algebra")
}

pub fn natural_plus_natural() -> ModuleAction {
    sl2_natural().direct_sum(&sl2_natural()).expect("same algebra")
}

/// Natural module of each copy of sl₂, summed: `(x1, y1, x2, y2)`.
pub fn sl2_sum_naturals() -> ModuleAction {
    let nat = sl2_natural();
    let zero = Matrix::zeros(2, 2);
    let mut rho = Vec::new();
    for copy in 0..2 {
        for i in 0..3 {
            let (a, b) = if copy == 0 { (nat.rho(i), &zero) } else { (&zero, nat.rho(i)) };
            rho.push(block_diag(a, b));
        }
    }
    module(split_of(&sl2_sum()), &["x1", "y1", "x2", "y2"], rho)
}

/// Adjoint of `sl₂ ⊕ sl₂`, i.e. the sum of the two adjoint modules.
pub fn sl2_sum_adjoint() -> ModuleAction {
    adjoint(&sl2_sum())
}

/// One-dimensional torus on `span{v, w}` with `h·v = v`, `h·w = -w`.
pub fn torus_pair() -> ModuleAction {
    module(split_of(&torus(1)), &["v", "w"], vec![diag(&[1, -1])])
}

/// Swap of the summands of `sl₂ ⊕ sl₂`.
pub fn swap_involution() -> Involution {
    Involution::new(sl2_sum(), swap_matrix(3))
}

fn block_diag(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.rows() + b.rows();
    let mut out = Matrix::zeros(n, n);
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            out.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            out.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
        }
    }
    out
}

/// A fixture by name, for the command line.
#[derive(Debug, Clone)]
pub enum Named {
    Algebra(LieAlgebra),
    Module(ModuleAction),
    Involution(Involution),
}

pub const NAMES: &[&str] = &[
    "sl2",
    "sl2-natural",
    "sl2-adjoint",
    "sl2-trivial",
    "natural-plus-adjoint",
    "natural-plus-natural",
    "sl2sl2",
    "sl2sl2-naturals",
    "sl2sl2-adjoint",
    "torus2",
    "ef-zero",
    "borel",
    "sl3",
    "sl3-natural",
    "swap",
];

pub fn by_name(name: &str) -> Option<Named> {
    Some(match name {
        "sl2" => Named::Algebra(sl2()),
        "sl2-natural" => Named::Module(sl2_natural()),
        "sl2-adjoint" => Named::Module(sl2_adjoint()),
        "sl2-trivial" => Named::Module(trivial(&sl2(), 1)),
        "natural-plus-adjoint" => Named::Module(natural_plus_adjoint()),
        "natural-plus-natural" => Named::Module(natural_plus_natural()),
        "sl2sl2" => Named::Algebra(sl2_sum()),
        "sl2sl2-naturals" => Named::Module(sl2_sum_naturals()),
        "sl2sl2-adjoint" => Named::Module(sl2_sum_adjoint()),
        "torus2" => Named::Module(torus_pair()),
        "ef-zero" => Named::Algebra(ef_zero()),
        "borel" => Named::Algebra(borel()),
        "sl3" => Named::Algebra(sl_n(3)),
        "sl3-natural" => Named::Module(sl_n_natural(3)),
        "swap" => Named::Involution(swap_involution()),
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// Random generators.

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Irreducible sl₂-module of highest weight `k` on `v_0, …, v_k`:
/// `h·v_i = (k-2i) v_i`, `f·v_i = v_{i+1}`, `e·v_i = i(k-i+1) v_{i-1}`.
pub fn sl2_irrep_matrices(k: usize) -> [Matrix; 3] {
    let d = k + 1;
    let mut e = Matrix::zeros(d, d);
    let mut f = Matrix::zeros(d, d);
    let mut h = Matrix::zeros(d, d);
    let k = k as i64;
    for i in 0..d {
        let ii = i as i64;
        h.set(i, i, int(k - 2 * ii));
        if i + 1 < d {
            f.set(i + 1, i, int(1));
        }
        if i > 0 {
            e.set(i - 1, i, int(ii * (k - ii + 1)));
        }
    }
    [e, f, h]
}

pub fn sl2_irrep(k: usize) -> ModuleAction {
    let names: Vec<String> = (0..=k).map(|i| format!("v{i}")).collect();
    ModuleAction::from_matrices(split_of(&sl2()), names, sl2_irrep_matrices(k).to_vec()).expect("sl2 irrep")
}

fn sum_all(parts: Vec<ModuleAction>) -> ModuleAction {
    let mut it = parts.into_iter();
    let first = it.next().expect("at least one summand");
    it.fold(first, |acc, m| acc.direct_sum(&m).expect("same algebra"))
}

/// Highest weights of a random sum of sl₂ irreducibles with total dimension ≤ `max_dim`.
fn random_highest_weights(rng: &mut impl Rng, max_dim: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut used = 0;
    loop {
        let room = max_dim - used;
        if room == 0 || (!out.is_empty() && rng.gen_bool(0.4)) {
            break;
        }
        let k = rng.gen_range(0..room.min(5));
        out.push(k);
        used += k + 1;
    }
    out
}

pub fn random_sl2_module(rng: &mut impl Rng, max_dim: usize) -> ModuleAction {
    sum_all(random_highest_weights(rng, max_dim).into_iter().map(sl2_irrep).collect())
}

/// `V_a ⊗ V_b` over `sl₂ ⊕ sl₂`, the first copy acting on the left factor.
pub fn sl2_sum_tensor(a: usize, b: usize) -> ModuleAction {
    let ra = sl2_irrep_matrices(a);
    let rb = sl2_irrep_matrices(b);
    let (ia, ib) = (Matrix::identity(a + 1), Matrix::identity(b + 1));
    let rho: Vec<Matrix> = ra.iter().map(|m| m.kron(&ib)).chain(rb.iter().map(|m| ia.kron(m))).collect();
    let names = (0..(a + 1) * (b + 1)).map(|i| format!("t{i}")).collect();
    ModuleAction::from_matrices(split_of(&sl2_sum()), names, rho).expect("tensor module")
}

pub fn random_sl2_sum_module(rng: &mut impl Rng, max_dim: usize) -> ModuleAction {
    let mut parts = Vec::new();
    let mut used = 0;
    loop {
        let options: Vec<(usize, usize)> = (0..4)
            .flat_map(|a| (0..4).map(move |b| (a, b)))
            .filter(|(a, b)| used + (a + 1) * (b + 1) <= max_dim)
            .collect();
        if options.is_empty() || (!parts.is_empty() && rng.gen_bool(0.5)) {
            break;
        }
        let &(a, b) = options.choose(rng).expect("nonempty");
        used += (a + 1) * (b + 1);
        parts.push(sl2_sum_tensor(a, b));
    }
    sum_all(parts)
}

/// Diagonal module over a torus of rank 1 or 2 with a symmetric set of integer
/// weights, occasionally with a zero-weight line.
pub fn random_torus_module(rng: &mut impl Rng, max_dim: usize) -> ModuleAction {
    let rank = rng.gen_range(1..=2);
    let mut weights: Vec<Vec<i64>> = Vec::new();
    while weights.len() + 2 <= max_dim && (weights.is_empty() || rng.gen_bool(0.6)) {
        let w: Vec<i64> = loop {
            let w: Vec<i64> = (0..rank).map(|_| rng.gen_range(-3..=3)).collect();
            if w.iter().any(|&x| x != 0) {
                break w;
            }
        };
        weights.push(w.iter().map(|x| -x).collect());
        weights.push(w);
    }
    if weights.len() < max_dim && rng.gen_bool(0.2) {
        weights.push(vec![0; rank]);
    }
    let rho = (0..rank).map(|c| diag(&weights.iter().map(|w| w[c]).collect::<Vec<_>>())).collect();
    let names = (0..weights.len()).map(|i| format!("w{i}")).collect();
    ModuleAction::from_matrices(split_of(&torus(rank)), names, rho).expect("torus module")
}

/// Unimodular integer matrix `L·U` with small entries, and its inverse.
pub fn random_basis_change(rng: &mut impl Rng, n: usize) -> (Matrix, Matrix) {
    let mut lower = Matrix::identity(n);
    let mut upper = Matrix::identity(n);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, int(rng.gen_range(-1..=1)));
            upper.set(j, i, int(rng.gen_range(-1..=1)));
        }
    }
    let p = lower.mul(&upper);
    let inv = p.inverse().expect("unimodular");
    (p, inv)
}

/// A small weight module from one of the sl₂, `sl₂ ⊕ sl₂` or torus families,
/// possibly in a scrambled basis.
pub fn random_module(rng: &mut impl Rng, max_dim: usize) -> ModuleAction {
    let m = match rng.gen_range(0..3) {
        0 => random_sl2_module(rng, max_dim),
        1 => random_sl2_sum_module(rng, max_dim),
        _ => random_torus_module(rng, max_dim),
    };
    if rng.gen_bool(0.5) {
        let (p, inv) = random_basis_change(rng, m.dim());
        m.change_basis(&p, &inv).expect("invertible change of basis")
    } else {
        m
    }
}

/// `count` modules of dimension ≤ 8; entry `i` depends only on `seed + i`.
pub fn random_module_corpus(seed: u64, count: usize) -> Vec<ModuleAction> {
    par::map_range(count, |i| random_module(&mut rng(seed.wrapping_add(i as u64)), 8))
}

fn random_point(rng: &mut impl Rng) -> Functional {
    let r = if rng.gen_bool(0.5) { 2 } else { 5 };
    loop {
        let p = [rng.gen_range(-r..=r), rng.gen_range(-r..=r)];
        if p != [0, 0] {
            return Functional::from_ints(&p);
        }
    }
}

/// Symmetric `Λ, 𝒫 ⊂ ℤ² \ {0}` with `|Λ| ≤ 8`, `|𝒫| ≤ 12`, coordinates in `[-5, 5]`.
pub fn random_symmetric_system(rng: &mut impl Rng) -> (Vec<Functional>, Vec<Functional>) {
    let mut lambda = BTreeSet::new();
    for _ in 0..rng.gen_range(0..=4) {
        let p = random_point(rng);
        lambda.insert(-&p);
        lambda.insert(p);
    }
    let pool: Vec<Functional> = lambda.iter().cloned().collect();
    let mut weights = BTreeSet::new();
    for _ in 0..rng.gen_range(0..=6) {
        let p = match pool.choose(rng) {
            Some(a) if rng.gen_bool(0.3) => a.clone(),
            _ => random_point(rng),
        };
        weights.insert(-&p);
        weights.insert(p);
    }
    (lambda.into_iter().collect(), weights.into_iter().collect())
}

pub fn random_system_corpus(seed: u64, count: usize) -> Vec<(Vec<Functional>, Vec<Functional>)> {
    par::map_range(count, |i| random_symmetric_system(&mut rng(seed.wrapping_add(i as u64))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::weight_decompose;

    #[test]
    fn fixtures_build() {
        for name in NAMES {
            assert!(by_name(name).is_some(), "{name}");
        }
        assert!(by_name("nope").is_none());
        assert_eq!(sl_n(3).dim(), 8);
        assert_eq!(split(&sl_n(3)).unwrap().roots().len(), 6);
        assert_eq!(sl2_sum_naturals().dim(), 4);
    }

    #[test]
    fn irreps_have_expected_weights() {
        for k in 0..5 {
            let w = weight_decompose(&sl2_irrep(k)).unwrap();
            let expected: Vec<Functional> =
                (0..=k as i64).map(|i| Functional::from_ints(&[k as i64 - 2 * i])).filter(|f| !f.is_zero()).rev().collect();
            assert_eq!(w.weight_functionals(), expected);
        }
    }

    #[test]
    fn corpus_is_seeded() {
        let a = random_module_corpus(7, 20);
        let b = random_module_corpus(7, 20);
        assert_eq!(a, b);
        assert!(a.iter().all(|m| m.dim() <= 8 && weight_decompose(m).is_ok()));
        for (l, p) in random_system_corpus(3, 50) {
            assert!(p.len() <= 12 && l.len() <= 8);
            assert!(crate::functional::is_symmetric(&l) && crate::functional::is_symmetric(&p));
        }
    }

    #[test]
    fn basis_change_round_trips() {
        let mut r = rng(1);
        let (p, inv) = random_basis_change(&mut r, 5);
        assert_eq!(p.mul(&inv), Matrix::identity(5));
    }
}
