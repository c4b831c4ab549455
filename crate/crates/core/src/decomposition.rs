//! Submodules and ideals attached to connection classes, the direct-sum and
//! pairing checks built on them, and the simple-component analysis for
//! completely pointed modules.
//!
//! Conclusions are never assumed. Each result records which hypotheses held
//! and a list of [`Check`]s; a failed check under satisfied hypotheses is a
//! theorem-check failure.

use crate::algebra::LieAlgebra;
use crate::connections::{connect_roots, connect_weights, Partition};
use crate::error::{Error, Result};
use crate::functional::{check_system, Functional};
use crate::linalg::Subspace;
use crate::par;
use crate::split::SplitData;
use crate::weight::{ModuleAction, WeightData};
use serde::Serialize;
use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub claim: String,
    pub passed: bool,
}

impl Check {
    fn new(claim: &str, passed: bool) -> Self {
        Check { claim: claim.to_string(), passed }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Piece {
    pub class: Vec<Functional>,
    pub space: Subspace,
}

// ---------------------------------------------------------------------------
// Modules.

/// `V_{𝒫_γ} = Σ_{α ∈ Λ ∩ cls} L_{-α} V_α + Σ_{δ ∈ cls} V_δ`.
pub fn submodule_for_class(w: &WeightData, class: &[Functional]) -> Subspace {
    let m = w.module().dim();
    let mut parts: Vec<Subspace> = class.iter().map(|d| w.weight_space(d)).collect();
    for a in class {
        if w.split().is_root(a) {
            parts.push(w.module().act_spaces(&w.split().root_space(&-a), &w.weight_space(a)));
        }
    }
    Subspace::sum_all(m, &parts)
}

pub fn is_submodule(module: &ModuleAction, s: &Subspace) -> bool {
    module.is_submodule(s)
}

/// Least submodule containing `seed`: `S ← S + L·S` until it stops growing.
pub fn submodule_closure(module: &ModuleAction, seed: &Subspace) -> Subspace {
    let mut current = seed.clone();
    loop {
        let images = module
            .matrices()
            .iter()
            .flat_map(|r| current.basis_vectors().map(move |v| r.mul_vec(v)))
            .collect::<Vec<_>>();
        let next = current.plus(&Subspace::span(module.dim(), images));
        if next.dim() == current.dim() {
            return current;
        }
        current = next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ModuleHypotheses {
    pub lv_equals_v: bool,
    pub center_zero: bool,
}

impl ModuleHypotheses {
    pub fn hold(&self) -> bool {
        self.lv_equals_v && self.center_zero
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleDecomposition {
    pub classes: Partition,
    pub pieces: Vec<Piece>,
    /// `Σ_{α ∈ Λ ∩ 𝒫} L_{-α} V_α`.
    pub generated_zero_part: Subspace,
    /// Complement of `generated_zero_part` in `V_0`.
    pub complement: Subspace,
    pub direct: bool,
    pub hypotheses: ModuleHypotheses,
    pub checks: Vec<Check>,
}

pub fn decompose_module(w: &WeightData) -> Result<ModuleDecomposition> {
    w.check_symmetric()?;
    let module = w.module();
    let m = module.dim();
    let classes = connect_weights(&w.split().root_functionals(), &w.weight_functionals())?;
    let pieces: Vec<Piece> = par::map(classes.classes(), |c| Piece { class: c.clone(), space: submodule_for_class(w, c) });
    let generated_zero_part = w.generated_zero_part();
    let complement = generated_zero_part.complement_within(w.zero_space());
    let mut family: Vec<&Subspace> = pieces.iter().map(|p| &p.space).collect();
    family.push(&complement);
    let direct = Subspace::independent(m, family.iter().copied()) && Subspace::sum_all(m, family).is_full();
    let hypotheses = ModuleHypotheses { lv_equals_v: module.lv_equals_v(), center_zero: module.module_center().is_zero() };

    let mut checks = vec![Check::new("class-submodules", pieces.iter().all(|p| module.is_submodule(&p.space)))];
    if hypotheses.hold() {
        checks.push(Check::new("module-direct-sum", direct && complement.is_zero()));
    }
    Ok(ModuleDecomposition { classes, pieces, generated_zero_part, complement, direct, hypotheses, checks })
}

// ---------------------------------------------------------------------------
// Algebras.

/// `H_cls + N_cls` with `H_cls = span{[L_β, L_{-β}] : β ∈ cls}` and
/// `N_cls = Σ_{β ∈ cls} L_β`.
pub fn ideal_for_class(split: &SplitData, class: &[Functional]) -> Subspace {
    let l = split.algebra();
    let mut parts = Vec::with_capacity(2 * class.len());
    for b in class {
        let lb = split.root_space(b);
        parts.push(l.bracket_spaces(&lb, &split.root_space(&-b)));
        parts.push(lb);
    }
    Subspace::sum_all(l.dim(), &parts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgebraHypotheses {
    pub center_zero: bool,
    /// `H = Σ_α [L_α, L_{-α}]`.
    pub cartan_generated: bool,
}

impl AlgebraHypotheses {
    pub fn hold(&self) -> bool {
        self.center_zero && self.cartan_generated
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraDecomposition {
    pub algebra: LieAlgebra,
    /// The weight system the root connections were allowed to pass through.
    pub weights_used: Vec<Functional>,
    pub classes: Partition,
    pub pieces: Vec<Piece>,
    pub coroot_span: Subspace,
    /// Complement of `coroot_span` in `H`.
    pub complement: Subspace,
    pub direct: bool,
    pub pairwise_commuting: bool,
    pub hypotheses: AlgebraHypotheses,
    pub checks: Vec<Check>,
}

/// Decomposition of `L` viewed as a weight module over itself (`𝒫 = Λ`).
pub fn decompose_algebra(split: &SplitData) -> Result<AlgebraDecomposition> {
    decompose_algebra_with_weights(split, &split.root_functionals())
}

/// Decomposition of `L` with root connections routed through `Λ ∪ 𝒫`.
pub fn decompose_algebra_with_weights(split: &SplitData, weights: &[Functional]) -> Result<AlgebraDecomposition> {
    split.check_symmetric()?;
    check_system(weights, "weight system", Some(split.rank()))?;
    let l = split.algebra();
    let n = l.dim();
    let classes = connect_roots(&split.root_functionals(), weights)?;
    let pieces: Vec<Piece> = par::map(classes.classes(), |c| Piece { class: c.clone(), space: ideal_for_class(split, c) });
    let coroot_span = split.coroot_span();
    let complement = coroot_span.complement_within(split.cartan());
    let mut family: Vec<&Subspace> = pieces.iter().map(|p| &p.space).collect();
    family.push(&complement);
    let direct = Subspace::independent(n, family.iter().copied()) && Subspace::sum_all(n, family).is_full();
    let pairwise_commuting = pieces
        .iter()
        .enumerate()
        .all(|(i, a)| pieces[i + 1..].iter().all(|b| l.bracket_spaces(&a.space, &b.space).is_zero()));
    let hypotheses = AlgebraHypotheses { center_zero: l.center().is_zero(), cartan_generated: coroot_span == *split.cartan() };

    let mut checks = vec![
        Check::new("class-ideals", pieces.iter().all(|p| l.is_ideal(&p.space))),
        Check::new("ideals-commute", pairwise_commuting),
    ];
    if hypotheses.hold() {
        checks.push(Check::new("algebra-direct-sum", direct && complement.is_zero()));
    }
    Ok(AlgebraDecomposition {
        algebra: l.clone(),
        weights_used: weights.to_vec(),
        classes,
        pieces,
        coroot_span,
        complement,
        direct,
        pairwise_commuting,
        hypotheses,
        checks,
    })
}

// ---------------------------------------------------------------------------
// Pairing of module pieces with ideals.

/// Evidence that ideal `ideal` acts nontrivially on a module piece: the root
/// space `L_root` (or, for `root = None`, the Cartan part of the ideal) sends
/// the piece's share of `V_weight` to a subspace of dimension `image_dim > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub ideal: usize,
    pub root: Option<Functional>,
    pub weight: Functional,
    pub image_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEntry {
    pub module_piece: usize,
    /// Ideals `i` with `I_i V_j ≠ 0`.
    pub candidates: Vec<usize>,
    pub witnesses: Vec<Witness>,
    /// `V_j` is stable under the ideal and graded by the weight spaces of `V`;
    /// only evaluated when there is exactly one candidate.
    pub weight_module_over_ideal: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PairingHypotheses {
    pub algebra_perfect: bool,
    pub lv_equals_v: bool,
    pub center_zero: bool,
}

impl PairingHypotheses {
    pub fn hold(&self) -> bool {
        self.algebra_perfect && self.lv_equals_v && self.center_zero
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pairing {
    pub entries: Vec<PairEntry>,
    pub hypotheses: PairingHypotheses,
    pub checks: Vec<Check>,
}

impl Pairing {
    /// Module piece → ideal, for pieces with a unique candidate.
    pub fn map(&self) -> Vec<Option<usize>> {
        self.entries
            .iter()
            .map(|e| if e.candidates.len() == 1 { Some(e.candidates[0]) } else { None })
            .collect()
    }

    pub fn is_total_and_single_valued(&self) -> bool {
        self.entries.iter().all(|e| e.candidates.len() == 1)
    }
}

pub fn pair(algebra: &AlgebraDecomposition, module: &ModuleDecomposition, w: &WeightData) -> Result<Pairing> {
    let split = w.split();
    if algebra.algebra != *split.algebra() {
        return Err(Error::MismatchedAlgebra);
    }
    let action = w.module();
    let hypotheses = PairingHypotheses {
        algebra_perfect: split.algebra().is_perfect(),
        lv_equals_v: module.hypotheses.lv_equals_v,
        center_zero: module.hypotheses.center_zero,
    };
    let entries: Vec<PairEntry> = par::map(&module.pieces.iter().enumerate().collect::<Vec<_>>(), |&(j, vj)| {
        let candidates: Vec<usize> = algebra
            .pieces
            .iter()
            .enumerate()
            .filter(|(_, ii)| !action.act_spaces(&ii.space, &vj.space).is_zero())
            .map(|(i, _)| i)
            .collect();
        let witnesses = candidates.iter().filter_map(|&i| witness(w, &algebra.pieces[i], i, vj)).collect();
        let weight_module_over_ideal = (candidates.len() == 1).then(|| {
            let ideal = &algebra.pieces[candidates[0]].space;
            let stable = action.act_spaces(ideal, &vj.space).plus(&vj.space) == vj.space;
            let graded: usize = std::iter::once(w.zero_space())
                .chain(w.weights().iter().map(|(_, s)| s))
                .map(|s| s.meet(&vj.space).dim())
                .sum();
            stable && graded == vj.space.dim()
        });
        PairEntry { module_piece: j, candidates, witnesses, weight_module_over_ideal }
    });
    let mut checks = Vec::new();
    if hypotheses.hold() {
        checks.push(Check::new("unique-ideal-per-piece", entries.iter().all(|e| e.candidates.len() == 1)));
        checks.push(Check::new(
            "piece-is-weight-module-over-ideal",
            entries.iter().all(|e| e.weight_module_over_ideal == Some(true)),
        ));
    }
    Ok(Pairing { entries, hypotheses, checks })
}

fn witness(w: &WeightData, ideal: &Piece, index: usize, piece: &Piece) -> Option<Witness> {
    let action = w.module();
    let split = w.split();
    let cartan_part = ideal.space.meet(split.cartan());
    let mut weights: Vec<Functional> = vec![Functional::zero(split.rank())];
    weights.extend(piece.class.iter().cloned());
    let mut sources: Vec<(Option<Functional>, Subspace)> =
        ideal.class.iter().map(|a| (Some(a.clone()), split.root_space(a))).collect();
    sources.push((None, cartan_part));
    for (root, space) in &sources {
        for g in &weights {
            let share = w.weight_space(g).meet(&piece.space);
            let image = action.act_spaces(space, &share);
            if !image.is_zero() {
                return Some(Witness { ideal: index, root: root.clone(), weight: g.clone(), image_dim: image.dim() });
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Simple components.

/// Distinct minimal members of `{closure(V_γ) : γ ∈ 𝒫}`. Requires a completely
/// pointed module with trivial center, where every nonzero submodule contains
/// some `V_γ`.
pub fn minimal_weight_submodules(w: &WeightData) -> Result<Vec<Subspace>> {
    if !w.is_completely_pointed() {
        return Err(Error::PreconditionFailed("completely pointed"));
    }
    if !w.module().module_center().is_zero() {
        return Err(Error::PreconditionFailed("trivial module center"));
    }
    let closures: Vec<Subspace> = par::map(w.weights(), |(_, s)| submodule_closure(w.module(), s));
    let mut distinct: Vec<Subspace> = Vec::new();
    for c in closures {
        if !distinct.contains(&c) {
            distinct.push(c);
        }
    }
    let minimal = distinct
        .iter()
        .filter(|c| !distinct.iter().any(|d| d != *c && c.includes(d)))
        .cloned()
        .collect();
    Ok(minimal)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Simple,
    SplitPair,
    OutOfHypotheses,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Simple => "SIMPLE",
            Verdict::SplitPair => "SPLIT_PAIR",
            Verdict::OutOfHypotheses => "OUT_OF_HYPOTHESES",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SimplicityFlags {
    pub completely_pointed: bool,
    pub weight_multiplicative: bool,
    pub center_zero: bool,
    pub all_weights_connected: bool,
    pub zero_space_generated: bool,
    pub lv_equals_v: bool,
}

impl SimplicityFlags {
    /// Hypotheses of the simple-or-split-pair dichotomy.
    pub fn dichotomy(&self) -> bool {
        self.completely_pointed
            && self.weight_multiplicative
            && self.center_zero
            && self.all_weights_connected
            && self.zero_space_generated
    }

    /// Hypotheses of the minimal-submodule decomposition.
    pub fn minimal_decomposition(&self) -> bool {
        self.completely_pointed && self.weight_multiplicative && self.center_zero && self.lv_equals_v
    }

    pub fn failed(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let named = [
            ("completely_pointed", self.completely_pointed),
            ("weight_multiplicative", self.weight_multiplicative),
            ("center_zero", self.center_zero),
            ("all_weights_connected", self.all_weights_connected),
            ("zero_space_generated", self.zero_space_generated),
        ];
        for (name, ok) in named {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassComponents {
    pub class: Vec<Functional>,
    pub piece: Subspace,
    /// Indices into the minimal-submodule list of those inside `piece`.
    pub minimal: Vec<usize>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityReport {
    pub flags: SimplicityFlags,
    pub minimal: Option<Vec<Subspace>>,
    pub verdict: Verdict,
    pub failed_flags: Vec<&'static str>,
    /// For a split pair `W ⊕ W′`: the weights in `W` and those in `W′`.
    pub split_weights: Option<(Vec<Functional>, Vec<Functional>)>,
    pub per_class: Vec<ClassComponents>,
    /// Whether the minimal submodules sum directly to `V`.
    pub minimal_direct_sum: Option<bool>,
    pub checks: Vec<Check>,
}

fn classify(whole: &Subspace, parts: &[&Subspace]) -> Verdict {
    let ambient = whole.ambient_dim();
    match parts {
        [one] if *one == whole => Verdict::Simple,
        [a, b] if Subspace::independent(ambient, [*a, *b]) && a.plus(b) == *whole => Verdict::SplitPair,
        _ => Verdict::OutOfHypotheses,
    }
}

fn weights_inside(w: &WeightData, s: &Subspace) -> Vec<Functional> {
    w.weights().iter().filter(|(_, vg)| s.includes(vg)).map(|(g, _)| g.clone()).collect()
}

pub fn simplicity_report(w: &WeightData) -> SimplicityReport {
    let module = w.module();
    let m = module.dim();
    let weights = w.weight_functionals();
    let classes = connect_weights(&w.split().root_functionals(), &weights).ok();
    let flags = SimplicityFlags {
        completely_pointed: w.is_completely_pointed(),
        weight_multiplicative: w.is_weight_multiplicative(),
        center_zero: module.module_center().is_zero(),
        all_weights_connected: classes.as_ref().is_some_and(|c| c.len() <= 1),
        zero_space_generated: w.zero_space_generated(),
        lv_equals_v: module.lv_equals_v(),
    };
    let minimal = minimal_weight_submodules(w).ok();
    let full = Subspace::full(m);
    // A two-piece list outside the dichotomy hypotheses (e.g. two unconnected
    // classes) is not reported as a split pair.
    let verdict = match &minimal {
        Some(list) => match classify(&full, &list.iter().collect::<Vec<_>>()) {
            Verdict::SplitPair if !flags.dichotomy() => Verdict::OutOfHypotheses,
            v => v,
        },
        None => Verdict::OutOfHypotheses,
    };
    let split_weights = match (&minimal, verdict) {
        (Some(list), Verdict::SplitPair) => {
            // W is the piece holding the largest weight.
            let (a, b) = (weights_inside(w, &list[0]), weights_inside(w, &list[1]));
            Some(if a.last() >= b.last() { (a, b) } else { (b, a) })
        }
        _ => None,
    };
    let minimal_direct_sum = minimal
        .as_ref()
        .map(|list| Subspace::independent(m, list.iter()) && Subspace::sum_all(m, list.iter()).is_full());

    let per_class = match (&classes, &minimal) {
        (Some(cls), Some(list)) => cls
            .classes()
            .iter()
            .map(|c| {
                let piece = submodule_for_class(w, c);
                let inside: Vec<usize> = (0..list.len()).filter(|&i| piece.includes(&list[i])).collect();
                let parts: Vec<&Subspace> = inside.iter().map(|&i| &list[i]).collect();
                ClassComponents { class: c.clone(), verdict: classify(&piece, &parts), piece, minimal: inside }
            })
            .collect(),
        _ => Vec::new(),
    };

    let mut checks = Vec::new();
    if flags.dichotomy() {
        checks.push(Check::new("simple-or-split-pair", matches!(verdict, Verdict::Simple | Verdict::SplitPair)));
        if let Some((pw, pw2)) = &split_weights {
            let neg: BTreeSet<Functional> = pw.iter().map(|g| -g).collect();
            let a: BTreeSet<&Functional> = pw.iter().collect();
            let all: BTreeSet<&Functional> = weights.iter().collect();
            let disjoint_union = a.iter().all(|g| !neg.contains(*g))
                && pw2.iter().collect::<BTreeSet<_>>() == neg.iter().collect()
                && a.union(&neg.iter().collect()).copied().collect::<BTreeSet<_>>() == all;
            checks.push(Check::new("weights-split-by-sign", disjoint_union));
        }
    }
    if flags.minimal_decomposition() {
        checks.push(Check::new("minimal-submodules-direct-sum", minimal_direct_sum == Some(true)));
        checks.push(Check::new(
            "class-simple-or-split-pair",
            per_class.iter().all(|c| matches!(c.verdict, Verdict::Simple | Verdict::SplitPair)),
        ));
    }
    SimplicityReport {
        flags,
        failed_flags: flags.failed(),
        minimal,
        verdict,
        split_weights,
        per_class,
        minimal_direct_sum,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::split::split;
    use crate::weight::weight_decompose;

    fn f(c: &[i64]) -> Functional {
        Functional::from_ints(c)
    }

    fn wd(m: &ModuleAction) -> WeightData {
        weight_decompose(m).unwrap()
    }

    #[test]
    fn class_submodules() {
        let adj = wd(&sl2_adjoint());
        assert!(submodule_for_class(&adj, &[f(&[-2]), f(&[2])]).is_full());

        let na = wd(&natural_plus_adjoint());
        let one = submodule_for_class(&na, &[f(&[-1]), f(&[1])]);
        assert_eq!(one, Subspace::coordinate(5, &[0, 1]));
        let two = submodule_for_class(&na, &[f(&[-2]), f(&[2])]);
        assert_eq!(two, Subspace::coordinate(5, &[2, 3, 4]));
        assert!(is_submodule(na.module(), &one) && is_submodule(na.module(), &two));

        let nat = sl2_natural();
        assert!(!is_submodule(&nat, &Subspace::coordinate(2, &[0])));
        assert!(is_submodule(&nat, &Subspace::zero(2)));
    }

    #[test]
    fn module_decompositions() {
        let d = decompose_module(&wd(&natural_plus_adjoint())).unwrap();
        assert_eq!(d.pieces.len(), 2);
        assert!(d.complement.is_zero() && d.direct && d.hypotheses.hold());
        assert!(d.checks.iter().all(|c| c.passed));

        let t = decompose_module(&wd(&torus_pair())).unwrap();
        assert_eq!(t.pieces.len(), 1);
        assert!(t.pieces[0].space.is_full() && t.direct);

        let triv = decompose_module(&wd(&trivial(&sl2(), 1))).unwrap();
        assert!(triv.pieces.is_empty());
        assert!(triv.complement.is_full() && triv.direct);
        assert!(!triv.hypotheses.lv_equals_v);
    }

    #[test]
    fn class_ideals() {
        let s = split(&sl2()).unwrap();
        assert!(ideal_for_class(&s, &[f(&[-2]), f(&[2])]).is_full());
        let ss = split(&sl2_sum()).unwrap();
        assert_eq!(ideal_for_class(&ss, &[f(&[-2, 0]), f(&[2, 0])]), Subspace::coordinate(6, &[0, 1, 2]));
        let ez = split(&ef_zero()).unwrap();
        assert_eq!(ideal_for_class(&ez, &[f(&[-1]), f(&[1])]), Subspace::coordinate(3, &[1, 2]));
    }

    #[test]
    fn algebra_decompositions() {
        let d = decompose_algebra(&split(&sl2_sum()).unwrap()).unwrap();
        assert_eq!(d.pieces.len(), 2);
        assert!(d.complement.is_zero() && d.direct && d.pairwise_commuting && d.hypotheses.hold());
        assert!(d.checks.iter().all(|c| c.passed));

        let one = decompose_algebra(&split(&sl2()).unwrap()).unwrap();
        assert_eq!(one.pieces.len(), 1);
        assert!(one.pieces[0].space.is_full());

        let ez = decompose_algebra(&split(&ef_zero()).unwrap()).unwrap();
        assert_eq!(ez.pieces.len(), 1);
        assert_eq!(ez.pieces[0].space, Subspace::coordinate(3, &[1, 2]));
        assert_eq!(ez.complement, Subspace::coordinate(3, &[0]));
        assert!(!ez.hypotheses.cartan_generated);

        let b = split(&borel()).unwrap();
        assert!(matches!(decompose_algebra(&b), Err(Error::SymmetryViolation { .. })));
    }

    #[test]
    fn pairings() {
        let w = wd(&sl2_sum_naturals());
        let ad = decompose_algebra(w.split()).unwrap();
        let md = decompose_module(&w).unwrap();
        let p = pair(&ad, &md, &w).unwrap();
        assert!(p.hypotheses.hold() && p.is_total_and_single_valued());
        assert_eq!(p.map(), vec![Some(0), Some(1)]);
        assert!(p.checks.iter().all(|c| c.passed));
        assert!(p.entries.iter().all(|e| !e.witnesses.is_empty()));

        let w = wd(&natural_plus_adjoint());
        let ad = decompose_algebra(w.split()).unwrap();
        let p = pair(&ad, &decompose_module(&w).unwrap(), &w).unwrap();
        assert_eq!(p.map(), vec![Some(0), Some(0)]);

        let other = decompose_algebra(&split(&sl2_sum()).unwrap()).unwrap();
        assert_eq!(pair(&other, &decompose_module(&w).unwrap(), &w), Err(Error::MismatchedAlgebra));
    }

    #[test]
    fn closures() {
        let nat = sl2_natural();
        assert!(submodule_closure(&nat, &Subspace::coordinate(2, &[0])).is_full());
        assert!(submodule_closure(&nat, &Subspace::zero(2)).is_zero());
        let na = natural_plus_adjoint();
        assert_eq!(submodule_closure(&na, &Subspace::coordinate(5, &[0])), Subspace::coordinate(5, &[0, 1]));
    }

    #[test]
    fn minimal_submodules() {
        let t = minimal_weight_submodules(&wd(&torus_pair())).unwrap();
        assert_eq!(t, vec![Subspace::coordinate(2, &[1]), Subspace::coordinate(2, &[0])]);
        assert_eq!(minimal_weight_submodules(&wd(&sl2_natural())).unwrap(), vec![Subspace::full(2)]);
        let na = minimal_weight_submodules(&wd(&natural_plus_adjoint())).unwrap();
        assert_eq!(na.len(), 2);
        assert!(na.contains(&Subspace::coordinate(5, &[0, 1])) && na.contains(&Subspace::coordinate(5, &[2, 3, 4])));
        assert_eq!(
            minimal_weight_submodules(&wd(&natural_plus_natural())),
            Err(Error::PreconditionFailed("completely pointed"))
        );
    }

    #[test]
    fn simplicity() {
        let r = simplicity_report(&wd(&sl2_natural()));
        assert_eq!(r.verdict, Verdict::Simple);
        assert!(r.checks.iter().all(|c| c.passed));
        assert_eq!(simplicity_report(&wd(&sl2_adjoint())).verdict, Verdict::Simple);

        let t = simplicity_report(&wd(&torus_pair()));
        assert_eq!(t.verdict, Verdict::SplitPair);
        assert_eq!(t.split_weights, Some((vec![f(&[1])], vec![f(&[-1])])));
        assert!(t.checks.iter().any(|c| c.claim == "weights-split-by-sign" && c.passed));

        let nn = simplicity_report(&wd(&natural_plus_natural()));
        assert_eq!(nn.verdict, Verdict::OutOfHypotheses);
        assert!(nn.failed_flags.contains(&"completely_pointed"));

        let na = simplicity_report(&wd(&natural_plus_adjoint()));
        assert_eq!(na.verdict, Verdict::OutOfHypotheses);
        assert!(na.per_class.iter().all(|c| c.verdict == Verdict::Simple));
        assert_eq!(na.minimal_direct_sum, Some(true));
        assert!(na.checks.iter().all(|c| c.passed));
    }
}
