use liesplit::connections::{connect, find_connection, is_connection, Mode};
use liesplit::decomposition::*;
use liesplit::fixtures;
use liesplit::io;
use liesplit::linalg::{joint_eigenspaces, kernel, rref, Matrix, Subspace};
use liesplit::rational::{frac, Rational};
use liesplit::split::split;
use liesplit::weight::weight_decompose;
use liesplit::{Functional, LieAlgebra};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    prop_oneof![Just(frac(0, 1)), (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(proptest::collection::vec(rational(), cols), rows)
        .prop_map(move |r| Matrix::from_rows(cols, r).unwrap())
}

fn subspace(n: usize) -> impl Strategy<Value = Subspace> {
    (0..=n).prop_flat_map(move |k| matrix(k, n)).prop_map(|m| Subspace::row_space(&m))
}

fn algebras() -> Vec<LieAlgebra> {
    vec![
        fixtures::sl2(),
        fixtures::sl2_sum(),
        fixtures::ef_zero(),
        fixtures::borel(),
        fixtures::torus(2),
        fixtures::sl_n(3),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        let once = rref(&m);
        prop_assert_eq!(rref(&once), once.clone());
        prop_assert_eq!(once.rank(), m.rank());
    }

    #[test]
    fn rank_plus_nullity(m in (1usize..5, 1usize..6).prop_flat_map(|(r, c)| matrix(r, c))) {
        prop_assert_eq!(m.rank() + kernel(&m).dim(), m.cols());
        let k = kernel(&m);
        for v in k.basis_vectors() {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == frac(0, 1)));
        }
    }

    #[test]
    fn grassmann_identity(u in subspace(5), w in subspace(5)) {
        let s = u.sum(&w).unwrap();
        let i = u.intersect(&w).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + w.dim());
        prop_assert!(s.contains(&u).unwrap() && s.contains(&w).unwrap());
        prop_assert!(u.contains(&i).unwrap() && w.contains(&i).unwrap());
    }

    #[test]
    fn bracket_is_antisymmetric(idx in 0usize..6, seed in any::<u64>()) {
        let l = &algebras()[idx];
        let mut rng = fixtures::rng(seed);
        use rand::Rng;
        let mut vec = || (0..l.dim()).map(|_| frac(rng.gen_range(-3..=3), 1)).collect::<Vec<_>>();
        let (x, y) = (vec(), vec());
        let xy = l.bracket(&x, &y).unwrap();
        let yx = l.bracket(&y, &x).unwrap();
        prop_assert!(xy.iter().zip(&yx).all(|(a, b)| a + b == frac(0, 1)));
        prop_assert!(l.bracket(&x, &x).unwrap().iter().all(|a| *a == frac(0, 1)));
    }

    #[test]
    fn center_and_derived_are_ideals(idx in 0usize..6) {
        let l = &algebras()[idx];
        prop_assert!(l.is_ideal(&l.center()));
        prop_assert!(l.is_ideal(&l.derived()));
    }

    #[test]
    fn joint_eigenspaces_split_the_space(seed in any::<u64>(), n in 1usize..5) {
        use rand::Rng;
        let mut rng = fixtures::rng(seed);
        let (p, inv) = fixtures::random_basis_change(&mut rng, n);
        let ms: Vec<Matrix> = (0..2)
            .map(|_| {
                let d: Vec<Rational> = (0..n).map(|_| frac(rng.gen_range(-2..=2), 1)).collect();
                p.mul(&Matrix::diagonal(&d)).mul(&inv)
            })
            .collect();
        let parts = joint_eigenspaces(&ms).unwrap();
        let spaces: Vec<Subspace> = parts.iter().map(|(_, s)| s.clone()).collect();
        prop_assert!(Subspace::independent(n, &spaces));
        prop_assert!(Subspace::sum_all(n, &spaces).is_full());
        let keys: Vec<&Functional> = parts.iter().map(|(f, _)| f).collect();
        prop_assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn connection_classes_are_closed_under_negation(seed in any::<u64>()) {
        let (lambda, weights) = fixtures::random_symmetric_system(&mut fixtures::rng(seed));
        for mode in [Mode::Weights, Mode::Roots] {
            let p = connect(&lambda, &weights, mode).unwrap();
            let total: usize = p.classes().iter().map(Vec::len).sum();
            prop_assert_eq!(total, p.elements().len());
            for x in p.elements() {
                prop_assert!(p.same_class(x, &-x));
            }
        }
    }

    #[test]
    fn witnesses_exist_exactly_within_classes(seed in any::<u64>()) {
        let (lambda, weights) = fixtures::random_symmetric_system(&mut fixtures::rng(seed));
        let p = connect(&lambda, &weights, Mode::Weights).unwrap();
        for a in &weights {
            for b in &weights {
                let chain = find_connection(&lambda, &weights, a, b, Mode::Weights);
                prop_assert_eq!(chain.is_some(), p.same_class(a, b));
                if let Some(c) = chain {
                    prop_assert!(is_connection(&lambda, &weights, &c, b, Mode::Weights));
                }
            }
        }
    }

    #[test]
    fn weights_shift_by_roots(seed in any::<u64>()) {
        let m = fixtures::random_module(&mut fixtures::rng(seed), 8);
        let w = weight_decompose(&m).unwrap();
        let s = w.split();
        let rank = s.rank();
        let mut sources: Vec<Functional> = s.root_functionals();
        sources.push(Functional::zero(rank));
        let mut targets: Vec<Functional> = w.weight_functionals();
        targets.push(Functional::zero(rank));
        for a in &sources {
            for g in &targets {
                let image = m.act_spaces(&s.root_space(a), &w.weight_space(g));
                prop_assert!(w.weight_space(&(a + g)).contains(&image).unwrap());
            }
        }
    }

    #[test]
    fn module_pieces_hold_closures(seed in any::<u64>()) {
        let m = fixtures::random_module(&mut fixtures::rng(seed), 8);
        let w = weight_decompose(&m).unwrap();
        let d = decompose_module(&w).unwrap();
        let spaces: Vec<Subspace> = d.pieces.iter().map(|p| p.space.clone()).collect();
        if d.hypotheses.hold() {
            prop_assert!(Subspace::independent(m.dim(), &spaces));
        }
        for p in &d.pieces {
            prop_assert!(is_submodule(&m, &p.space));
            for g in &p.class {
                prop_assert!(p.space.contains(&submodule_closure(&m, &w.weight_space(g))).unwrap());
            }
        }
        // A nonzero seed in V_0 generates something outside V_0 when the center is trivial.
        if d.hypotheses.center_zero {
            for v in w.zero_space().basis_vectors() {
                let c = submodule_closure(&m, &Subspace::span(m.dim(), [v]));
                prop_assert!(!w.zero_space().contains(&c).unwrap());
            }
        }
    }

    #[test]
    fn simple_verdict_matches_closures(seed in any::<u64>()) {
        let m = fixtures::random_module(&mut fixtures::rng(seed), 8);
        let w = weight_decompose(&m).unwrap();
        let r = simplicity_report(&w);
        if r.flags.completely_pointed && r.flags.center_zero {
            let all_full = w.weights().iter().all(|(_, s)| submodule_closure(&m, s).is_full());
            prop_assert_eq!(r.verdict == Verdict::Simple, all_full && !w.weights().is_empty());
        }
        prop_assert!(r.checks.iter().all(|c| c.passed));
    }

    #[test]
    fn module_files_round_trip(seed in any::<u64>()) {
        let m = fixtures::random_module(&mut fixtures::rng(seed), 8);
        let v = io::module_to_value(&m);
        prop_assert_eq!(io::module_from_value(&v, None).unwrap(), m);
    }
}

#[test]
fn roots_split_every_fixture_algebra() {
    for l in algebras() {
        let s = split(&l).unwrap();
        let mut spaces: Vec<Subspace> = s.roots().iter().map(|(_, x)| x.clone()).collect();
        spaces.push(s.cartan().clone());
        assert!(Subspace::independent(l.dim(), &spaces));
        assert!(Subspace::sum_all(l.dim(), &spaces).is_full());
    }
}
