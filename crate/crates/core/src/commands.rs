//! Command dispatch behind the `liesplit` binary.

use crate::connections::{connect, Mode, Partition};
use crate::decomposition::{
    decompose_algebra_with_weights, decompose_module, pair, simplicity_report, AlgebraDecomposition, Check,
    ModuleDecomposition, Verdict,
};
use crate::error::Error;
use crate::fixtures::{self, Named};
use crate::functional::{check_system, Functional};
use crate::involution::{Involution, Violation};
use crate::io::{self, Input, InputError};
use crate::oracle;
use crate::report::*;
use crate::split::{split, SplitData};
use crate::weight::{weight_decompose, ModuleAction, WeightData};
use serde_json::{json, Value};
use std::path::PathBuf;

pub const COMMANDS: &[&str] = &[
    "validate",
    "roots",
    "weights",
    "connect-weights",
    "connect-roots",
    "decompose-algebra",
    "decompose-module",
    "pair",
    "simple-components",
    "involution-split",
];

#[derive(Debug, Clone, Default)]
pub struct Flags {
    pub max_depth: Option<usize>,
}

/// Failure that ends a command early: exit code 1, or 3 when a standing
/// symmetry hypothesis fails.
struct Abort {
    message: String,
    hypothesis: bool,
}

fn abort(message: String) -> Abort {
    Abort { message, hypothesis: false }
}

impl From<InputError> for Abort {
    fn from(e: InputError) -> Self {
        abort(e.to_string())
    }
}

impl From<Error> for Abort {
    fn from(e: Error) -> Self {
        let hypothesis = matches!(e, Error::SymmetryViolation { .. } | Error::ZeroFunctional { .. });
        Abort { message: e.to_string(), hypothesis }
    }
}

fn finish(outcome: Step<()>, report: &mut Report) {
    match outcome {
        Ok(()) => report.settle(),
        Err(Abort { message, hypothesis: true }) => {
            report.hypothesis("symmetric_systems", false);
            report.result("error", Value::from(message.clone()));
            report.line("out of hypotheses", message);
            report.settle();
        }
        Err(Abort { message, .. }) => report.fail_input(message),
    }
}

type Step<T> = std::result::Result<T, Abort>;

/// Runs an analysis command on input files. The exit code is stored in the report.
pub fn run(command: &str, paths: &[PathBuf], flags: &Flags) -> Report {
    let mut inputs = Vec::new();
    let mut loaded = Vec::new();
    let mut first_error = None;
    for p in paths {
        let shown = p.display().to_string();
        match io::read_bytes(p) {
            Ok(bytes) => inputs.push(InputDigest::new(&shown, &bytes)),
            Err(e) => {
                first_error.get_or_insert(e.to_string());
                continue;
            }
        }
        match io::read_input(p) {
            Ok(i) => loaded.push(i),
            Err(e) => {
                first_error.get_or_insert(e.to_string());
            }
        }
    }
    let mut report = Report::new(command, inputs);
    if let Some(e) = first_error {
        report.fail_input(e);
        return report;
    }
    let outcome = dispatch(command, &loaded, flags, &mut report);
    finish(outcome, &mut report);
    report
}

/// Runs a command on already-parsed inputs (no file digests).
pub fn run_inputs(command: &str, inputs: &[Input], flags: &Flags) -> Report {
    let mut report = Report::new(command, Vec::new());
    let outcome = dispatch(command, inputs, flags, &mut report);
    finish(outcome, &mut report);
    report
}

fn dispatch(command: &str, inputs: &[Input], flags: &Flags, r: &mut Report) -> Step<()> {
    let one = || match inputs {
        [only] => Ok(only),
        _ => Err(abort(format!("{command} takes exactly one input file, got {}", inputs.len()))),
    };
    match command {
        "validate" => validate(one()?, r),
        "roots" => roots(&algebra_split(one()?)?, r),
        "weights" => weights(&weight_data(one()?)?, r),
        "connect-weights" => connections(one()?, Mode::Weights, flags, r),
        "connect-roots" => connections(one()?, Mode::Roots, flags, r),
        "decompose-algebra" => {
            let s = algebra_split(one()?)?;
            let d = decompose_algebra_with_weights(&s, &s.root_functionals())?;
            algebra_decomposition(&d, r);
            Ok(())
        }
        "decompose-module" => {
            let w = weight_data(one()?)?;
            let d = decompose_module(&w)?;
            module_decomposition(&w, &d, r);
            Ok(())
        }
        "pair" => match inputs {
            [m] => pairing(&weight_data(m)?, None, r),
            [a, m] => pairing(&weight_data(m)?, Some(&algebra_split(a)?), r),
            _ => Err(abort(format!("pair takes a module file, optionally preceded by an algebra file; got {}", inputs.len()))),
        },
        "simple-components" => simple_components(&weight_data(one()?)?, r),
        "involution-split" => match one()? {
            Input::Involution(inv) => involution_split(inv, r),
            other => Err(abort(format!("involution-split needs an involution file, got a {}", other.kind()))),
        },
        _ => Err(abort(format!("unknown command {command:?}"))),
    }
}

fn algebra_split(input: &Input) -> Step<SplitData> {
    let l = match input {
        Input::Algebra(l) => l,
        Input::Module(m) => return Ok(m.split().clone()),
        Input::Involution(inv) => &inv.ambient,
        Input::System { .. } => return Err(abort("expected an algebra, module or involution file, got a system".into())),
    };
    Ok(split(l)?)
}

fn module_of(input: &Input) -> Step<&ModuleAction> {
    match input {
        Input::Module(m) => Ok(m),
        other => Err(abort(format!("expected a module file, got a {}", other.kind()))),
    }
}

fn weight_data(input: &Input) -> Step<WeightData> {
    Ok(weight_decompose(module_of(input)?)?)
}

fn symmetric(set: &[Functional], name: &'static str, r: &mut Report, key: &str) -> bool {
    let ok = check_system(set, name, None).is_ok();
    r.hypothesis(key, ok);
    ok
}

// ---------------------------------------------------------------------------

fn validate(input: &Input, r: &mut Report) -> Step<()> {
    r.result("kind", Value::from(input.kind()));
    r.line("kind", input.kind());
    match input {
        Input::Algebra(l) => {
            let s = split(l)?;
            r.line("dim", l.dim().to_string());
            r.line("rank", s.rank().to_string());
            r.result("dim", json!(l.dim()));
            r.result("rank", json!(s.rank()));
            symmetric(&s.root_functionals(), "root system", r, "symmetric_roots");
        }
        Input::Module(m) => {
            let w = weight_decompose(m)?;
            r.line("dim", m.dim().to_string());
            r.result("dim", json!(m.dim()));
            symmetric(&w.split().root_functionals(), "root system", r, "symmetric_roots");
            symmetric(&w.weight_functionals(), "weight system", r, "symmetric_weights");
        }
        Input::Involution(inv) => {
            involution_violations(inv, r)?;
        }
        Input::System { roots, weights } => {
            symmetric(roots, "root system", r, "symmetric_roots");
            symmetric(weights, "weight system", r, "symmetric_weights");
        }
    }
    Ok(())
}

fn roots(s: &SplitData, r: &mut Report) -> Step<()> {
    let names = s.algebra().names();
    let list: Vec<Value> = s
        .roots()
        .iter()
        .map(|(a, space)| json!({ "root": functional_json(a), "basis": subspace_json(space), "span": s.describe_space(space) }))
        .collect();
    r.result("roots", Value::from(list));
    r.result("rank", json!(s.rank()));
    r.result("cartan", subspace_json(s.cartan()));
    r.line("L", set_text(&s.root_functionals()));
    for (a, space) in s.roots() {
        r.line(format!("L_{a}"), subspace_text(names, space));
    }
    r.line("H", subspace_text(names, s.cartan()));
    symmetric(&s.root_functionals(), "root system", r, "symmetric_roots");
    Ok(())
}

fn weights(w: &WeightData, r: &mut Report) -> Step<()> {
    let names = w.module().names();
    let list: Vec<Value> = w
        .weights()
        .iter()
        .map(|(g, space)| json!({ "weight": functional_json(g), "basis": subspace_json(space) }))
        .collect();
    let mult = w.weight_multiplicativity();
    r.result("weights", Value::from(list));
    r.result("zero_space", subspace_json(w.zero_space()));
    r.result(
        "properties",
        json!({
            "completely_pointed": w.is_completely_pointed(),
            "weight_multiplicative": mult.holds,
            "zero_space_generated": mult.zero_space_generated,
            "lv_equals_v": w.module().lv_equals_v(),
            "center_zero": w.module().module_center().is_zero(),
        }),
    );
    r.line("P", set_text(&w.weight_functionals()));
    for (g, space) in w.weights() {
        r.line(format!("V_{g}"), subspace_text(names, space));
    }
    r.line("V_0", subspace_text(names, w.zero_space()));
    r.line("completely pointed", w.is_completely_pointed().to_string());
    r.line("weight-multiplicative", mult.holds.to_string());
    symmetric(&w.weight_functionals(), "weight system", r, "symmetric_weights");
    Ok(())
}

fn system_of(input: &Input) -> Step<(Vec<Functional>, Vec<Functional>)> {
    Ok(match input {
        Input::System { roots, weights } => (roots.clone(), weights.clone()),
        Input::Module(m) => {
            let w = weight_decompose(m)?;
            (w.split().root_functionals(), w.weight_functionals())
        }
        other => {
            let s = algebra_split(other)?;
            (s.root_functionals(), s.root_functionals())
        }
    })
}

fn connections(input: &Input, mode: Mode, flags: &Flags, r: &mut Report) -> Step<()> {
    let (lambda, weights) = system_of(input)?;
    let ok = symmetric(&lambda, "root system", r, "symmetric_roots") & symmetric(&weights, "weight system", r, "symmetric_weights");
    r.result("mode", json!(mode));
    r.result("roots", functionals_json(&lambda));
    r.result("weights", functionals_json(&weights));
    r.line("L", set_text(&lambda));
    r.line("P", set_text(&weights));
    if !ok {
        return Ok(());
    }
    let partition = connect(&lambda, &weights, mode)?;
    r.result("classes", partition_json(&partition));
    r.line("classes", partition_text(&partition));
    let depth = flags.max_depth.unwrap_or_else(|| oracle::default_depth(&lambda, &weights));
    let relation = oracle::chain_relation(&lambda, &weights, mode, depth);
    let missing = oracle::mismatches(&relation, &partition);
    r.result("oracle", json!({ "max_depth": depth, "mismatches": functionals_json(&missing) }));
    r.line("oracle depth", depth.to_string());
    r.checks([Check { claim: "chain-oracle-agrees".into(), passed: missing.is_empty() }]);
    Ok(())
}

fn pieces_json(pieces: &[crate::decomposition::Piece], check: impl Fn(&crate::linalg::Subspace) -> Value) -> Value {
    Value::from(
        pieces
            .iter()
            .map(|p| json!({ "class": functionals_json(&p.class), "basis": subspace_json(&p.space), "dim": p.space.dim(), "checks": check(&p.space) }))
            .collect::<Vec<_>>(),
    )
}

fn algebra_decomposition(d: &AlgebraDecomposition, r: &mut Report) {
    let l = &d.algebra;
    r.hypothesis("center_zero", d.hypotheses.center_zero);
    r.hypothesis("cartan_generated", d.hypotheses.cartan_generated);
    r.result("classes", partition_json(&d.classes));
    r.result("pieces", pieces_json(&d.pieces, |s| json!({ "is_ideal": l.is_ideal(s) })));
    r.result("complement", subspace_json(&d.complement));
    r.result("coroot_span", subspace_json(&d.coroot_span));
    r.result("direct", json!(d.direct));
    r.result("pairwise_commuting", json!(d.pairwise_commuting));
    r.result("weights_used", functionals_json(&d.weights_used));
    r.line("ideals", d.pieces.len().to_string());
    for (i, p) in d.pieces.iter().enumerate() {
        r.line(format!("I{i} {}", set_text(&p.class)), subspace_text(l.names(), &p.space));
    }
    r.line("U", subspace_text(l.names(), &d.complement));
    r.line("direct", d.direct.to_string());
    r.checks(d.checks.iter().cloned());
}

fn module_decomposition(w: &WeightData, d: &ModuleDecomposition, r: &mut Report) {
    let m = w.module();
    r.hypothesis("lv_equals_v", d.hypotheses.lv_equals_v);
    r.hypothesis("center_zero", d.hypotheses.center_zero);
    r.result("classes", partition_json(&d.classes));
    r.result("pieces", pieces_json(&d.pieces, |s| json!({ "is_submodule": m.is_submodule(s) })));
    r.result("complement", subspace_json(&d.complement));
    r.result("generated_zero_part", subspace_json(&d.generated_zero_part));
    r.result("direct", json!(d.direct));
    r.line("P", set_text(&w.weight_functionals()));
    r.line("pieces", d.pieces.len().to_string());
    for (j, p) in d.pieces.iter().enumerate() {
        r.line(format!("V{j} {}", set_text(&p.class)), subspace_text(m.names(), &p.space));
    }
    r.line("U", subspace_text(m.names(), &d.complement));
    r.line("direct", d.direct.to_string());
    r.checks(d.checks.iter().cloned());
}

fn pairing(w: &WeightData, algebra: Option<&SplitData>, r: &mut Report) -> Step<()> {
    if let Some(s) = algebra {
        if s.algebra() != w.split().algebra() {
            return Err(Error::MismatchedAlgebra.into());
        }
    }
    let ad = decompose_algebra_with_weights(w.split(), &w.weight_functionals())?;
    let md = decompose_module(w)?;
    let p = pair(&ad, &md, w)?;
    r.hypothesis("algebra_perfect", p.hypotheses.algebra_perfect);
    r.hypothesis("lv_equals_v", p.hypotheses.lv_equals_v);
    r.hypothesis("center_zero", p.hypotheses.center_zero);
    let names = w.split().algebra().names();
    let entries: Vec<Value> = p
        .entries
        .iter()
        .map(|e| {
            let witnesses: Vec<Value> = e
                .witnesses
                .iter()
                .map(|x| {
                    json!({
                        "ideal": x.ideal,
                        "root": x.root.as_ref().map(functional_json),
                        "weight": functional_json(&x.weight),
                        "image_dim": x.image_dim,
                    })
                })
                .collect();
            json!({
                "module_piece": e.module_piece,
                "class": functionals_json(&md.pieces[e.module_piece].class),
                "candidates": e.candidates,
                "witnesses": witnesses,
                "weight_module_over_ideal": e.weight_module_over_ideal,
            })
        })
        .collect();
    r.result("ideals", pieces_json(&ad.pieces, |_| json!({})));
    r.result("pairing", Value::from(entries));
    for (i, piece) in ad.pieces.iter().enumerate() {
        r.line(format!("I{i} {}", set_text(&piece.class)), subspace_text(names, &piece.space));
    }
    for e in &p.entries {
        let target = match e.candidates.as_slice() {
            [] => "none".to_string(),
            c => c.iter().map(|i| format!("I{i}")).collect::<Vec<_>>().join(", "),
        };
        r.line(format!("V{} {}", e.module_piece, set_text(&md.pieces[e.module_piece].class)), target);
    }
    r.checks(p.checks.iter().cloned());
    Ok(())
}

fn simple_components(w: &WeightData, r: &mut Report) -> Step<()> {
    w.check_symmetric()?;
    let s = simplicity_report(w);
    let names = w.module().names();
    let flags = s.flags;
    for (k, v) in [
        ("completely_pointed", flags.completely_pointed),
        ("weight_multiplicative", flags.weight_multiplicative),
        ("center_zero", flags.center_zero),
        ("all_weights_connected", flags.all_weights_connected),
        ("zero_space_generated", flags.zero_space_generated),
    ] {
        r.hypothesis(k, v);
    }
    r.result("lv_equals_v", json!(flags.lv_equals_v));
    r.result("verdict", json!(s.verdict));
    r.result("failed_flags", json!(s.failed_flags));
    r.result("minimal_submodules", s.minimal.as_ref().map_or(Value::Null, |l| Value::from(l.iter().map(subspace_json).collect::<Vec<_>>())));
    r.result("minimal_direct_sum", json!(s.minimal_direct_sum));
    if let Some((a, b)) = &s.split_weights {
        r.result("split_weights", json!([functionals_json(a), functionals_json(b)]));
    }
    let per_class: Vec<Value> = s
        .per_class
        .iter()
        .map(|c| json!({ "class": functionals_json(&c.class), "basis": subspace_json(&c.piece), "minimal": c.minimal, "verdict": c.verdict }))
        .collect();
    r.result("per_class", Value::from(per_class));

    r.line("P", set_text(&w.weight_functionals()));
    r.line("verdict", s.verdict.as_str());
    if let Some(list) = &s.minimal {
        for (i, m) in list.iter().enumerate() {
            r.line(format!("W{i}"), subspace_text(names, m));
        }
    }
    if let Some((a, b)) = &s.split_weights {
        r.line("P^W", set_text(a));
        r.line("-P^W", set_text(b));
    }
    for c in &s.per_class {
        r.line(format!("class {}", set_text(&c.class)), c.verdict.as_str());
    }
    if s.verdict == Verdict::OutOfHypotheses && !s.failed_flags.is_empty() {
        r.line("failed", s.failed_flags.join(", "));
    }
    r.checks(s.checks.iter().cloned());
    Ok(())
}

/// Records violations; structural ones (not an involutive automorphism of a
/// split algebra) abort as input errors, the rest are hypotheses.
fn involution_violations(inv: &Involution, r: &mut Report) -> Step<Vec<Violation>> {
    let v = inv.validate();
    r.result("violations", Value::from(v.iter().map(|x| x.to_string()).collect::<Vec<_>>()));
    for x in &v {
        r.line("violation", x.to_string());
    }
    if let Some(x) = v.iter().find(|x| {
        matches!(
            x,
            Violation::WrongShape { .. } | Violation::NotInvolutive | Violation::NotAutomorphism { .. } | Violation::AmbientNotSplit(_)
        )
    }) {
        return Err(abort(x.to_string()));
    }
    r.hypothesis("cartan_stable", !v.contains(&Violation::CartanNotStable));
    r.hypothesis(
        "projections_nonzero",
        !v.iter().any(|x| matches!(x, Violation::ProjectionVanishes { .. })),
    );
    Ok(v)
}

fn involution_split(inv: &Involution, r: &mut Report) -> Step<()> {
    if !involution_violations(inv, r)?.is_empty() {
        return Ok(());
    }
    let built = inv.build()?;
    let w = weight_decompose(&built.module)?;
    let s = w.split();
    let lambda = s.root_functionals();
    let weights = w.weight_functionals();
    let ad = decompose_algebra_with_weights(s, &weights)?;
    let md = decompose_module(&w)?;
    let p = pair(&ad, &md, &w)?;
    let root_classes: Partition = connect(&lambda, &weights, Mode::Roots)?;
    let weight_classes: Partition = connect(&lambda, &weights, Mode::Weights)?;

    let ambient = inv.ambient.names();
    let vecs = |b: &[Vec<crate::Rational>]| Value::from(b.iter().map(|v| crate::rational::format_all(v)).collect::<Vec<_>>());
    r.result("algebra", io::algebra_to_value(&built.algebra));
    r.result("module", io::module_to_value(&built.module));
    r.result("sym_basis", vecs(&built.sym_basis));
    r.result("skw_basis", vecs(&built.skw_basis));
    r.result("roots", functionals_json(&lambda));
    r.result("weights", functionals_json(&weights));
    r.result("zero_space", subspace_json(w.zero_space()));
    r.result("ideals", pieces_json(&ad.pieces, |_| json!({})));
    r.result("module_pieces", pieces_json(&md.pieces, |_| json!({})));
    r.result("pairing", json!(p.map()));

    let describe_rows = |b: &[Vec<crate::Rational>]| {
        crate::split::describe(ambient, &crate::linalg::Subspace::span(ambient.len(), b.iter()))
    };
    r.line("dim L", built.algebra.dim().to_string());
    r.line("dim V", built.module.dim().to_string());
    r.line("Sym", describe_rows(&built.sym_basis).join(", "));
    r.line("Skw", describe_rows(&built.skw_basis).join(", "));
    r.line("L", set_text(&lambda));
    r.line("P", set_text(&weights));
    r.line("dim V_0", w.zero_space().dim().to_string());
    r.line("ideals", ad.pieces.len().to_string());
    r.line("module pieces", md.pieces.len().to_string());
    let arrows: Vec<String> = p
        .map()
        .iter()
        .enumerate()
        .map(|(j, i)| format!("V{j} -> {}", i.map_or("none".to_string(), |i| format!("I{i}"))))
        .collect();
    r.line("pairing", arrows.join(", "));

    r.hypothesis("lv_equals_v", md.hypotheses.lv_equals_v);
    r.hypothesis("module_center_zero", md.hypotheses.center_zero);
    r.hypothesis("algebra_center_zero", ad.hypotheses.center_zero);
    r.hypothesis("cartan_generated", ad.hypotheses.cartan_generated);
    r.hypothesis("algebra_perfect", p.hypotheses.algebra_perfect);
    r.checks([
        Check { claim: "weights-equal-roots".into(), passed: lambda == weights },
        Check { claim: "root-and-weight-classes-agree".into(), passed: root_classes.classes() == weight_classes.classes() },
    ]);
    r.checks(ad.checks.iter().cloned());
    r.checks(md.checks.iter().cloned());
    r.checks(p.checks.iter().cloned());
    Ok(())
}

// ---------------------------------------------------------------------------
// Data emitters.

pub fn fixture_json(name: &str) -> Option<Value> {
    Some(match fixtures::by_name(name)? {
        Named::Algebra(l) => io::algebra_to_value(&l),
        Named::Module(m) => io::module_to_value(&m),
        Named::Involution(i) => io::involution_to_value(&i),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenerateKind {
    Module,
    System,
}

pub fn generate_json(kind: GenerateKind, seed: u64) -> Value {
    let mut rng = fixtures::rng(seed);
    match kind {
        GenerateKind::Module => io::module_to_value(&fixtures::random_module(&mut rng, 8)),
        GenerateKind::System => {
            let (l, p) = fixtures::random_symmetric_system(&mut rng);
            io::system_to_value(&l, &p)
        }
    }
}

pub fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}
