//! JSON file formats for algebras, modules, involutions and bare systems of
//! functionals.
//!
//! Rationals are strings `"p/q"` or `"p"`, matrices are row-major nested
//! arrays, and bracket/action tables are keyed by `"i,j"` / `"i,a"`.

use crate::algebra::{LieAlgebra, StructureConstants};
use crate::error::Error;
use crate::functional::Functional;
use crate::involution::Involution;
use crate::linalg::Matrix;
use crate::rational::{self, Rational};
use crate::split::split;
use crate::weight::ModuleAction;
use serde_json::{json, Map, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputError {
    Read { path: String, message: String },
    Syntax { line: usize, column: usize, message: String },
    Field { field: String, message: String },
    Rejected { field: String, error: Error },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::Read { path, message } => write!(f, "cannot read {path}: {message}"),
            InputError::Syntax { line, column, message } => write!(f, "line {line}, column {column}: {message}"),
            InputError::Field { field, message } => write!(f, "{field}: {message}"),
            InputError::Rejected { field, error } => write!(f, "{field}: {error}"),
        }
    }
}

impl std::error::Error for InputError {}

type Res<T> = std::result::Result<T, InputError>;

fn field_err(field: &str, message: impl Into<String>) -> InputError {
    InputError::Field { field: field.to_string(), message: message.into() }
}

fn rejected(field: &str) -> impl Fn(Error) -> InputError + '_ {
    move |error| InputError::Rejected { field: field.to_string(), error }
}

pub fn parse_json(text: &str) -> Res<Value> {
    serde_json::from_str(text).map_err(|e| InputError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| InputError::Read { path: path.display().to_string(), message: e.to_string() })
}

fn object<'a>(v: &'a Value, field: &str) -> Res<&'a Map<String, Value>> {
    v.as_object().ok_or_else(|| field_err(field, "expected an object"))
}

fn get<'a>(obj: &'a Map<String, Value>, key: &str, prefix: &str) -> Res<&'a Value> {
    obj.get(key).ok_or_else(|| field_err(&join(prefix, key), "missing field"))
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn usize_of(v: &Value, field: &str) -> Res<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| field_err(field, "expected a non-negative integer"))
}

fn rational_of(v: &Value, field: &str) -> Res<Rational> {
    match v {
        Value::String(s) => rational::parse(s).map_err(|m| field_err(field, m)),
        Value::Number(n) if n.is_i64() => Ok(rational::int(n.as_i64().expect("checked"))),
        _ => Err(field_err(field, "expected a rational string such as \"3/4\"")),
    }
}

fn vector_of(v: &Value, len: usize, field: &str) -> Res<Vec<Rational>> {
    let items = v.as_array().ok_or_else(|| field_err(field, "expected an array of rationals"))?;
    if items.len() != len {
        return Err(field_err(field, format!("expected {len} entries, found {}", items.len())));
    }
    items.iter().enumerate().map(|(k, x)| rational_of(x, &format!("{field}[{k}]"))).collect()
}

fn names_of(v: &Value, len: usize, field: &str) -> Res<Vec<String>> {
    let items = v.as_array().ok_or_else(|| field_err(field, "expected an array of names"))?;
    if items.len() != len {
        return Err(field_err(field, format!("expected {len} names, found {}", items.len())));
    }
    items
        .iter()
        .enumerate()
        .map(|(k, x)| x.as_str().map(str::to_string).ok_or_else(|| field_err(&format!("{field}[{k}]"), "expected a string")))
        .collect()
}

fn pair_key(key: &str, field: &str) -> Res<(usize, usize)> {
    let bad = || field_err(field, format!("key \"{key}\" is not of the form \"i,j\""));
    let (a, b) = key.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn optional_names(obj: &Map<String, Value>, len: usize, prefix: &str, stem: &str) -> Res<Vec<String>> {
    match obj.get("basis") {
        Some(v) => names_of(v, len, &join(prefix, "basis")),
        None => Ok((0..len).map(|i| format!("{stem}{i}")).collect()),
    }
}

// ---------------------------------------------------------------------------
// Algebras.

pub fn algebra_from_value(v: &Value, prefix: &str) -> Res<LieAlgebra> {
    let obj = object(v, if prefix.is_empty() { "<root>" } else { prefix })?;
    let n = usize_of(get(obj, "dim", prefix)?, &join(prefix, "dim"))?;
    let names = optional_names(obj, n, prefix, "b")?;
    let mut table = StructureConstants::new(n);
    let bfield = join(prefix, "brackets");
    if let Some(b) = obj.get("brackets") {
        let entries = object(b, &bfield)?;
        for (key, value) in entries {
            let field = format!("{bfield}[\"{key}\"]");
            let (i, j) = pair_key(key, &field)?;
            if i >= j || j >= n {
                return Err(field_err(&field, format!("need i < j < {n}")));
            }
            table.set(i, j, vector_of(value, n, &field)?).map_err(rejected(&field))?;
        }
    }
    let cfield = join(prefix, "cartan");
    let cartan = get(obj, "cartan", prefix)?
        .as_array()
        .ok_or_else(|| field_err(&cfield, "expected an array of basis indices"))?
        .iter()
        .enumerate()
        .map(|(k, x)| usize_of(x, &format!("{cfield}[{k}]")))
        .collect::<Res<Vec<_>>>()?;
    LieAlgebra::new(names, table, cartan).map_err(rejected(if prefix.is_empty() { "algebra" } else { prefix }))
}

pub fn algebra_to_value(l: &LieAlgebra) -> Value {
    let brackets: BTreeMap<String, Vec<String>> = l
        .structure()
        .entries()
        .iter()
        .map(|(&(i, j), v)| (format!("{i},{j}"), rational::format_all(v)))
        .collect();
    json!({
        "dim": l.dim(),
        "basis": l.names(),
        "brackets": brackets,
        "cartan": l.cartan_indices(),
    })
}

// ---------------------------------------------------------------------------
// Modules.

/// The `algebra` field is either an inline object or a path, resolved against
/// `base` when relative.
fn algebra_field(obj: &Map<String, Value>, base: Option<&Path>) -> Res<LieAlgebra> {
    match get(obj, "algebra", "")? {
        Value::String(p) => {
            let path = resolve(base, p);
            let v = parse_json(&read(&path)?)?;
            algebra_from_value(&v, "").map_err(|e| match e {
                InputError::Field { field, message } => field_err(&format!("algebra ({p}): {field}"), message),
                other => other,
            })
        }
        v => algebra_from_value(v, "algebra"),
    }
}

fn resolve(base: Option<&Path>, p: &str) -> PathBuf {
    let path = PathBuf::from(p);
    match base {
        Some(b) if path.is_relative() => b.join(path),
        _ => path,
    }
}

pub fn module_from_value(v: &Value, base: Option<&Path>) -> Res<ModuleAction> {
    let obj = object(v, "<root>")?;
    let algebra = algebra_field(obj, base)?;
    let split_data = split(&algebra).map_err(rejected("algebra"))?;
    let n = algebra.dim();
    let m = usize_of(get(obj, "dim", "")?, "dim")?;
    let names = optional_names(obj, m, "", "v")?;
    let mut action = BTreeMap::new();
    if let Some(a) = obj.get("action") {
        for (key, value) in object(a, "action")? {
            let field = format!("action[\"{key}\"]");
            let (i, k) = pair_key(key, &field)?;
            if i >= n || k >= m {
                return Err(field_err(&field, format!("need i < {n} and a < {m}")));
            }
            action.insert((i, k), vector_of(value, m, &field)?);
        }
    }
    ModuleAction::new(split_data, names, &action).map_err(rejected("action"))
}

pub fn module_to_value(module: &ModuleAction) -> Value {
    let action: BTreeMap<String, Vec<String>> = module
        .action_entries()
        .iter()
        .map(|(&(i, a), v)| (format!("{i},{a}"), rational::format_all(v)))
        .collect();
    json!({
        "algebra": algebra_to_value(module.split().algebra()),
        "dim": module.dim(),
        "basis": module.names(),
        "action": action,
    })
}

// ---------------------------------------------------------------------------
// Involutions.

pub fn matrix_from_value(v: &Value, field: &str) -> Res<Matrix> {
    let rows = v.as_array().ok_or_else(|| field_err(field, "expected an array of rows"))?;
    let cols = rows.first().and_then(Value::as_array).map_or(0, Vec::len);
    let data = rows
        .iter()
        .enumerate()
        .map(|(i, r)| vector_of(r, cols, &format!("{field}[{i}]")))
        .collect::<Res<Vec<_>>>()?;
    Matrix::from_rows(cols, data).map_err(rejected(field))
}

pub fn matrix_to_value(m: &Matrix) -> Value {
    Value::from(m.to_rows().iter().map(|r| rational::format_all(r)).collect::<Vec<_>>())
}

pub fn involution_from_value(v: &Value, base: Option<&Path>) -> Res<Involution> {
    let obj = object(v, "<root>")?;
    let algebra = algebra_field(obj, base)?;
    let xi = matrix_from_value(get(obj, "xi", "")?, "xi")?;
    if xi.rows() != algebra.dim() || xi.cols() != algebra.dim() {
        return Err(field_err("xi", format!("expected a {0}x{0} matrix", algebra.dim())));
    }
    Ok(Involution::new(algebra, xi))
}

pub fn involution_to_value(inv: &Involution) -> Value {
    json!({ "algebra": algebra_to_value(&inv.ambient), "xi": matrix_to_value(&inv.matrix) })
}

// ---------------------------------------------------------------------------
// Bare systems of functionals.

pub fn functional_to_value(f: &Functional) -> Value {
    Value::from(f.to_strings())
}

fn functionals_of(v: &Value, field: &str) -> Res<Vec<Functional>> {
    let items = v.as_array().ok_or_else(|| field_err(field, "expected an array of tuples"))?;
    let rank = items.first().and_then(Value::as_array).map_or(0, Vec::len);
    let mut out = items
        .iter()
        .enumerate()
        .map(|(k, x)| vector_of(x, rank, &format!("{field}[{k}]")).map(Functional::new))
        .collect::<Res<Vec<_>>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

/// `{ "roots": [[...]], "weights": [[...]] }`; a missing `weights` means `𝒫 = Λ`.
pub fn system_from_value(v: &Value) -> Res<(Vec<Functional>, Vec<Functional>)> {
    let obj = object(v, "<root>")?;
    let roots = functionals_of(get(obj, "roots", "")?, "roots")?;
    let weights = match obj.get("weights") {
        Some(w) => functionals_of(w, "weights")?,
        None => roots.clone(),
    };
    if let (Some(a), Some(b)) = (roots.first(), weights.first()) {
        if a.rank() != b.rank() {
            return Err(field_err("weights", "rank differs from roots"));
        }
    }
    Ok((roots, weights))
}

pub fn system_to_value(roots: &[Functional], weights: &[Functional]) -> Value {
    json!({
        "roots": roots.iter().map(functional_to_value).collect::<Vec<_>>(),
        "weights": weights.iter().map(functional_to_value).collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// Files.

#[derive(Debug, Clone)]
pub enum Input {
    Algebra(LieAlgebra),
    Module(ModuleAction),
    Involution(Involution),
    System { roots: Vec<Functional>, weights: Vec<Functional> },
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Algebra(_) => "algebra",
            Input::Module(_) => "module",
            Input::Involution(_) => "involution",
            Input::System { .. } => "system",
        }
    }
}

/// Parses any of the four schemas, told apart by their keys.
pub fn input_from_str(text: &str, base: Option<&Path>) -> Res<Input> {
    let v = parse_json(text)?;
    let obj = object(&v, "<root>")?;
    if obj.contains_key("xi") {
        involution_from_value(&v, base).map(Input::Involution)
    } else if obj.contains_key("action") || obj.contains_key("algebra") {
        module_from_value(&v, base).map(Input::Module)
    } else if obj.contains_key("roots") {
        system_from_value(&v).map(|(roots, weights)| Input::System { roots, weights })
    } else {
        algebra_from_value(&v, "").map(Input::Algebra)
    }
}

pub fn read_input(path: &Path) -> Res<Input> {
    input_from_str(&read(path)?, path.parent())
}

pub fn read_bytes(path: &Path) -> Res<Vec<u8>> {
    std::fs::read(path).map_err(|e| InputError::Read { path: path.display().to_string(), message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn algebra_round_trip() {
        for l in [fixtures::sl2(), fixtures::sl2_sum(), fixtures::sl_n(3)] {
            let v = algebra_to_value(&l);
            assert_eq!(algebra_from_value(&v, "").unwrap(), l);
        }
    }

    #[test]
    fn module_and_involution_round_trip() {
        let m = fixtures::natural_plus_adjoint();
        assert_eq!(module_from_value(&module_to_value(&m), None).unwrap(), m);
        let inv = fixtures::swap_involution();
        assert_eq!(involution_from_value(&involution_to_value(&inv), None).unwrap(), inv);
    }

    #[test]
    fn diagnostics() {
        let e = input_from_str("{\"dim\": 3,\n \"cartan\": [2], \"brackets\": {\"0,1\": [\"0\", \"x\", \"1\"]}}", None).unwrap_err();
        assert!(matches!(&e, InputError::Field { field, .. } if field == "brackets[\"0,1\"][1]"), "{e}");

        let e = input_from_str("{\"dim\": 3,\n \"cartan\": [2] ", None).unwrap_err();
        assert!(matches!(e, InputError::Syntax { line: 2, .. }));

        let e = input_from_str("{\"dim\": 2, \"brackets\": {}}", None).unwrap_err();
        assert_eq!(e, field_err("cartan", "missing field"));

        let e = input_from_str("{\"dim\": 2, \"cartan\": [0], \"brackets\": {\"1,0\": [\"1\", \"0\"]}}", None).unwrap_err();
        assert!(e.to_string().contains("need i < j"));
    }

    #[test]
    fn jacobi_failure_is_rejected_with_triple() {
        let text = r#"{"dim": 3, "basis": ["a", "b", "c"], "cartan": [2],
            "brackets": {"0,1": ["0", "0", "1"], "0,2": ["1", "0", "0"]}}"#;
        match input_from_str(text, None) {
            Err(InputError::Rejected { error: Error::JacobiViolation { triple }, .. }) => assert_eq!(triple, (0, 1, 2)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn systems() {
        let v = parse_json(r#"{"roots": [["2"], ["-2"]]}"#).unwrap();
        let (r, w) = system_from_value(&v).unwrap();
        assert_eq!(r, vec![Functional::from_ints(&[-2]), Functional::from_ints(&[2])]);
        assert_eq!(r, w);
    }
}
