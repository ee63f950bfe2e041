//! Python bindings for `trident_operads`.
//!
//! Tridents cross the boundary as JSON strings in the same format the CLI reads.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use trident_operads::functors::{build_f, roundtrip_check};
use trident_operads::linalg::Field;
use trident_operads::operad::{check_operad_axioms, dim_profile, tabulate, CheckMode};
use trident_operads::trident::{TridentAlgebra, TridentJson};

fn py_err(e: trident_operads::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn load(json: &str, field: Option<&str>) -> PyResult<TridentAlgebra> {
    let field = field.map(Field::parse_spec).transpose().map_err(py_err)?;
    serde_json::from_str::<TridentJson>(json)
        .map_err(|e| PyValueError::new_err(format!("malformed trident JSON: {e}")))?
        .to_trident(field)
        .map_err(py_err)
}

/// Violated trident identities, one string per witness; empty when valid.
#[pyfunction]
#[pyo3(signature = (json, field=None))]
fn validate_trident(json: &str, field: Option<&str>) -> PyResult<Vec<String>> {
    let t = load(json, field)?;
    Ok(t.validate().violations.iter().map(|v| v.to_string()).collect())
}

/// `dim F(T)(n)` for `0 ≤ n ≤ max_arity`.
#[pyfunction]
#[pyo3(signature = (json, max_arity=6, field=None))]
fn dimensions(json: &str, max_arity: usize, field: Option<&str>) -> PyResult<Vec<usize>> {
    let p = build_f(load(json, field)?, max_arity).map_err(py_err)?;
    Ok(dim_profile(&p).map_err(py_err)?.dims)
}

/// Tabulated `F(T)` as operad JSON.
#[pyfunction]
#[pyo3(signature = (json, max_arity=6, field=None))]
fn build_operad(json: &str, max_arity: usize, field: Option<&str>) -> PyResult<String> {
    let p = build_f(load(json, field)?, max_arity).map_err(py_err)?;
    tabulate(&p).and_then(|t| t.to_json_string()).map_err(py_err)
}

/// Number of operad axiom violations on `F(T)` up to `budget`.
#[pyfunction]
#[pyo3(signature = (json, max_arity=6, budget=6, field=None))]
fn count_axiom_violations(json: &str, max_arity: usize, budget: usize, field: Option<&str>) -> PyResult<u64> {
    let p = build_f(load(json, field)?, max_arity).map_err(py_err)?;
    Ok(check_operad_axioms(&p, CheckMode::Exhaustive, budget).violation_count)
}

/// Whether extracting from `F(T)` gives back `T` exactly.
#[pyfunction]
#[pyo3(signature = (json, max_arity=6, field=None))]
fn roundtrip(json: &str, max_arity: usize, field: Option<&str>) -> PyResult<bool> {
    let t = load(json, field)?;
    Ok(roundtrip_check(&t, max_arity).map_err(py_err)?.passed())
}

/// Runs the command-line tool in process; returns `(exit_code, stdout)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String) {
    let argv = std::iter::once("trident-operads".to_string()).chain(args);
    let out = trident_operads::cli::run(argv);
    (out.code, out.stdout)
}

#[pymodule]
#[pyo3(name = "trident_operads")]
fn bindings(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(validate_trident, m)?)?;
    m.add_function(wrap_pyfunction!(dimensions, m)?)?;
    m.add_function(wrap_pyfunction!(build_operad, m)?)?;
    m.add_function(wrap_pyfunction!(count_axiom_violations, m)?)?;
    m.add_function(wrap_pyfunction!(roundtrip, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    Ok(())
}
