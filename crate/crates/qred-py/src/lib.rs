//! Python bindings. Subsets are lists of 1-based simple-root labels; `None`
//! stands for all simple roots.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use qred_core::cascade::kostant_cascade;
use qred_core::classify::{classify_parabolic, enumerate_verdicts};
use qred_core::seaweed::{biparabolic_basis, seaweed_index as index_of, BiparabolicSpec};
use qred_core::stabilizer::certify_with_workers;
use qred_core::{Family, RootSubset, RootSystem, SimpleType};

fn value_error(e: qred_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn system(family: &str, rank: usize) -> PyResult<RootSystem> {
    let ty = SimpleType::new(Family::from_letter(family).map_err(value_error)?, rank).map_err(value_error)?;
    Ok(RootSystem::new(ty))
}

fn subset(labels: Option<Vec<usize>>, rank: usize) -> PyResult<RootSubset> {
    match labels {
        Some(v) => RootSubset::from_labels(&v, rank).map_err(value_error),
        None => Ok(RootSubset::full(rank)),
    }
}

fn spec(r: &RootSystem, pi1: Option<Vec<usize>>, pi2: Option<Vec<usize>>) -> PyResult<BiparabolicSpec> {
    let l = r.rank();
    BiparabolicSpec::new(r.simple_type(), subset(pi1, l)?, subset(pi2, l)?).map_err(value_error)
}

/// Cascade nodes as dicts with `support`, `eps` and `gamma` (the size of Γ_K).
#[pyfunction]
#[pyo3(signature = (family, rank, pi=None))]
fn cascade<'py>(py: Python<'py>, family: &str, rank: usize, pi: Option<Vec<usize>>) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let r = system(family, rank)?;
    let c = kostant_cascade(&r, subset(pi, rank)?);
    c.nodes
        .iter()
        .map(|n| {
            let d = PyDict::new(py);
            d.set_item("support", n.support.labels())?;
            d.set_item("eps", r.root(n.eps).coeffs().to_vec())?;
            d.set_item("gamma", n.gamma.len())?;
            Ok(d)
        })
        .collect()
}

#[pyfunction]
#[pyo3(signature = (family, rank, pi=None))]
fn cascade_size(family: &str, rank: usize, pi: Option<Vec<usize>>) -> PyResult<usize> {
    let r = system(family, rank)?;
    Ok(kostant_cascade(&r, subset(pi, rank)?).len())
}

#[pyfunction]
#[pyo3(signature = (family, rank, pi1=None, pi2=None))]
fn seaweed_dim(family: &str, rank: usize, pi1: Option<Vec<usize>>, pi2: Option<Vec<usize>>) -> PyResult<usize> {
    let r = system(family, rank)?;
    Ok(biparabolic_basis(&r, &spec(&r, pi1, pi2)?).map_err(value_error)?.dim())
}

#[pyfunction]
#[pyo3(signature = (family, rank, pi1=None, pi2=None))]
fn seaweed_index(family: &str, rank: usize, pi1: Option<Vec<usize>>, pi2: Option<Vec<usize>>) -> PyResult<usize> {
    let r = system(family, rank)?;
    index_of(&r, &spec(&r, pi1, pi2)?).map_err(value_error)
}

/// Verdict for the parabolic with Levi roots `pi`: keys `qr`, `index`,
/// `trace` (rule ids) and `torus_dim` (None when not tabulated).
#[pyfunction]
fn classify<'py>(py: Python<'py>, family: &str, rank: usize, pi: Vec<usize>) -> PyResult<Bound<'py, PyDict>> {
    let r = system(family, rank)?;
    let v = classify_parabolic(&r, subset(Some(pi), rank)?).map_err(value_error)?;
    let d = PyDict::new(py);
    d.set_item("subset", v.subset.clone())?;
    d.set_item("qr", v.qr)?;
    d.set_item("index", v.index)?;
    d.set_item("trace", v.trace.iter().map(|t| t.id()).collect::<Vec<_>>())?;
    d.set_item("torus_dim", v.torus_dim)?;
    Ok(d)
}

/// Every non-quasi-reductive parabolic of the type, as label lists.
#[pyfunction]
fn non_qr(family: &str, rank: usize) -> PyResult<Vec<Vec<usize>>> {
    let r = system(family, rank)?;
    let verdicts = enumerate_verdicts(&r).map_err(value_error)?;
    Ok(verdicts.into_iter().filter(|v| !v.qr).map(|v| v.subset).collect())
}

/// Certificate text, or None when every trial is exhausted.
#[pyfunction]
#[pyo3(signature = (family, rank, pi1=None, pi2=None, trials=20, seed=0, workers=1))]
#[allow(clippy::too_many_arguments)]
fn certify(
    py: Python<'_>,
    family: &str,
    rank: usize,
    pi1: Option<Vec<usize>>,
    pi2: Option<Vec<usize>>,
    trials: usize,
    seed: u64,
    workers: usize,
) -> PyResult<Option<String>> {
    let r = system(family, rank)?;
    let s = spec(&r, pi1, pi2)?;
    let c = py.detach(|| certify_with_workers(&r, &s, trials, seed, workers)).map_err(value_error)?;
    Ok(c.certificate.map(|cert| cert.to_text()))
}

#[pymodule]
fn qred(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(cascade, m)?)?;
    m.add_function(wrap_pyfunction!(cascade_size, m)?)?;
    m.add_function(wrap_pyfunction!(seaweed_dim, m)?)?;
    m.add_function(wrap_pyfunction!(seaweed_index, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(non_qr, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    Ok(())
}
