//! Python bindings. Results cross the boundary as the same JSON documents the
//! CLI prints, decoded into dicts and lists.

use std::time::Duration;

use bcast_core::extremal::run_construction;
use bcast_core::solvers::{
    alpha_b_bruteforce, alpha_b_exact, max_independent_set, max_packing, validate_broadcast, DEFAULT_BRUTEFORCE_CAP,
    DEFAULT_BUDGET,
};
use bcast_core::witness::{verify_witness, witness_thm1, witness_thm3i, witness_thm3ii};
use bcast_core::{families, parse_graph, serialize_graph, Broadcast, Budget, ConstructionOptions, Format, Theorem, Xi};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

fn budget(budget_ms: Option<u64>) -> Budget {
    Budget::new(budget_ms.map_or(DEFAULT_BUDGET, Duration::from_millis))
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", frozen)]
struct PyGraph(bcast_core::Graph);

#[pymethods]
impl PyGraph {
    #[new]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        bcast_core::Graph::from_edges(n, &edges).map(PyGraph).map_err(err)
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        parse_graph(text, Format::Graph6).map(|p| PyGraph(p.graph)).map_err(err)
    }

    /// A named graph: petersen, heawood, pappus, mcgee, pN, cN, kN, starN, ka,b, honeycombRxC.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        families::by_name(name).map(PyGraph).ok_or_else(|| err(format!("unknown graph name '{name}'")))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.0.edges().collect()
    }

    fn to_graph6(&self) -> String {
        serialize_graph(&self.0, Format::Graph6)
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.0.n(), self.0.edge_count())
    }
}

#[pyfunction]
#[pyo3(signature = (g, budget_ms=None))]
fn alpha<'py>(py: Python<'py>, g: &PyGraph, budget_ms: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &max_independent_set(&g.0, &budget(budget_ms)).map_err(err)?.without_timing())
}

#[pyfunction]
#[pyo3(signature = (g, budget_ms=None))]
fn rho<'py>(py: Python<'py>, g: &PyGraph, budget_ms: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &max_packing(&g.0, &budget(budget_ms)).map_err(err)?.without_timing())
}

/// `method` is "exact" or "bruteforce".
#[pyfunction]
#[pyo3(signature = (g, method="exact", budget_ms=None))]
fn alpha_b<'py>(py: Python<'py>, g: &PyGraph, method: &str, budget_ms: Option<u64>) -> PyResult<Bound<'py, PyAny>> {
    let r = match method {
        "exact" => alpha_b_exact(&g.0, &budget(budget_ms)),
        "bruteforce" => alpha_b_bruteforce(&g.0, DEFAULT_BRUTEFORCE_CAP),
        other => return Err(err(format!("unknown method '{other}'"))),
    };
    to_py(py, &r.map_err(err)?.without_timing())
}

/// Violations of independence; empty when `values` is an independent broadcast.
#[pyfunction]
fn validate<'py>(py: Python<'py>, g: &PyGraph, values: Vec<u32>) -> PyResult<Bound<'py, PyAny>> {
    to_py(py, &validate_broadcast(&g.0, &Broadcast::new(values)).map_err(err)?)
}

/// Builds the witness family for `theorem` ("1", "3i" or "3ii") and verifies it.
#[pyfunction]
#[pyo3(signature = (g, values, theorem="1", xi=None))]
fn witness<'py>(
    py: Python<'py>,
    g: &PyGraph,
    values: Vec<u32>,
    theorem: &str,
    xi: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let f = Broadcast::new(values);
    let family = match theorem.parse::<Theorem>().map_err(err)? {
        Theorem::GirthSixDegreeThree => witness_thm1(&g.0, &f),
        Theorem::GirthSixDegreeFive => witness_thm3i(&g.0, &f),
        Theorem::GirthFourScaled => {
            let xi: Xi = xi.ok_or_else(|| err("xi is required for theorem 3ii"))?.parse().map_err(err)?;
            witness_thm3ii(&g.0, &f, xi)
        }
    }
    .map_err(err)?;
    let doc = match verify_witness(&g.0, &f, &family) {
        Ok(c) => serde_json::json!({ "family": family, "certificate": c, "violation": null }),
        Err(v) => serde_json::json!({ "family": family, "certificate": null, "violation": v }),
    };
    to_py(py, &doc)
}

/// One seeded run of the star-gluing construction; returns its report.
#[pyfunction]
#[pyo3(signature = (n, k, epsilon=None, seed=0, budget_ms=10_000))]
fn generate<'py>(
    py: Python<'py>,
    n: usize,
    k: usize,
    epsilon: Option<f64>,
    seed: u64,
    budget_ms: u64,
) -> PyResult<Bound<'py, PyAny>> {
    let eps = epsilon.unwrap_or(0.9 / (2.0 * (k * k) as f64));
    let options = ConstructionOptions { alpha_budget: Duration::from_millis(budget_ms), ..Default::default() };
    let run = py.detach(|| run_construction(n, k, eps, seed, &options)).map_err(err)?;
    to_py(py, &run.report)
}

#[pymodule]
fn bcast(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(alpha, m)?)?;
    m.add_function(wrap_pyfunction!(rho, m)?)?;
    m.add_function(wrap_pyfunction!(alpha_b, m)?)?;
    m.add_function(wrap_pyfunction!(validate, m)?)?;
    m.add_function(wrap_pyfunction!(witness, m)?)?;
    m.add_function(wrap_pyfunction!(generate, m)?)?;
    Ok(())
}
