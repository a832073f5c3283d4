//! Python module `embedlab`.

use std::str::FromStr;

use embedlab::isoperimetric::{self, DEFAULT_SUBSET_BUDGET};
use embedlab::layouts::{self, CutLayout, StarParams};
use embedlab::oracle::{self, DEFAULT_PERMUTATION_BUDGET};
use embedlab::report::{self, Budgets};
use embedlab::{graph, Family};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn to_py(e: embedlab::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    py.import("json")?.call_method1("loads", (text,))
}

fn serialize<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("value serializes")
}

/// A simple undirected graph on vertices `0..order`.
#[pyclass(name = "Graph", module = "embedlab", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: embedlab::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = embedlab::Graph::from_edges(order, edges, Family::Generic).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    /// Builds a named family such as `"fq3"`, `"col:4,3"` or `"circulant:8:1,2"`.
    #[staticmethod]
    fn family(designator: &str) -> PyResult<Self> {
        let family = Family::from_str(designator).map_err(to_py)?;
        let built = family
            .build()
            .ok_or_else(|| PyValueError::new_err(format!("{family} does not determine a graph")))?;
        Ok(PyGraph { inner: built.map_err(to_py)? })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PyGraph { inner: embedlab::Graph::from_json(text).map_err(to_py)? })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    #[getter]
    fn family_name(&self) -> String {
        self.inner.family().to_string()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        self.inner.check_vertex(v).map_err(to_py)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn regularity(&self) -> Option<usize> {
        self.inner.regularity()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot(graph::VertexAnnotations::Coordinates)
    }

    fn __repr__(&self) -> String {
        format!("Graph({}, order={}, size={})", self.inner.family(), self.inner.order(), self.inner.size())
    }
}

/// A bijection of guest vertices onto host vertices with shortest-path routes.
#[pyclass(name = "Embedding", module = "embedlab", frozen)]
pub struct PyEmbedding {
    inner: embedlab::Embedding,
}

#[pymethods]
impl PyEmbedding {
    #[new]
    fn new(guest: &PyGraph, host: &PyGraph, vertex_map: Vec<usize>) -> PyResult<Self> {
        let inner = embedlab::Embedding::route_all(&guest.inner, &host.inner, &vertex_map).map_err(to_py)?;
        Ok(PyEmbedding { inner })
    }

    #[getter]
    fn guest(&self) -> PyGraph {
        PyGraph { inner: self.inner.guest().clone() }
    }

    #[getter]
    fn host(&self) -> PyGraph {
        PyGraph { inner: self.inner.host().clone() }
    }

    #[getter]
    fn vertex_map(&self) -> Vec<usize> {
        self.inner.vertex_map().to_vec()
    }

    fn routes(&self) -> Vec<Vec<usize>> {
        self.inner.routes().to_vec()
    }

    /// Congestion per host edge, in the order of `host.edges()`.
    fn congestions(&self) -> Vec<usize> {
        self.inner.congestions().to_vec()
    }

    fn wirelength_by_distance(&self) -> usize {
        self.inner.wirelength_by_distance()
    }

    fn wirelength_by_congestion(&self) -> usize {
        self.inner.wirelength_by_congestion()
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }
}

/// Folded hypercube FQ^s laid out on COL(4, 2^(s-3) - 1).
#[pyfunction]
fn algorithm_a(s: usize) -> PyResult<PyEmbedding> {
    Ok(PyEmbedding { inner: layouts::algorithm_a(s).map_err(to_py)?.embedding })
}

/// Circulant G(n; ±{1..j}) laid out on the star of cycle C_k*(m).
#[pyfunction]
fn algorithm_b(n: usize, j: usize, k: usize, m: usize) -> PyResult<PyEmbedding> {
    Ok(PyEmbedding { inner: layouts::algorithm_b(StarParams { n, j, k, m }).map_err(to_py)?.embedding })
}

/// Per-cut verdicts of a layout as a list of dicts.
#[pyfunction]
#[pyo3(signature = (algorithm, s=None, n=None, j=None, k=None, m=None, budget=DEFAULT_SUBSET_BUDGET))]
#[allow(clippy::too_many_arguments)]
fn verify_cuts<'py>(
    py: Python<'py>,
    algorithm: &str,
    s: Option<usize>,
    n: Option<usize>,
    j: Option<usize>,
    k: Option<usize>,
    m: Option<usize>,
    budget: u128,
) -> PyResult<Bound<'py, PyAny>> {
    let missing = || PyValueError::new_err("missing layout parameter");
    let verdicts = match algorithm {
        "A" | "a" => layouts::algorithm_a(s.ok_or_else(missing)?).map_err(to_py)?.verify(budget),
        "B" | "b" => {
            let params = StarParams { n: n.ok_or_else(missing)?, j: j.ok_or_else(missing)?, k: k.ok_or_else(missing)?, m: m.ok_or_else(missing)? };
            layouts::algorithm_b(params).map_err(to_py)?.verify(budget)
        }
        other => return Err(PyValueError::new_err(format!("unknown algorithm {other:?}"))),
    };
    json_to_py(py, &report::verdicts_to_json(&verdicts.map_err(to_py)?))
}

#[pyfunction]
#[pyo3(signature = (s, budget=DEFAULT_SUBSET_BUDGET))]
fn theorem_a_wirelength<'py>(py: Python<'py>, s: usize, budget: u128) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &serialize(&layouts::theorem_a_wirelength(s, budget).map_err(to_py)?))
}

#[pyfunction]
fn theorem_b_wirelength<'py>(py: Python<'py>, n: usize, j: usize, k: usize, m: usize) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &serialize(&layouts::theorem_b_wirelength(StarParams { n, j, k, m }).map_err(to_py)?))
}

#[pyfunction]
#[pyo3(signature = (s, budget=DEFAULT_SUBSET_BUDGET))]
fn report_a<'py>(py: Python<'py>, s: usize, budget: u128) -> PyResult<Bound<'py, PyAny>> {
    let row = report::report_algorithm_a(s, Budgets { subsets: budget, ..Budgets::default() }).map_err(to_py)?;
    json_to_py(py, &serialize(&row))
}

#[pyfunction]
#[pyo3(signature = (n, j, k, m, budget=DEFAULT_SUBSET_BUDGET))]
fn report_b<'py>(py: Python<'py>, n: usize, j: usize, k: usize, m: usize, budget: u128) -> PyResult<Bound<'py, PyAny>> {
    let budgets = Budgets { subsets: budget, ..Budgets::default() };
    let row = report::report_algorithm_b(StarParams { n, j, k, m }, budgets).map_err(to_py)?;
    json_to_py(py, &serialize(&row))
}

/// The standard sweep as CSV text.
#[pyfunction]
fn default_sweep_csv() -> PyResult<String> {
    Ok(report::rows_to_csv(&report::default_sweep(Budgets::default()).map_err(to_py)?))
}

#[pyfunction]
fn circulant_xi(n: usize, j: usize, l: usize) -> PyResult<usize> {
    isoperimetric::circulant_xi(n, j, l).map_err(to_py)
}

/// Exact `I(a)` and `theta(a)` with lex-least witnesses.
#[pyfunction]
#[pyo3(signature = (graph, a, budget=DEFAULT_SUBSET_BUDGET))]
fn exact_profile<'py>(py: Python<'py>, graph: &PyGraph, a: usize, budget: u128) -> PyResult<Bound<'py, PyAny>> {
    json_to_py(py, &serialize(&isoperimetric::exact_profile(&graph.inner, a, budget).map_err(to_py)?))
}

#[pyfunction]
#[pyo3(signature = (graph, budget=DEFAULT_SUBSET_BUDGET))]
fn profile_csv(graph: &PyGraph, budget: u128) -> PyResult<String> {
    Ok(isoperimetric::profile_csv(&isoperimetric::full_profile(&graph.inner, budget).map_err(to_py)?))
}

#[pyfunction]
#[pyo3(signature = (guest, host, budget=DEFAULT_PERMUTATION_BUDGET))]
fn brute_force_min_wirelength<'py>(
    py: Python<'py>,
    guest: &PyGraph,
    host: &PyGraph,
    budget: u128,
) -> PyResult<Bound<'py, PyAny>> {
    let result = oracle::brute_force_min_wirelength(&guest.inner, &host.inner, budget).map_err(to_py)?;
    json_to_py(py, &result.to_json())
}

#[pymodule]
#[pyo3(name = "embedlab")]
fn embedlab_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyEmbedding>()?;
    m.add_function(wrap_pyfunction!(algorithm_a, m)?)?;
    m.add_function(wrap_pyfunction!(algorithm_b, m)?)?;
    m.add_function(wrap_pyfunction!(verify_cuts, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_a_wirelength, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_b_wirelength, m)?)?;
    m.add_function(wrap_pyfunction!(report_a, m)?)?;
    m.add_function(wrap_pyfunction!(report_b, m)?)?;
    m.add_function(wrap_pyfunction!(default_sweep_csv, m)?)?;
    m.add_function(wrap_pyfunction!(circulant_xi, m)?)?;
    m.add_function(wrap_pyfunction!(exact_profile, m)?)?;
    m.add_function(wrap_pyfunction!(profile_csv, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force_min_wirelength, m)?)?;
    Ok(())
}
