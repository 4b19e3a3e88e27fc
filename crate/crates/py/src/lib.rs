use dscore::generators::{self, RandomSpec};
use dscore::io::{self, GraphFormat};
use dscore::oracle::DEFAULT_LIMIT;
use dscore::{Error, PurifyMode, SolverConfig, TieBreak, Vertex, VertexSet};
use pyo3::exceptions::{PyOSError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Io(io) => PyOSError::new_err(io.to_string()),
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse<T: std::str::FromStr>(text: &str) -> PyResult<T>
where
    T::Err: std::fmt::Display,
{
    text.parse()
        .map_err(|e: T::Err| PyValueError::new_err(e.to_string()))
}

fn format_of(name: Option<&str>) -> PyResult<Option<GraphFormat>> {
    name.map(parse).transpose()
}

/// Simple undirected graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "domset", frozen)]
struct PyGraph {
    inner: dscore::Graph,
}

impl PyGraph {
    fn set(&self, vertices: Vec<Vertex>) -> PyResult<VertexSet> {
        VertexSet::from_vertices(self.inner.n(), vertices).map_err(to_py)
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges=Vec::new()))]
    fn new(n: usize, edges: Vec<(Vertex, Vertex)>) -> PyResult<Self> {
        let inner = dscore::Graph::from_edges(n, edges).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    /// Parses edge-list or DIMACS text; the format is detected when omitted.
    #[staticmethod]
    #[pyo3(signature = (text, format=None))]
    fn from_text(text: &str, format: Option<&str>) -> PyResult<Self> {
        let format = format_of(format)?.unwrap_or_else(|| GraphFormat::detect(text));
        let inner = io::parse_str(text, format).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    #[pyo3(signature = (path, format=None))]
    fn read(path: std::path::PathBuf, format: Option<&str>) -> PyResult<Self> {
        let inner = io::parse_graph(path, format_of(format)?).map_err(to_py)?;
        Ok(PyGraph { inner })
    }

    #[pyo3(signature = (format="edgelist"))]
    fn to_text(&self, format: &str) -> PyResult<String> {
        Ok(io::write_graph(&self.inner, parse(format)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn edges(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: Vertex) -> PyResult<Vec<Vertex>> {
        self.inner.check_vertex(v).map_err(to_py)?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degree(&self, v: Vertex) -> PyResult<usize> {
        self.inner.check_vertex(v).map_err(to_py)?;
        Ok(self.inner.degree(v))
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn is_dominating(&self, vertices: Vec<Vertex>) -> PyResult<bool> {
        Ok(self.inner.is_dominating(&self.set(vertices)?))
    }

    fn is_minimal_dominating(&self, vertices: Vec<Vertex>) -> PyResult<bool> {
        Ok(self.inner.is_minimal_dominating(&self.set(vertices)?))
    }

    fn disjoint_union(&self, other: &PyGraph) -> PyGraph {
        PyGraph {
            inner: self.inner.disjoint_union(&other.inner),
        }
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Outcome of the two-stage solver.
#[pyclass(name = "Result", module = "domset", frozen)]
struct PyDominationResult {
    inner: dscore::DominationResult,
}

#[pymethods]
impl PyDominationResult {
    #[getter]
    fn greedy_order(&self) -> Vec<Vertex> {
        self.inner.greedy_order.clone()
    }

    #[getter]
    fn greedy_set(&self) -> Vec<Vertex> {
        self.inner.greedy_set.clone()
    }

    #[getter]
    fn tied_pairs(&self) -> Vec<(Vertex, Vertex)> {
        self.inner.tied_pairs.clone()
    }

    #[getter]
    fn forest_trees(&self) -> usize {
        self.inner.forest_trees
    }

    #[getter]
    fn purified_set(&self) -> Vec<Vertex> {
        self.inner.purified_set.clone()
    }

    #[getter]
    fn sweep_removed(&self) -> Vec<Vertex> {
        self.inner.sweep_removed.clone()
    }

    #[getter]
    fn gamma(&self) -> Option<usize> {
        self.inner.gamma
    }

    #[getter]
    fn gamma_witness(&self) -> Option<Vec<Vertex>> {
        self.inner.gamma_witness.clone()
    }

    #[getter]
    fn certificates(&self) -> Vec<String> {
        self.inner
            .certificates
            .iter()
            .filter(|c| c.is_granted())
            .filter_map(|c| {
                serde_json::to_value(c.kind)
                    .ok()?
                    .as_str()
                    .map(String::from)
            })
            .collect()
    }

    #[getter]
    fn notes(&self) -> Vec<String> {
        self.inner.notes.clone()
    }

    /// The full result, including bounds report and timings, as JSON text.
    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.inner).map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    fn __repr__(&self) -> String {
        format!(
            "Result(n={}, greedy={}, purified={}, gamma={:?})",
            self.inner.n,
            self.inner.greedy_size(),
            self.inner.purified_size(),
            self.inner.gamma
        )
    }
}

/// Runs greedy selection, forest construction and purification.
#[pyfunction]
#[pyo3(signature = (graph, tie_break="min-index", mode="extended", ensure_minimal=false, components=false, exact_limit=None))]
fn solve(
    py: Python<'_>,
    graph: &PyGraph,
    tie_break: &str,
    mode: &str,
    ensure_minimal: bool,
    components: bool,
    exact_limit: Option<usize>,
) -> PyResult<PyDominationResult> {
    let config = SolverConfig {
        tie_break: parse(tie_break)?,
        mode: parse::<PurifyMode>(mode)?,
        ensure_minimal,
        components,
        exact_limit,
    };
    let graph = &graph.inner;
    let solution = py.detach(|| dscore::solve(graph, &config)).map_err(to_py)?;
    Ok(PyDominationResult {
        inner: solution.result,
    })
}

/// Greedy selection order.
#[pyfunction]
#[pyo3(signature = (graph, tie_break="min-index"))]
fn greedy(graph: &PyGraph, tie_break: &str) -> PyResult<Vec<Vertex>> {
    let tb: TieBreak = parse(tie_break)?;
    Ok(dscore::greedy_dominating_set(&graph.inner, tb)
        .order()
        .to_vec())
}

/// `(gamma, witness)` by exhaustive search.
#[pyfunction]
#[pyo3(signature = (graph, limit=DEFAULT_LIMIT))]
fn exact_gamma(py: Python<'_>, graph: &PyGraph, limit: usize) -> PyResult<(usize, Vec<Vertex>)> {
    let graph = &graph.inner;
    let r = py
        .detach(|| dscore::exact_gamma(graph, limit))
        .map_err(to_py)?;
    Ok((r.gamma, r.witness))
}

/// `(lower, upper)` interval containing gamma of a connected graph.
#[pyfunction]
fn gamma_bounds(graph: &PyGraph) -> PyResult<(usize, usize)> {
    let b = dscore::gamma_bounds(&graph.inner).map_err(to_py)?;
    Ok((b.lower, b.upper))
}

/// Drops redundant members until the set is minimal dominating.
#[pyfunction]
fn ensure_minimal(graph: &PyGraph, vertices: Vec<Vertex>) -> PyResult<Vec<Vertex>> {
    let set = graph.set(vertices)?;
    Ok(dscore::ensure_minimal(&graph.inner, &set)
        .map_err(to_py)?
        .to_vec())
}

/// `(graph, labels)` of a named figure graph.
#[pyfunction]
fn fixture(name: &str) -> PyResult<(PyGraph, Vec<String>)> {
    let f = generators::fixture(name).map_err(to_py)?;
    Ok((PyGraph { inner: f.graph }, f.labels))
}

#[pyfunction]
fn fixtures() -> Vec<&'static str> {
    generators::FIXTURES.to_vec()
}

#[pyfunction]
fn random_connected_graph(n: usize, m: usize, seed: u64) -> PyResult<PyGraph> {
    let inner = generators::random_connected_graph(RandomSpec { n, m, seed }).map_err(to_py)?;
    Ok(PyGraph { inner })
}

#[pyfunction]
fn corona(g1: &PyGraph, g2: &PyGraph) -> PyGraph {
    PyGraph {
        inner: generators::corona(&g1.inner, &g2.inner),
    }
}

#[pyfunction]
fn path(n: usize) -> PyGraph {
    PyGraph {
        inner: generators::path(n),
    }
}

#[pyfunction]
fn cycle(n: usize) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: generators::cycle(n).map_err(to_py)?,
    })
}

#[pyfunction]
fn complete(n: usize) -> PyGraph {
    PyGraph {
        inner: generators::complete(n),
    }
}

#[pyfunction]
fn star(leaves: usize) -> PyGraph {
    PyGraph {
        inner: generators::star(leaves),
    }
}

#[pymodule(name = "domset")]
fn py_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyDominationResult>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(greedy, m)?)?;
    m.add_function(wrap_pyfunction!(exact_gamma, m)?)?;
    m.add_function(wrap_pyfunction!(gamma_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(ensure_minimal, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(fixtures, m)?)?;
    m.add_function(wrap_pyfunction!(random_connected_graph, m)?)?;
    m.add_function(wrap_pyfunction!(corona, m)?)?;
    m.add_function(wrap_pyfunction!(path, m)?)?;
    m.add_function(wrap_pyfunction!(cycle, m)?)?;
    m.add_function(wrap_pyfunction!(complete, m)?)?;
    m.add_function(wrap_pyfunction!(star, m)?)?;
    Ok(())
}
