//! Python bindings for the tutte crate.
//!
//! Exposes the multigraph type, the Tutte polynomial, and the classical
//! specializations to Python. Coefficients cross the boundary as exact
//! Python ints; univariate polynomials come back as coefficient lists by
//! ascending power.
//!
//! Usage from Python:
//!
//! ```text
//! from tutte_py import Graph, tutte, chromatic, beta, sandpile
//! g = Graph.from_text("n 4\n0 1\n0 2\n1 2\n1 3\n2 3\n")
//! print(tutte(g))                 # x^3 + 2*x^2 + x + 2*x*y + y + y^2
//! print(tutte(g).evaluate(1, 1))  # 8 spanning trees
//! ```

use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use tutte::sandpile::Sandpile;
use tutte::specializations;
use tutte::{BiPoly, Budget, MultiGraph, Rational};

fn to_py_err(e: tutte::Error) -> PyErr {
    match e {
        tutte::Error::Budget { .. } => PyRuntimeError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

/// A labeled multigraph: loops and parallel edges allowed, vertices
/// numbered from zero, edges numbered in insertion order.
#[pyclass(skip_from_py_object)]
#[derive(Clone)]
pub struct Graph {
    inner: MultiGraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(vertex_count: usize) -> Self {
        Graph {
            inner: MultiGraph::new(vertex_count),
        }
    }

    /// Parse the edge-list text format: a header line `n <vertex count>`
    /// followed by one `u v` pair per edge.
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Graph> {
        Ok(Graph {
            inner: MultiGraph::from_text(text).map_err(to_py_err)?,
        })
    }

    /// Add an edge (a loop when u == v) and return its id.
    fn add_edge(&mut self, u: usize, v: usize) -> PyResult<usize> {
        self.inner.add_edge(u, v).map_err(to_py_err)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    #[getter]
    fn nullity(&self) -> usize {
        self.inner.nullity()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// An exact bivariate polynomial with integer coefficients.
#[pyclass(eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
pub struct Polynomial {
    inner: BiPoly,
}

#[pymethods]
impl Polynomial {
    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.inner)
    }

    /// The coefficient of x^i y^j.
    fn coefficient(&self, i: u32, j: u32) -> BigInt {
        self.inner.coefficient(i, j)
    }

    /// All nonzero terms as (i, j, coefficient), x-degree descending.
    fn terms(&self) -> Vec<(u32, u32, BigInt)> {
        self.inner.terms()
    }

    /// Exact evaluation at an integer point.
    fn evaluate(&self, x: BigInt, y: BigInt) -> BigInt {
        self.inner
            .eval(&Rational::from(x), &Rational::from(y))
            .to_integer()
    }
}

/// The Tutte polynomial of a graph.
#[pyfunction(name = "tutte")]
fn tutte_polynomial(g: &Graph) -> Polynomial {
    Polynomial {
        inner: tutte::tutte(&g.inner),
    }
}

/// Chromatic polynomial coefficients by ascending power of the color count.
#[pyfunction]
fn chromatic(g: &Graph) -> Vec<BigInt> {
    specializations::chromatic_polynomial(&g.inner)
        .coeffs()
        .to_vec()
}

/// Flow polynomial coefficients by ascending power of the group order.
#[pyfunction]
fn flow(g: &Graph) -> Vec<BigInt> {
    specializations::flow_polynomial(&g.inner).coeffs().to_vec()
}

/// All-terminal reliability coefficients by ascending power of the edge
/// survival probability. Raises ValueError on a disconnected graph.
#[pyfunction]
fn reliability(g: &Graph) -> PyResult<Vec<BigInt>> {
    Ok(specializations::reliability_polynomial(&g.inner)
        .map_err(to_py_err)?
        .coeffs()
        .to_vec())
}

/// The beta invariant, computed by the subset expansion.
#[pyfunction]
fn beta(g: &Graph) -> PyResult<BigInt> {
    specializations::beta_invariant(&g.inner, &Budget::default()).map_err(to_py_err)
}

/// Recurrent sandpile configurations for the given sink.
///
/// Returns (configs, histogram): each config lists the heights of the
/// non-sink vertices in ascending vertex order, and histogram[k] counts
/// the recurrent configurations at level k.
#[pyfunction]
fn sandpile(g: &Graph, sink: usize) -> PyResult<(Vec<Vec<u64>>, Vec<BigInt>)> {
    let pile = Sandpile::new(g.inner.clone(), sink).map_err(to_py_err)?;
    let budget = Budget::default();
    let configs = pile.recurrent_configs(&budget).map_err(to_py_err)?;
    let histogram = pile
        .critical_config_polynomial(&budget)
        .map_err(to_py_err)?
        .coeffs()
        .to_vec();
    Ok((
        configs.into_iter().map(|c| c.heights).collect(),
        histogram,
    ))
}

#[pymodule]
fn tutte_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Polynomial>()?;
    m.add_function(wrap_pyfunction!(tutte_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic, m)?)?;
    m.add_function(wrap_pyfunction!(flow, m)?)?;
    m.add_function(wrap_pyfunction!(reliability, m)?)?;
    m.add_function(wrap_pyfunction!(beta, m)?)?;
    m.add_function(wrap_pyfunction!(sandpile, m)?)?;
    Ok(())
}
