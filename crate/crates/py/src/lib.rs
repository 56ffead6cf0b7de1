//! Python bindings: a `Quiver` class carrying the integer engine and the
//! analysis entry points, plus corpus enumeration. Reports cross the
//! boundary as JSON strings so Python sees the same schema the CLI emits.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use radsq_core::error::CheckError;
use radsq_core::ext;
use radsq_core::harness::{self, CorpusMode, CorpusSpec, OracleConfig};
use radsq_core::rep;

fn usage<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A quiver with arrow multiplicities, the Gabriel quiver of a
/// radical-square-zero algebra.
#[pyclass(name = "Quiver", from_py_object)]
#[derive(Clone)]
struct PyQuiver {
    inner: radsq_core::Quiver,
}

#[pymethods]
impl PyQuiver {
    /// Build from an adjacency matrix (list of equal-length rows).
    #[new]
    fn new(adj: Vec<Vec<u32>>) -> PyResult<Self> {
        Ok(PyQuiver {
            inner: radsq_core::Quiver::new(adj).map_err(usage)?,
        })
    }

    /// Parse the text file format (header line n, then n rows).
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyQuiver {
            inner: radsq_core::Quiver::parse(text).map_err(usage)?,
        })
    }

    /// The oriented cycle with m parallel closing arrows.
    #[staticmethod]
    fn delta(n: usize, m: u32) -> PyResult<Self> {
        if n < 1 || m < 1 {
            return Err(PyValueError::new_err("delta needs n >= 1 and m >= 1"));
        }
        Ok(PyQuiver {
            inner: radsq_core::Quiver::delta(n, m),
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn adjacency(&self) -> Vec<Vec<u32>> {
        self.inner.adj().to_vec()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn sinks(&self) -> Vec<usize> {
        self.inner.sinks()
    }

    fn sources(&self) -> Vec<usize> {
        self.inner.sources()
    }

    fn opposite(&self) -> PyQuiver {
        PyQuiver {
            inner: self.inner.opposite(),
        }
    }

    /// `(n, m, t, cycle)` when the quiver is a Δ cycle, else `None`.
    fn detect_delta(&self) -> Option<(usize, u32, u64, Vec<usize>)> {
        self.inner
            .detect_delta_shape()
            .map(|s| (s.n, s.m, s.t, s.cycle))
    }

    fn is_self_injective(&self) -> bool {
        self.inner.is_self_injective()
    }

    fn is_simple_ring(&self) -> bool {
        self.inner.is_simple_ring()
    }

    /// Whether the indecomposable projective at the vertex is injective.
    fn proj_is_injective(&self, vertex: usize) -> PyResult<bool> {
        if vertex >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        Ok(self.inner.proj_is_injective(vertex))
    }

    /// `(a, b)` with the arrow value `a*b` attached to an arrow `i -> j`.
    fn arrow_value(&self, i: usize, j: usize) -> PyResult<(u64, u64)> {
        self.inner.arrow_value(i, j).map_err(usage)
    }

    /// Multiplicity vector of the syzygy of a semisimple module.
    fn syzygy(&self, v: Vec<u64>) -> PyResult<Vec<u64>> {
        ext::syzygy_vector(&self.inner, &ext::SimpleVector(v))
            .map(|w| w.0)
            .map_err(usage)
    }

    /// `dim Ext^i(S(j), Λ)` for `i = 0..=depth`.
    fn ext_profile(&self, j: usize, depth: usize) -> PyResult<Vec<u64>> {
        ext::ext_profile(&self.inner, j, depth)
            .map(|p| p.dims)
            .map_err(usage)
    }

    /// Least degree witnessing nonvanishing against Λ (see the CLI docs).
    fn nakayama_bound(&self, j: usize) -> PyResult<usize> {
        if j >= self.inner.n() {
            return Err(PyValueError::new_err("vertex out of range"));
        }
        if !self.inner.is_connected() {
            return Err(PyValueError::new_err("the quiver must be connected"));
        }
        ext::nakayama_bound(&self.inner, j).map_err(|v| PyRuntimeError::new_err(v.to_string()))
    }

    /// The full analysis report as a JSON string (same schema as the CLI).
    fn analyze_json(&self) -> PyResult<String> {
        match harness::run_all_checks(&self.inner, &OracleConfig::default()) {
            Ok(report) => serde_json::to_string(&report).map_err(usage),
            Err(CheckError::Usage(u)) => Err(usage(u)),
            Err(CheckError::Violation(v)) => Err(PyRuntimeError::new_err(v.to_string())),
        }
    }

    /// Distinguished-module summary on a Δ quiver with t > 1, over F_p.
    /// Returns a JSON object with dims, length, multiplicities and checks.
    fn distinguished_module_json(&self, p: u64) -> PyResult<String> {
        let shape = self
            .inner
            .detect_delta_shape()
            .filter(|s| s.t > 1)
            .ok_or_else(|| PyValueError::new_err("needs a Δ-shaped quiver with t > 1"))?;
        let dm = rep::distinguished_module(&self.inner, &shape, p).map_err(usage)?;
        let value = serde_json::json!({
            "start": shape.start(),
            "end": shape.end(),
            "dims": dm.module.dims(),
            "length": dm.length,
            "presentation_coker_dim": dm.presentation_coker_dim,
            "syzygy_multiplicity": dm.syzygy_multiplicity,
            "top_multiplicity": dm.top_multiplicity,
            "claimed_length": dm.claimed_length,
            "length_matches_claim": dm.length_matches_claim(),
            "checks": dm.checks,
        });
        serde_json::to_string(&value).map_err(usage)
    }

    fn __repr__(&self) -> String {
        format!(
            "Quiver(n={}, arrows={})",
            self.inner.n(),
            self.inner.arrow_count()
        )
    }

    fn __eq__(&self, other: &PyQuiver) -> bool {
        self.inner == other.inner
    }
}

/// Enumerate connected quivers and return one JSON report per quiver.
/// `mode` is "exhaustive" or "random"; random mode needs count and seed.
#[pyfunction]
#[pyo3(signature = (n, maxmult, mode="exhaustive", count=None, seed=None))]
fn enumerate_reports(
    n: usize,
    maxmult: u32,
    mode: &str,
    count: Option<usize>,
    seed: Option<u64>,
) -> PyResult<Vec<String>> {
    let mode = match mode {
        "exhaustive" => CorpusMode::Exhaustive,
        "random" => CorpusMode::Random {
            count: count.ok_or_else(|| PyValueError::new_err("random mode needs count"))?,
            seed: seed.ok_or_else(|| PyValueError::new_err("random mode needs seed"))?,
        },
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown mode {other:?}; use exhaustive or random"
            )))
        }
    };
    let spec = CorpusSpec {
        n,
        max_entry: maxmult,
        mode,
    };
    let quivers = harness::enumerate_connected(&spec).map_err(usage)?;
    let config = OracleConfig::default();
    let mut lines = Vec::new();
    for q in quivers {
        match harness::run_all_checks(&q, &config) {
            Ok(report) => lines.push(serde_json::to_string(&report).map_err(usage)?),
            Err(CheckError::Usage(u)) => return Err(usage(u)),
            Err(CheckError::Violation(v)) => {
                return Err(PyRuntimeError::new_err(v.to_string()))
            }
        }
    }
    Ok(lines)
}

#[pymodule]
fn radsq(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyQuiver>()?;
    m.add_function(wrap_pyfunction!(enumerate_reports, m)?)?;
    Ok(())
}
