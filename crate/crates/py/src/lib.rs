//! Python-facing wrapper around the verification engine: models, identity
//! suites, the genus-1 solver, and the Φ ladder.

use std::path::PathBuf;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use gwv_core::calculus::Engine;
use gwv_core::model::FrobeniusModel;
use gwv_core::registry::{run_suite, RunOptions, Suite};
use gwv_core::report::SuiteReport;
use gwv_core::series::Monomial;
use gwv_core::solver::{self, Method};
use gwv_core::{models, rat};

fn value_err(msg: impl Into<String>) -> PyErr {
    PyValueError::new_err(msg.into())
}

/// A quantum-cohomology model together with its evaluation engine.
#[pyclass]
struct Model {
    engine: Engine,
}

impl Model {
    fn from_model(m: FrobeniusModel) -> Self {
        Model {
            engine: Engine::new(m),
        }
    }
}

fn report_to_py(py: Python<'_>, report: &SuiteReport) -> PyResult<PyObject> {
    let records = PyList::empty_bound(py);
    for r in &report.records {
        let d = PyDict::new_bound(py);
        d.set_item("identity", &r.identity)?;
        d.set_item("params", r.params.clone())?;
        d.set_item("window_t", r.window_t)?;
        d.set_item("max_q", r.max_q)?;
        d.set_item("pass", r.pass)?;
        if let Some(w) = &r.witness {
            let wd = PyDict::new_bound(py);
            wd.set_item("component", w.component)?;
            wd.set_item("monomial", &w.monomial)?;
            wd.set_item("value", &w.value)?;
            d.set_item("witness", wd)?;
        }
        if let Some(n) = &r.note {
            d.set_item("note", n)?;
        }
        records.append(d)?;
    }
    Ok(records.into())
}

#[pymethods]
impl Model {
    /// Built-in models: point, p1, p2, p1-classical, p2-classical.
    #[staticmethod]
    #[pyo3(signature = (name, t_degree=8, novikov=3))]
    fn builtin(name: &str, t_degree: i64, novikov: i64) -> PyResult<Model> {
        models::builtin(name, t_degree, novikov)
            .map(Model::from_model)
            .map_err(|e| value_err(e.to_string()))
    }

    /// Load a model file (UTF-8 JSON).
    #[staticmethod]
    fn load(path: PathBuf) -> PyResult<Model> {
        FrobeniusModel::load(&path)
            .map(Model::from_model)
            .map_err(|e| value_err(e.to_string()))
    }

    fn save(&self, path: PathBuf) -> PyResult<()> {
        self.engine
            .model
            .save(&path)
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))
    }

    #[getter]
    fn name(&self) -> String {
        self.engine.model.name.clone()
    }

    #[getter]
    fn dimension(&self) -> i64 {
        self.engine.model.d
    }

    #[getter]
    fn basis_size(&self) -> usize {
        self.engine.model.n
    }

    #[getter]
    fn has_genus1(&self) -> bool {
        self.engine.model.f1.is_some()
    }

    fn __repr__(&self) -> String {
        format!(
            "Model({}, N={}, t_degree={}, novikov={})",
            self.engine.model.name,
            self.engine.model.n,
            self.engine.model.shape.trunc_t,
            self.engine.model.shape.max_q
        )
    }

    /// Run the axiom suite; returns a list of record dicts.
    fn validate(&self, py: Python<'_>) -> PyResult<PyObject> {
        let report = gwv_core::registry::validate_axioms(&self.engine.model);
        report_to_py(py, &report)
    }

    /// Run an identity suite. `suite` is one of axioms, core, derivations,
    /// applications, appendix, all.
    #[pyo3(signature = (suite="all", k_max=3, mutate_f1=None))]
    fn check(
        &self,
        py: Python<'_>,
        suite: &str,
        k_max: i64,
        mutate_f1: Option<&str>,
    ) -> PyResult<PyObject> {
        let suite =
            Suite::parse(suite).ok_or_else(|| value_err(format!("unknown suite {suite:?}")))?;
        let m = &self.engine.model;
        let mutate = match mutate_f1 {
            Some(slot) => Some(Monomial::parse(slot, m.n, m.shape.n_q).map_err(value_err)?),
            None => None,
        };
        let report = run_suite(
            m,
            &RunOptions {
                suite,
                k_max,
                mutate_f1: mutate,
                autosolve: true,
                jobs: None,
            },
        );
        report_to_py(py, &report)
    }

    /// Reconstruct the genus-1 potential; returns a dict with the solved
    /// slots, invariant table, and system diagnostics.
    #[pyo3(signature = (method="l1", max_q=None))]
    fn solve(&self, py: Python<'_>, method: &str, max_q: Option<i64>) -> PyResult<PyObject> {
        let method = match method {
            "l1" => Method::L1,
            "getzler" => Method::Getzler,
            other => return Err(value_err(format!("unknown method {other:?}"))),
        };
        let m = &self.engine.model;
        let max_q = max_q.unwrap_or(m.shape.max_q);
        let required = method.required_trunc_t(max_q);
        let working = if m.shape.trunc_t < required || m.shape.max_q != max_q {
            m.with_truncation(required.max(m.shape.trunc_t), max_q)
        } else {
            m.clone()
        };
        let r = solver::solve_f1(&working, method)
            .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
        let d = PyDict::new_bound(py);
        d.set_item("method", &r.method)?;
        d.set_item("rank", r.rank)?;
        d.set_item("rows", r.rows)?;
        d.set_item(
            "slots",
            r.slots
                .iter()
                .map(|s| (s.monomial.clone(), s.value.clone()))
                .collect::<Vec<_>>(),
        )?;
        d.set_item("unconstrained", r.unconstrained.clone())?;
        let inv: Vec<(i64, String)> = solver::elliptic_invariants(&working, &r, max_q)
            .into_iter()
            .map(|(deg, v)| (deg, rat::render(&v)))
            .collect();
        d.set_item("invariants", inv)?;
        d.set_item("f1", r.f1.as_ref().map(|s| s.to_string()))?;
        Ok(d.into())
    }

    /// Φ_k as a display string of the exact truncated series.
    fn phi(&self, k: i64) -> PyResult<String> {
        if k < 0 {
            return Err(value_err("k must be ≥ 0"));
        }
        Ok(self.engine.phi(k).to_string())
    }

    /// The genus-1 gap function ⟨⟨E^k⟩⟩₁ − Φ_k (requires genus-1 data).
    fn gap(&self, k: i64) -> PyResult<String> {
        if self.engine.model.f1.is_none() {
            return Err(PyRuntimeError::new_err("model has no genus-1 potential"));
        }
        Ok(self.engine.gap(k).to_string())
    }

    /// The symmetric matrix A at (t = 0, q → 1) and its exact
    /// invertibility verdict.
    fn semisimplicity(&self) -> (Vec<Vec<String>>, bool) {
        let (a, invertible) = gwv_core::getzler::semisimplicity_matrix(&self.engine);
        let rows = a
            .iter()
            .map(|row| row.iter().map(rat::render).collect())
            .collect();
        (rows, invertible)
    }
}

/// Number of rational plane curves of degree d through 3d−1 points, as a
/// decimal string.
#[pyfunction]
fn kontsevich_n(d: i64) -> PyResult<String> {
    if d < 1 {
        return Err(value_err("degree must be ≥ 1"));
    }
    Ok(rat::render(&models::kontsevich_n(d)))
}

#[pymodule]
fn gwv(_py: Python<'_>, m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Model>()?;
    m.add_function(wrap_pyfunction!(kontsevich_n, m)?)?;
    Ok(())
}
