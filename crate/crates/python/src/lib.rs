//! Python bindings for `loopindex`. Reports come back as plain dicts with
//! the same keys as the JSON the command-line tool prints.

use pyo3::create_exception;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

use loopindex::circle_index::{index_equality_report, CircleSubgroup};
use loopindex::hofer::{hofer_length_circle, positive_norm as exact_positive_norm};
use loopindex::loop_morse::{omega_g_series, perfectness_check};
use loopindex::quantum::{psi_leading, Cp1Ring, DEFAULT_AREA};
use loopindex::root_system::fraction_string;
use loopindex::variational::{hessian_spectrum as spectrum, Functional, DEFAULT_STEP, DEFAULT_TOL};
use loopindex::{Coweight, Error, RootSystem as CoreRootSystem, SystemLabel};

create_exception!(pyloopindex, LoopIndexError, PyValueError);

fn err(e: Error) -> PyErr {
    match e {
        Error::NumericalFailure(msg) => PyRuntimeError::new_err(msg),
        other => LoopIndexError::new_err(other.to_string()),
    }
}

fn to_py<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A supported root system such as `RootSystem("B3")`.
#[pyclass(name = "RootSystem", frozen, module = "pyloopindex")]
struct RootSystem {
    inner: CoreRootSystem,
}

impl RootSystem {
    fn coweight(&self, xi: Vec<i64>) -> PyResult<Coweight> {
        let xi = Coweight::new(xi);
        if xi.rank() != self.inner.rank() {
            return Err(err(Error::Dimension {
                expected: self.inner.rank(),
                got: xi.rank(),
            }));
        }
        Ok(xi)
    }
}

#[pymethods]
impl RootSystem {
    #[new]
    fn new(label: &str) -> PyResult<Self> {
        let label: SystemLabel = label.parse().map_err(err)?;
        Ok(Self {
            inner: CoreRootSystem::from_label(label).map_err(err)?,
        })
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan_matrix().to_vec()
    }

    fn positive_roots(&self) -> Vec<Vec<i64>> {
        self.inner.positive_roots().to_vec()
    }

    fn weyl_order(&self) -> u64 {
        self.inner.weyl_order()
    }

    fn exponents(&self) -> Vec<u32> {
        self.inner.exponents()
    }

    /// Exact inner product of two coweights as a `"p/q"` string.
    fn inner(&self, a: Vec<i64>, b: Vec<i64>) -> PyResult<String> {
        let q = self.inner.inner(&self.coweight(a)?, &self.coweight(b)?).map_err(err)?;
        Ok(fraction_string(&q))
    }

    fn weyl_orbit(&self, xi: Vec<i64>) -> PyResult<Vec<Vec<i64>>> {
        let orbit = self.inner.weyl_orbit(&self.coweight(xi)?).map_err(err)?;
        Ok(orbit.into_iter().map(|c| c.0).collect())
    }

    fn dominant_representative(&self, xi: Vec<i64>) -> PyResult<Vec<i64>> {
        Ok(self.inner.dominant_representative(&self.coweight(xi)?).map_err(err)?.0)
    }

    fn is_regular(&self, xi: Vec<i64>) -> PyResult<bool> {
        Ok(self.inner.is_regular(&self.coweight(xi)?))
    }

    /// Weights at the maximum, virtual index and conjugate-point index.
    fn index_report<'py>(&self, py: Python<'py>, xi: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
        let gamma = CircleSubgroup::new(&self.inner, self.coweight(xi)?).map_err(err)?;
        to_py(py, &index_equality_report(&gamma).map_err(err)?)
    }

    /// Hofer length of the circle subgroup: `(squared as "p/q", float)`.
    fn hofer_length(&self, xi: Vec<i64>) -> PyResult<(String, f64)> {
        let r = hofer_length_circle(&self.inner, &self.coweight(xi)?).map_err(err)?;
        Ok((fraction_string(&r.value_squared), r.value_float))
    }

    fn positive_norm<'py>(&self, py: Python<'py>, eta: Vec<i64>, xi: Vec<i64>) -> PyResult<Bound<'py, PyAny>> {
        let r = exact_positive_norm(&self.inner, &self.coweight(eta)?, &self.coweight(xi)?).map_err(err)?;
        to_py(py, &r)
    }

    /// Coefficients of the Poincaré series of the based loop group up to `t^cutoff`.
    fn omega_series(&self, cutoff: usize) -> PyResult<Vec<i64>> {
        Ok(omega_g_series(&self.inner, cutoff).map_err(err)?.coeffs)
    }

    /// `True` when the Morse–Bott series equals the product over exponents.
    fn is_perfect(&self, cutoff: usize) -> PyResult<bool> {
        let (morse, oracle) = perfectness_check(&self.inner, cutoff).map_err(err)?;
        Ok(morse == oracle)
    }

    fn __repr__(&self) -> String {
        format!("RootSystem('{}')", self.inner.label())
    }
}

/// Spectrum of the discretized energy or Hofer-length Hessian at the
/// winding-`m` geodesic in SU(2).
#[pyfunction]
#[pyo3(signature = (functional, m, n = 64, h = DEFAULT_STEP, tol = DEFAULT_TOL))]
fn hessian_spectrum<'py>(
    py: Python<'py>,
    functional: &str,
    m: u32,
    n: usize,
    h: f64,
    tol: f64,
) -> PyResult<Bound<'py, PyAny>> {
    let f: Functional = functional.parse().map_err(err)?;
    let report = py.detach(|| spectrum(f, m, n, h, tol)).map_err(err)?;
    to_py(py, &report)
}

/// Leading term of the quantum class of the A1 circle action `xi` on CP¹.
#[pyfunction]
#[pyo3(signature = (xi, area = DEFAULT_AREA, sign = 1))]
fn seidel_cp1<'py>(py: Python<'py>, xi: i64, area: f64, sign: i8) -> PyResult<Bound<'py, PyAny>> {
    let a1 = CoreRootSystem::from_label("A1".parse().map_err(err)?).map_err(err)?;
    let length = hofer_length_circle(&a1, &Coweight::new(vec![xi]))
        .map_err(err)?
        .value_float;
    let ring = Cp1Ring::new(area).map_err(err)?;
    to_py(py, &psi_leading(&ring, length, sign, vec![]).map_err(err)?)
}

/// Run the command-line tool in-process: `(exit_code, stdout, stderr)`.
#[pyfunction]
fn run_cli(args: Vec<String>) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut errs = Vec::new();
    let argv = std::iter::once("loopindex".to_string()).chain(args);
    let code = loopindex::cli::run(argv, &mut out, &mut errs);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&errs).into_owned(),
    )
}

#[pymodule]
pub fn pyloopindex(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<RootSystem>()?;
    m.add_function(wrap_pyfunction!(hessian_spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(seidel_cp1, m)?)?;
    m.add_function(wrap_pyfunction!(run_cli, m)?)?;
    m.add("LoopIndexError", m.py().get_type::<LoopIndexError>())?;
    m.add("DEFAULT_AREA", DEFAULT_AREA)?;
    Ok(())
}
