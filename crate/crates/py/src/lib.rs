//! Python bindings. Parameter sets are a class; results come back as plain
//! floats, complex numbers, lists and dicts.

use num_complex::Complex64;
use pyo3::exceptions::{PyArithmeticError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use sgcoherence::oracle::{self, QuadratureSpec};
use sgcoherence::validation;
use sgcoherence::{AmplitudePolicy, Branch, EntropyConvention, Error, SeparationRegime, Spacing};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ConvergenceFailure { .. } => PyArithmeticError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn parse<T: std::str::FromStr<Err = String>>(s: &str) -> PyResult<T> {
    s.parse().map_err(PyValueError::new_err)
}

fn parse_branch(s: &str) -> PyResult<Branch> {
    match s {
        "plus" | "+" => Ok(Branch::Plus),
        "minus" | "-" => Ok(Branch::Minus),
        other => Err(PyValueError::new_err(format!(
            "unknown branch `{other}` (expected plus|minus)"
        ))),
    }
}

fn parse_separation(s: &str) -> PyResult<SeparationRegime> {
    match s {
        "short" => Ok(SeparationRegime::Short),
        "long" => Ok(SeparationRegime::Long),
        other => Err(PyValueError::new_err(format!(
            "unknown regime `{other}` (expected short|long)"
        ))),
    }
}

fn quadrature(abs_tol: Option<f64>, max_subdivisions: Option<usize>) -> QuadratureSpec {
    let d = QuadratureSpec::default();
    QuadratureSpec {
        abs_tol: abs_tol.unwrap_or(d.abs_tol),
        max_subdivisions: max_subdivisions.unwrap_or(d.max_subdivisions),
        ..d
    }
}

/// Physical parameters and spin amplitudes, SI units.
#[pyclass(name = "ExperimentParams", frozen)]
pub struct PyParams {
    inner: sgcoherence::ExperimentParams,
}

#[pymethods]
impl PyParams {
    #[new]
    #[pyo3(signature = (mass, magnetic_moment, field_gradient, sigma0, alpha=None, beta=None, strict=false))]
    fn new(
        mass: f64,
        magnetic_moment: f64,
        field_gradient: f64,
        sigma0: f64,
        alpha: Option<Complex64>,
        beta: Option<Complex64>,
        strict: bool,
    ) -> PyResult<Self> {
        let bell = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let policy = if strict {
            AmplitudePolicy::Strict
        } else {
            AmplitudePolicy::Normalize
        };
        sgcoherence::ExperimentParams::new(
            mass,
            magnetic_moment,
            field_gradient,
            sigma0,
            alpha.unwrap_or(bell),
            beta.unwrap_or(bell),
            policy,
        )
        .map(|inner| Self { inner })
        .map_err(to_py)
    }

    #[getter]
    fn mass(&self) -> f64 {
        self.inner.mass()
    }

    #[getter]
    fn magnetic_moment(&self) -> f64 {
        self.inner.magnetic_moment()
    }

    #[getter]
    fn field_gradient(&self) -> f64 {
        self.inner.field_gradient()
    }

    #[getter]
    fn sigma0(&self) -> f64 {
        self.inner.sigma0()
    }

    #[getter]
    fn alpha(&self) -> Complex64 {
        self.inner.alpha()
    }

    #[getter]
    fn beta(&self) -> Complex64 {
        self.inner.beta()
    }

    #[getter]
    fn force(&self) -> f64 {
        self.inner.force()
    }

    #[getter]
    fn spreading_time(&self) -> f64 {
        self.inner.spreading_time()
    }

    fn __repr__(&self) -> String {
        let p = &self.inner;
        format!(
            "ExperimentParams(mass={:e}, magnetic_moment={:e}, field_gradient={:e}, sigma0={:e}, alpha={}, beta={})",
            p.mass(),
            p.magnetic_moment(),
            p.field_gradient(),
            p.sigma0(),
            p.alpha(),
            p.beta()
        )
    }
}

#[pyfunction]
fn typical_params() -> PyParams {
    PyParams {
        inner: sgcoherence::typical_params(),
    }
}

#[pyfunction]
fn kinematics<'py>(py: Python<'py>, params: &PyParams, t: f64) -> PyResult<Bound<'py, PyDict>> {
    let k = sgcoherence::kinematics(&params.inner, t).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("t", k.t)?;
    d.set_item("delta_p", k.delta_p)?;
    d.set_item("delta_z", k.delta_z)?;
    d.set_item("delta_z_bar", k.delta_z_bar)?;
    d.set_item("sigma_t", k.sigma_t)?;
    Ok(d)
}

#[pyfunction]
fn packet_amplitude(params: &PyParams, branch: &str, z: f64, t: f64) -> PyResult<Complex64> {
    sgcoherence::packet_amplitude(&params.inner, parse_branch(branch)?, z, t).map_err(to_py)
}

#[pyfunction]
fn packet_density(params: &PyParams, branch: &str, z: f64, t: f64) -> PyResult<f64> {
    sgcoherence::packet_density(&params.inner, parse_branch(branch)?, z, t).map_err(to_py)
}

#[pyfunction]
fn total_position_density(params: &PyParams, z: f64, t: f64) -> PyResult<f64> {
    sgcoherence::total_position_density(&params.inner, z, t).map_err(to_py)
}

#[pyfunction]
fn coherence(params: &PyParams, t: f64) -> PyResult<f64> {
    sgcoherence::coherence(&params.inner, t).map_err(to_py)
}

/// The 2×2 reduced spin density matrix as nested lists, rows (+, −).
#[pyfunction]
fn spin_density_matrix(params: &PyParams, t: f64) -> PyResult<Vec<Vec<Complex64>>> {
    let m = sgcoherence::spin_density_matrix(&params.inner, t)
        .map_err(to_py)?
        .to_matrix();
    Ok(m.iter().map(|row| row.to_vec()).collect())
}

#[pyfunction]
#[pyo3(signature = (params, t, convention="paper"))]
fn linear_entropy(params: &PyParams, t: f64, convention: &str) -> PyResult<f64> {
    sgcoherence::linear_entropy(&params.inner, t, parse::<EntropyConvention>(convention)?).map_err(to_py)
}

#[pyfunction]
fn chi(params: &PyParams) -> f64 {
    sgcoherence::chi(&params.inner)
}

#[pyfunction]
fn decoherence_time(params: &PyParams) -> f64 {
    sgcoherence::decoherence_time(&params.inner)
}

#[pyfunction]
fn tau1(params: &PyParams) -> f64 {
    sgcoherence::tau1(&params.inner)
}

#[pyfunction]
fn tau2(params: &PyParams) -> f64 {
    sgcoherence::tau2(&params.inner)
}

#[pyfunction]
fn regime_report<'py>(py: Python<'py>, params: &PyParams) -> PyResult<Bound<'py, PyDict>> {
    let r = sgcoherence::regime_report(&params.inner).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("chi", r.chi)?;
    d.set_item("regime", r.regime.as_str())?;
    d.set_item("tau", r.tau)?;
    d.set_item("tau1", r.tau1)?;
    d.set_item("tau2", r.tau2)?;
    d.set_item("sep_position_at_tau", r.sep_position_at_tau)?;
    d.set_item("sep_momentum_at_tau", r.sep_momentum_at_tau)?;
    Ok(d)
}

#[pyfunction]
fn separation_position_ratio(params: &PyParams, t: f64) -> PyResult<f64> {
    sgcoherence::separation_position_ratio(&params.inner, t).map_err(to_py)
}

#[pyfunction]
fn separation_position_approx(params: &PyParams, t: f64, regime: &str) -> PyResult<f64> {
    sgcoherence::separation_position_approx(&params.inner, t, parse_separation(regime)?).map_err(to_py)
}

#[pyfunction]
fn separation_momentum_ratio(params: &PyParams, t: f64) -> PyResult<f64> {
    sgcoherence::separation_momentum_ratio(&params.inner, t).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (params, t_min, t_max, samples=201, spacing="linear"))]
fn coherence_series<'py>(
    py: Python<'py>,
    params: &PyParams,
    t_min: f64,
    t_max: f64,
    samples: usize,
    spacing: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let s = sgcoherence::coherence_series(&params.inner, t_min, t_max, samples, parse::<Spacing>(spacing)?)
        .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("t_s", s.times)?;
    d.set_item("coherence", s.coherence)?;
    d.set_item("entropy_paper", s.entropy_paper)?;
    d.set_item("entropy_purity", s.entropy_purity)?;
    d.set_item("sep_position", s.sep_position)?;
    d.set_item("sep_momentum", s.sep_momentum)?;
    Ok(d)
}

/// Densities on `samples` points; the window defaults to ±(Δz̄ + 6σ(t)).
#[pyfunction]
#[pyo3(signature = (params, t, z_min=None, z_max=None, samples=1001))]
fn density_profile<'py>(
    py: Python<'py>,
    params: &PyParams,
    t: f64,
    z_min: Option<f64>,
    z_max: Option<f64>,
    samples: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let (lo, hi) = sgcoherence::default_profile_window(&params.inner, t).map_err(to_py)?;
    let p = sgcoherence::density_profile(&params.inner, t, z_min.unwrap_or(lo), z_max.unwrap_or(hi), samples)
        .map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("z_m", p.z)?;
    d.set_item("density_plus", p.density_plus)?;
    d.set_item("density_minus", p.density_minus)?;
    d.set_item("density_total", p.density_total)?;
    Ok(d)
}

/// `(value, error_estimate)` of the numerical overlap ⟨φ₋|φ₊⟩.
#[pyfunction]
#[pyo3(signature = (params, t, abs_tol=None, max_subdivisions=None))]
fn overlap_quadrature(
    params: &PyParams,
    t: f64,
    abs_tol: Option<f64>,
    max_subdivisions: Option<usize>,
) -> PyResult<(Complex64, f64)> {
    let est = oracle::overlap_quadrature(&params.inner, t, &quadrature(abs_tol, max_subdivisions)).map_err(to_py)?;
    Ok((est.value, est.error))
}

#[pyfunction]
#[pyo3(signature = (params, tol_rel=1e-12))]
fn decoherence_time_bisection(params: &PyParams, tol_rel: f64) -> PyResult<f64> {
    oracle::decoherence_time_bisection(&params.inner, tol_rel)
        .map(|b| b.root)
        .map_err(to_py)
}

/// One dict per check: name, measured, bound, passed, note.
#[pyfunction]
#[pyo3(signature = (params, abs_tol=None, max_subdivisions=None))]
fn run_validation<'py>(
    py: Python<'py>,
    params: &PyParams,
    abs_tol: Option<f64>,
    max_subdivisions: Option<usize>,
) -> PyResult<Vec<Bound<'py, PyDict>>> {
    let report = validation::run_validation(&params.inner, &quadrature(abs_tol, max_subdivisions));
    report
        .checks
        .into_iter()
        .map(|c| {
            let d = PyDict::new(py);
            d.set_item("name", c.name)?;
            d.set_item("measured", c.measured)?;
            d.set_item("bound", c.bound)?;
            d.set_item("passed", c.passed)?;
            d.set_item("note", c.note)?;
            Ok(d)
        })
        .collect()
}

#[pymodule]
fn sgcoherence_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("HBAR", sgcoherence::HBAR)?;
    m.add("BOHR_MAGNETON", sgcoherence::BOHR_MAGNETON)?;
    m.add_class::<PyParams>()?;
    m.add_function(wrap_pyfunction!(typical_params, m)?)?;
    m.add_function(wrap_pyfunction!(kinematics, m)?)?;
    m.add_function(wrap_pyfunction!(packet_amplitude, m)?)?;
    m.add_function(wrap_pyfunction!(packet_density, m)?)?;
    m.add_function(wrap_pyfunction!(total_position_density, m)?)?;
    m.add_function(wrap_pyfunction!(coherence, m)?)?;
    m.add_function(wrap_pyfunction!(spin_density_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(linear_entropy, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(decoherence_time, m)?)?;
    m.add_function(wrap_pyfunction!(tau1, m)?)?;
    m.add_function(wrap_pyfunction!(tau2, m)?)?;
    m.add_function(wrap_pyfunction!(regime_report, m)?)?;
    m.add_function(wrap_pyfunction!(separation_position_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(separation_position_approx, m)?)?;
    m.add_function(wrap_pyfunction!(separation_momentum_ratio, m)?)?;
    m.add_function(wrap_pyfunction!(coherence_series, m)?)?;
    m.add_function(wrap_pyfunction!(density_profile, m)?)?;
    m.add_function(wrap_pyfunction!(overlap_quadrature, m)?)?;
    m.add_function(wrap_pyfunction!(decoherence_time_bisection, m)?)?;
    m.add_function(wrap_pyfunction!(run_validation, m)?)?;
    Ok(())
}
