//! Python bindings. Rationals cross as `fractions.Fraction`, big integers as
//! `int`.

use hexamoment::engine::{self, EnumLimit, Sampler};
use hexamoment::numeric::{BigInt, Rational};
use hexamoment::pp::{self, BoxDims};
use hexamoment::qcomb::{self, NkParams, Shape};
use hexamoment::stats::{self, MomentReport};
use hexamoment::verify::{self, VerifyOptions};
use hexamoment::Error;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

pyo3::create_exception!(hexamoment, LimitExceeded, PyRuntimeError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::TooLarge { .. } => LimitExceeded::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn dims(a: usize, b: usize, c: usize) -> PyResult<BoxDims> {
    BoxDims::new(a, b, c).map_err(to_py)
}

fn limit(limit: Option<u64>) -> EnumLimit {
    limit.map(EnumLimit::new).unwrap_or_default()
}

/// A plane partition in an `a x b x c` box.
#[pyclass(
    name = "PlanePartition",
    module = "hexamoment",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPlanePartition(pp::PlanePartition);

#[pymethods]
impl PyPlanePartition {
    #[new]
    fn new(rows: Vec<Vec<usize>>, c: usize) -> PyResult<Self> {
        let a = rows.len();
        let b = rows.first().map_or(0, Vec::len);
        let d = dims(a, b, c)?;
        pp::PlanePartition::from_rows(d, &rows).map(Self).map_err(to_py)
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<usize>> {
        self.0.rows()
    }

    #[getter]
    fn dims(&self) -> (usize, usize, usize) {
        let d = self.0.dims();
        (d.a(), d.b(), d.c())
    }

    fn volume(&self) -> usize {
        self.0.volume()
    }

    fn complement(&self) -> Self {
        Self(self.0.complement())
    }

    fn transpose_complement(&self) -> PyResult<Self> {
        self.0.transpose_complement().map(Self).map_err(to_py)
    }

    /// Lowest vertices `(x, y)` of the horizontal lozenges.
    fn horizontal_positions(&self) -> Vec<(i64, i64)> {
        self.0.horizontal_positions().iter().map(|p| (p.x, p.y)).collect()
    }

    fn svg(&self) -> String {
        pp::render_svg(&self.0.to_tiling())
    }

    fn ascii(&self) -> String {
        pp::render_ascii(&self.0.to_tiling())
    }

    fn __repr__(&self) -> String {
        format!("PlanePartition({:?}, c={})", self.0.rows(), self.0.dims().c())
    }
}

#[pyfunction]
fn count_box(a: usize, b: usize, c: usize) -> PyResult<BigInt> {
    Ok(engine::count_box(dims(a, b, c)?))
}

/// `[(x, y, P(x, y)), ...]` over the whole table.
#[pyfunction]
fn prob_table(a: usize, b: usize, c: usize) -> PyResult<Vec<(i64, i64, Rational)>> {
    let t = stats::prob_table(dims(a, b, c)?);
    Ok(t.entries().map(|(x, y, p)| (x, y, p.clone())).collect())
}

/// `[[E(1, 1), ...], ...]`.
#[pyfunction]
fn expected_entries(a: usize, b: usize, c: usize) -> PyResult<Vec<Vec<Rational>>> {
    Ok(engine::expected_entries(dims(a, b, c)?))
}

#[pyfunction]
fn moments<'py>(py: Python<'py>, a: usize, b: usize, c: usize) -> PyResult<Bound<'py, PyDict>> {
    let r = MomentReport::from_table(&stats::prob_table(dims(a, b, c)?));
    let out = PyDict::new(py);
    out.set_item("horizontal", &r.horizontal)?;
    out.set_item("vertical", &r.vertical)?;
    out.set_item("closed_horizontal", &r.closed_horizontal)?;
    out.set_item("closed_vertical", &r.closed_vertical)?;
    out.set_item("split", r.split.to_vec())?;
    out.set_item("closed_split", r.closed_split.to_vec())?;
    out.set_item("consistent", r.consistent())?;
    Ok(out)
}

/// `(all_passed, [failure lines])`; sweeps sides up to `max`.
#[pyfunction]
#[pyo3(signature = (max = 3, limit = None))]
fn verify_sweep(py: Python<'_>, max: usize, limit: Option<u64>) -> PyResult<(bool, Vec<String>)> {
    let opts = VerifyOptions {
        limit: self::limit(limit),
        inject_fault: false,
    };
    let report = py.detach(|| verify::verify_sweep(max, opts)).map_err(to_py)?;
    Ok((
        report.all_passed(),
        report.failures().map(ToString::to_string).collect(),
    ))
}

#[pyfunction]
#[pyo3(signature = (a, b, c, seed, count = 1))]
fn sample(a: usize, b: usize, c: usize, seed: u64, count: usize) -> PyResult<Vec<PyPlanePartition>> {
    let mut s = Sampler::new(dims(a, b, c)?, seed);
    Ok((0..count).map(|_| PyPlanePartition(s.sample())).collect())
}

/// Coefficients of the hook-content polynomial, lowest power first.
#[pyfunction]
fn hook_content_gf(shape: Vec<usize>, max_entry: usize) -> PyResult<Vec<BigInt>> {
    let shape = Shape::from_padded(shape).map_err(to_py)?;
    Ok(qcomb::hook_content_gf(&shape, max_entry)
        .map_err(to_py)?
        .coeffs()
        .to_vec())
}

#[pyfunction]
fn mean_norm_ssyt(shape: Vec<usize>, max_entry: usize) -> PyResult<Rational> {
    let shape = Shape::from_padded(shape).map_err(to_py)?;
    qcomb::mean_norm_ssyt(&shape, max_entry).map_err(to_py)
}

/// `(A, S)` for the staircase arrays with boundary `k`.
#[pyfunction]
#[pyo3(signature = (a, n, c, k, limit = None))]
fn nk_counts(a: usize, n: usize, c: usize, k: Vec<usize>, limit: Option<u64>) -> PyResult<(BigInt, BigInt)> {
    let p = NkParams::new(a, n, c, k).map_err(to_py)?;
    qcomb::nk_counts(&p, self::limit(limit)).map_err(to_py)
}

#[pyfunction]
fn mean_norm_nk(a: usize, n: usize, c: usize, k: Vec<usize>) -> PyResult<Rational> {
    let p = NkParams::new(a, n, c, k).map_err(to_py)?;
    Ok(qcomb::mean_norm_nk(&p))
}

#[pymodule]
#[pyo3(name = "hexamoment")]
fn hexamoment_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPlanePartition>()?;
    m.add("LimitExceeded", m.py().get_type::<LimitExceeded>())?;
    m.add_function(wrap_pyfunction!(count_box, m)?)?;
    m.add_function(wrap_pyfunction!(prob_table, m)?)?;
    m.add_function(wrap_pyfunction!(expected_entries, m)?)?;
    m.add_function(wrap_pyfunction!(moments, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sweep, m)?)?;
    m.add_function(wrap_pyfunction!(sample, m)?)?;
    m.add_function(wrap_pyfunction!(hook_content_gf, m)?)?;
    m.add_function(wrap_pyfunction!(mean_norm_ssyt, m)?)?;
    m.add_function(wrap_pyfunction!(nk_counts, m)?)?;
    m.add_function(wrap_pyfunction!(mean_norm_nk, m)?)?;
    Ok(())
}
