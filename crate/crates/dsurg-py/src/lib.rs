//! Python bindings. Exposes the main types and operations of `dsurg-core`;
//! every rational value crosses the boundary as an exact "p/q" string
//! (feed them to `fractions.Fraction` on the Python side).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use dsurg_core as core;

fn value_err(err: core::Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

/// The pretzel knot P(-2,3,2m+1), m >= 3.
#[pyclass(name = "PretzelKnot")]
struct PyPretzelKnot {
    inner: core::PretzelKnot,
}

#[pymethods]
impl PyPretzelKnot {
    #[new]
    fn new(m: u64) -> PyResult<Self> {
        Ok(PyPretzelKnot {
            inner: core::PretzelKnot::new(m).map_err(value_err)?,
        })
    }

    #[getter]
    fn m(&self) -> u64 {
        self.inner.m()
    }

    #[getter]
    fn genus(&self) -> u64 {
        self.inner.genus()
    }

    #[getter]
    fn lspace_min_slope(&self) -> u64 {
        self.inner.lspace_min_slope()
    }

    fn alexander(&self) -> PyAlexanderPolynomial {
        PyAlexanderPolynomial {
            inner: self.inner.alexander(),
        }
    }

    fn torsion(&self) -> PyTorsionTable {
        PyTorsionTable {
            inner: self.inner.torsion(),
        }
    }

    fn torsion_closed_form(&self, i: u64) -> i64 {
        self.inner.torsion_closed_form(i)
    }

    fn lemma_window(&self) -> PyLemmaWindow {
        PyLemmaWindow {
            inner: core::lemma_window(&self.inner),
        }
    }

    #[pyo3(signature = (upper=None))]
    fn certify_nonfillable_interval(&self, upper: Option<u64>) -> PyScanResult {
        PyScanResult {
            inner: core::certify_nonfillable_interval(&self.inner, upper),
        }
    }

    fn __repr__(&self) -> String {
        format!("PretzelKnot(m={})", self.inner.m())
    }
}

/// Symmetrized Alexander polynomial given by half-coefficients a_0..a_g.
#[pyclass(name = "AlexanderPolynomial")]
struct PyAlexanderPolynomial {
    inner: core::AlexanderPolynomial,
}

#[pymethods]
impl PyAlexanderPolynomial {
    #[new]
    fn new(coeffs: Vec<i64>) -> PyResult<Self> {
        Ok(PyAlexanderPolynomial {
            inner: core::AlexanderPolynomial::new(coeffs).map_err(value_err)?,
        })
    }

    #[getter]
    fn coeffs(&self) -> Vec<i64> {
        self.inner.coeffs().to_vec()
    }

    #[getter]
    fn genus(&self) -> u64 {
        self.inner.genus()
    }

    fn coeff(&self, j: i64) -> i64 {
        self.inner.coeff(j)
    }

    fn is_lspace_alternating(&self) -> bool {
        self.inner.is_lspace_alternating()
    }

    fn torsion(&self) -> PyResult<PyTorsionTable> {
        Ok(PyTorsionTable {
            inner: self.inner.torsion().map_err(value_err)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("AlexanderPolynomial(coeffs={:?})", self.inner.coeffs())
    }
}

/// Torsion coefficients t_0..t_g; lookups are symmetric and 0 beyond genus.
#[pyclass(name = "TorsionTable")]
struct PyTorsionTable {
    inner: core::TorsionTable,
}

#[pymethods]
impl PyTorsionTable {
    #[new]
    fn new(values: Vec<i64>) -> PyResult<Self> {
        Ok(PyTorsionTable {
            inner: core::TorsionTable::new(values).map_err(value_err)?,
        })
    }

    #[getter]
    fn values(&self) -> Vec<i64> {
        self.inner.values().to_vec()
    }

    #[getter]
    fn genus(&self) -> u64 {
        self.inner.genus()
    }

    fn get(&self, i: i64) -> i64 {
        self.inner.get(i)
    }

    fn __repr__(&self) -> String {
        format!("TorsionTable(values={:?})", self.inner.values())
    }
}

/// d-invariants of the +n-surgery, one per canonical spin^c index.
#[pyclass(name = "DInvariantTable")]
struct PyDInvariantTable {
    inner: core::DInvariantTable,
}

#[pymethods]
impl PyDInvariantTable {
    #[getter]
    fn n(&self) -> u64 {
        self.inner.slope()
    }

    fn entries(&self) -> Vec<String> {
        self.inner.entries().iter().map(|d| d.to_string()).collect()
    }

    fn get(&self, i: i64) -> PyResult<String> {
        Ok(self.inner.get(i).map_err(value_err)?.to_string())
    }

    fn max_4d(&self) -> String {
        self.inner.max_4d().to_string()
    }

    fn argmax(&self) -> u64 {
        self.inner.argmax()
    }

    fn __len__(&self) -> usize {
        self.inner.entries().len()
    }

    fn __repr__(&self) -> String {
        format!(
            "DInvariantTable(n={}, entries={})",
            self.inner.slope(),
            self.inner.entries().len()
        )
    }
}

/// Obstruction verdict at one integer slope.
#[pyclass(name = "ObstructionReport")]
struct PyObstructionReport {
    inner: core::ObstructionReport,
}

#[pymethods]
impl PyObstructionReport {
    #[getter]
    fn n(&self) -> u64 {
        self.inner.n
    }

    #[getter]
    fn delta(&self) -> u64 {
        self.inner.delta
    }

    #[getter]
    fn squarefree(&self) -> bool {
        self.inner.squarefree
    }

    #[getter]
    fn max4d(&self) -> String {
        self.inner.max4d.to_string()
    }

    #[getter]
    fn threshold(&self) -> String {
        self.inner.threshold.to_string()
    }

    #[getter]
    fn inequality_holds(&self) -> bool {
        self.inner.inequality_holds
    }

    #[getter]
    fn conclusive(&self) -> bool {
        self.inner.conclusive
    }

    fn __repr__(&self) -> String {
        format!(
            "ObstructionReport(n={}, squarefree={}, max4d={}, threshold={}, conclusive={})",
            self.inner.n,
            self.inner.squarefree,
            self.inner.max4d,
            self.inner.threshold,
            self.inner.conclusive
        )
    }
}

/// Integer-arithmetic slope windows for P(-2,3,2m+1).
#[pyclass(name = "LemmaWindow")]
struct PyLemmaWindow {
    inner: core::LemmaWindow,
}

#[pymethods]
impl PyLemmaWindow {
    #[getter]
    fn m(&self) -> u64 {
        self.inner.m()
    }

    /// (3, k_max): k values with (2k-9)^2 < 16m+13.
    #[getter]
    fn qualifying_k(&self) -> (u64, u64) {
        let r = self.inner.qualifying_k();
        (*r.start(), *r.end())
    }

    /// (3, k_max) under the guard k^2 - 9k < 18m - 4.
    #[getter]
    fn claim1_k(&self) -> (u64, u64) {
        let r = self.inner.claim1_k();
        (*r.start(), *r.end())
    }

    /// Covered slopes as a half-open pair (lower, upper_exclusive).
    #[getter]
    fn slopes(&self) -> (u64, u64) {
        let s = self.inner.slopes();
        (s.lower(), s.upper())
    }

    fn __repr__(&self) -> String {
        let (lo, hi) = self.slopes();
        format!("LemmaWindow(m={}, slopes=[{},{}))", self.inner.m(), lo, hi)
    }
}

/// Scan outcome: per-slope verdicts and the certified interval.
#[pyclass(name = "ScanResult")]
struct PyScanResult {
    inner: core::ScanResult,
}

#[pymethods]
impl PyScanResult {
    #[getter]
    fn m(&self) -> u64 {
        self.inner.m
    }

    #[getter]
    fn lspace_min(&self) -> u64 {
        self.inner.lspace_min
    }

    #[getter]
    fn scan_upper(&self) -> u64 {
        self.inner.scan_upper
    }

    #[getter]
    fn certified_s(&self) -> Option<u64> {
        self.inner.certified_s
    }

    /// Closed interval (lower, upper_inclusive), or None.
    #[getter]
    fn certified_interval(&self) -> Option<(u64, u64)> {
        self.inner.certified_interval()
    }

    /// Scanned but uncertified slopes as (lower, upper_exclusive), or None.
    #[getter]
    fn unresolved_window(&self) -> Option<(u64, u64)> {
        self.inner.unresolved_window()
    }

    fn per_slope(&self) -> Vec<PyObstructionReport> {
        self.inner
            .per_slope
            .iter()
            .map(|r| PyObstructionReport { inner: r.clone() })
            .collect()
    }

    fn __repr__(&self) -> String {
        format!(
            "ScanResult(m={}, window=[{},{}), certified_interval={:?})",
            self.inner.m,
            self.inner.lspace_min,
            self.inner.scan_upper,
            self.inner.certified_interval()
        )
    }
}

fn spin(n: u64, i: i64) -> PyResult<core::SpinCIndex> {
    core::SpinCIndex::new(n, i).map_err(value_err)
}

/// d(U_n, i) = (n - 2|i|)^2/(4n) - 1/4, as an exact "p/q" string.
#[pyfunction]
fn d_unknot(n: u64, i: i64) -> PyResult<String> {
    Ok(core::d_unknot(&spin(n, i)?).to_string())
}

/// d(L_n, i) = d(U_n, i) - 2 t_i for a knot with the given torsion table.
#[pyfunction]
fn d_surgery(torsion: &PyTorsionTable, n: u64, i: i64) -> PyResult<String> {
    Ok(core::d_surgery(&torsion.inner, &spin(n, i)?).to_string())
}

/// d(L_-n, i) = -d(U_n, i); independent of the knot.
#[pyfunction]
fn d_negative_surgery(n: u64, i: i64) -> PyResult<String> {
    Ok(core::d_negative_surgery(&spin(n, i)?).to_string())
}

/// Full d-invariant table of the +n-surgery.
#[pyfunction]
fn d_table(torsion: &PyTorsionTable, n: u64) -> PyResult<PyDInvariantTable> {
    Ok(PyDInvariantTable {
        inner: core::DInvariantTable::compute(&torsion.inner, n).map_err(value_err)?,
    })
}

/// 1 - 1/delta for odd delta, 1 for even delta.
#[pyfunction]
fn owens_strle_threshold(delta: u64) -> PyResult<String> {
    Ok(core::owens_strle_threshold(delta)
        .map_err(value_err)?
        .to_string())
}

/// Obstruction verdict at slope n for a knot with the given torsion table.
#[pyfunction]
fn check_slope(torsion: &PyTorsionTable, n: u64) -> PyResult<PyObstructionReport> {
    Ok(PyObstructionReport {
        inner: core::check_slope(&torsion.inner, n).map_err(value_err)?,
    })
}

/// Scan [2m+3, upper) for P(-2,3,2m+1) and certify a non-fillable interval.
#[pyfunction]
#[pyo3(signature = (m, upper=None))]
fn certify_nonfillable_interval(m: u64, upper: Option<u64>) -> PyResult<PyScanResult> {
    let knot = core::PretzelKnot::new(m).map_err(value_err)?;
    Ok(PyScanResult {
        inner: core::certify_nonfillable_interval(&knot, upper),
    })
}

#[pyfunction]
fn is_squarefree(n: u64) -> PyResult<bool> {
    if n == 0 {
        return Err(PyValueError::new_err("is_squarefree requires n >= 1"));
    }
    Ok(core::is_squarefree(n))
}

/// Largest squarefree integer in [lower, upper), or None.
#[pyfunction]
fn largest_squarefree_in(lower: u64, upper: u64) -> PyResult<Option<u64>> {
    let interval = core::IntegerInterval::new(lower, upper).map_err(value_err)?;
    Ok(core::largest_squarefree_in(&interval))
}

/// 1-2+3-...+-k with the given leading sign (+1 or -1).
#[pyfunction]
fn alternating_sum(k: u64, leading_sign: i64) -> PyResult<i64> {
    if k <= 1 {
        return Err(PyValueError::new_err("alternating_sum requires k > 1"));
    }
    if leading_sign != 1 && leading_sign != -1 {
        return Err(PyValueError::new_err("leading sign must be +1 or -1"));
    }
    Ok(core::alternating_sum(k, leading_sign))
}

#[pymodule]
fn dsurg(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPretzelKnot>()?;
    m.add_class::<PyAlexanderPolynomial>()?;
    m.add_class::<PyTorsionTable>()?;
    m.add_class::<PyDInvariantTable>()?;
    m.add_class::<PyObstructionReport>()?;
    m.add_class::<PyLemmaWindow>()?;
    m.add_class::<PyScanResult>()?;
    m.add_function(wrap_pyfunction!(d_unknot, m)?)?;
    m.add_function(wrap_pyfunction!(d_surgery, m)?)?;
    m.add_function(wrap_pyfunction!(d_negative_surgery, m)?)?;
    m.add_function(wrap_pyfunction!(d_table, m)?)?;
    m.add_function(wrap_pyfunction!(owens_strle_threshold, m)?)?;
    m.add_function(wrap_pyfunction!(check_slope, m)?)?;
    m.add_function(wrap_pyfunction!(certify_nonfillable_interval, m)?)?;
    m.add_function(wrap_pyfunction!(is_squarefree, m)?)?;
    m.add_function(wrap_pyfunction!(largest_squarefree_in, m)?)?;
    m.add_function(wrap_pyfunction!(alternating_sum, m)?)?;
    Ok(())
}
