//! Python bindings: `import monobrick`.

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use monobrick::oracle::{run_suite, Field, UniverseConfig};
use monobrick::{
    counting, crossing_kind as arc_crossing_kind, hom_kind as arc_hom_kind, render_ascii, AlgebraSpec, Arc,
    ArcDiagram, Budget, DiagramKind, DiagramRecord, Error, MonobrickPoset, NclPartition,
};

create_exception!(monobrick, BudgetError, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::BudgetExceeded { .. } => BudgetError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn spec(algebra: &str, n: u32) -> PyResult<AlgebraSpec> {
    let spec = match algebra {
        "A" | "a" => AlgebraSpec::LinearA(n),
        "B" | "b" => AlgebraSpec::CyclicB(n),
        other => {
            return Err(PyValueError::new_err(format!(
                "algebra must be 'A' or 'B', got {other:?}"
            )))
        }
    };
    spec.validate().map_err(to_py)?;
    Ok(spec)
}

fn kind(name: &str) -> PyResult<DiagramKind> {
    name.parse().map_err(to_py)
}

type ArcPair = (u32, u32);

fn pair(a: Arc) -> ArcPair {
    (a.start, a.end)
}

/// An arc diagram over `A_n` (admissible arcs on `[n+1]`) or `B_n`.
#[pyclass(name = "Diagram", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDiagram {
    inner: ArcDiagram,
}

impl PyDiagram {
    fn poset(&self) -> PyResult<MonobrickPoset> {
        MonobrickPoset::new(self.inner.clone()).map_err(to_py)
    }
}

#[pymethods]
impl PyDiagram {
    #[new]
    #[pyo3(signature = (algebra, n, arcs = Vec::new()))]
    fn new(algebra: &str, n: u32, arcs: Vec<(u32, u32)>) -> PyResult<Self> {
        let inner = ArcDiagram::new(spec(algebra, n)?, arcs.into_iter().map(Arc::from)).map_err(to_py)?;
        Ok(PyDiagram { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let record: DiagramRecord =
            serde_json::from_str(text).map_err(|e| PyValueError::new_err(e.to_string()))?;
        let inner = record.to_diagram().map_err(to_py)?;
        Ok(PyDiagram { inner })
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&DiagramRecord::from(&self.inner)).expect("records serialize")
    }

    #[getter]
    fn algebra(&self) -> &'static str {
        self.inner.spec().letter()
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.spec().rank()
    }

    #[getter]
    fn arcs(&self) -> Vec<(u32, u32)> {
        self.inner.arcs().iter().copied().map(pair).collect()
    }

    fn is_monobrick(&self) -> bool {
        self.inner.is_monobrick()
    }

    fn is_semibrick(&self) -> bool {
        self.inner.is_semibrick()
    }

    /// The first offending pair and its crossing kind, or None.
    fn monobrick_violation(&self) -> Option<(ArcPair, ArcPair, String)> {
        self.inner
            .monobrick_violation()
            .map(|(a, b, k)| (pair(a), pair(b), k.to_string()))
    }

    fn cofinal_closure(&self) -> PyResult<Self> {
        Ok(PyDiagram {
            inner: self.poset()?.cofinal_closure().into_diagram(),
        })
    }

    fn is_cofinally_closed(&self) -> PyResult<bool> {
        Ok(self.poset()?.is_cofinally_closed())
    }

    fn mmax(&self) -> PyResult<Self> {
        Ok(PyDiagram {
            inner: self.poset()?.mmax(),
        })
    }

    /// Covering pairs `(lower, upper)` of the submodule order.
    fn hasse(&self) -> PyResult<Vec<(ArcPair, ArcPair)>> {
        Ok(self
            .poset()?
            .hasse()
            .into_iter()
            .map(|c| (pair(c.lower), pair(c.upper)))
            .collect())
    }

    fn render(&self) -> String {
        render_ascii(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("Diagram({})", self.inner)
    }
}

/// A non-crossing linked partition of `[n]`.
#[pyclass(name = "LinkedPartition", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyPartition {
    inner: NclPartition,
}

#[pymethods]
impl PyPartition {
    #[new]
    fn new(n: u32, blocks: Vec<Vec<u32>>) -> Self {
        PyPartition {
            inner: NclPartition::new(n, blocks),
        }
    }

    #[staticmethod]
    fn from_diagram(d: &PyDiagram) -> PyResult<Self> {
        let inner = NclPartition::from_diagram(&d.inner).map_err(to_py)?;
        Ok(PyPartition { inner })
    }

    #[getter]
    fn n(&self) -> u32 {
        self.inner.n()
    }

    #[getter]
    fn blocks(&self) -> Vec<Vec<u32>> {
        self.inner.blocks().to_vec()
    }

    fn is_valid(&self) -> bool {
        self.inner.validate()
    }

    /// The violated condition ("NCL1", "NCL2", "NCL3" or "malformed"), if any.
    fn violation(&self) -> Option<&'static str> {
        self.inner.check().err().map(|v| v.condition())
    }

    fn to_diagram(&self) -> PyResult<PyDiagram> {
        Ok(PyDiagram {
            inner: self.inner.to_diagram().map_err(to_py)?,
        })
    }

    fn __repr__(&self) -> String {
        format!("LinkedPartition({}, {:?})", self.inner.n(), self.inner.blocks())
    }
}

/// Every diagram of `kind` in enumeration order.
#[pyfunction]
#[pyo3(signature = (algebra, n, kind = "monobrick"))]
fn enumerate(algebra: &str, n: u32, kind: &str) -> PyResult<Vec<PyDiagram>> {
    let mut out = Vec::new();
    monobrick::enumerate(spec(algebra, n)?, self::kind(kind)?, &Budget::default(), |d| {
        out.push(PyDiagram { inner: d.clone() })
    })
    .map_err(to_py)?;
    Ok(out)
}

#[pyfunction]
#[pyo3(signature = (algebra, n, kind = "monobrick", workers = 1))]
fn count(py: Python<'_>, algebra: &str, n: u32, kind: &str, workers: usize) -> PyResult<u64> {
    let (spec, kind) = (spec(algebra, n)?, self::kind(kind)?);
    py.detach(|| monobrick::enumerate_parallel(spec, kind, &Budget::default(), workers, |_| {}))
        .map_err(to_py)
}

#[pyfunction]
fn schroder_count(n: u64) -> BigUint {
    counting::schroder_count(n)
}

#[pyfunction]
fn b_count(n: u64) -> BigUint {
    counting::b_count(n)
}

#[pyfunction]
fn catalan(n: u64) -> BigUint {
    counting::catalan(n)
}

#[pyfunction]
fn central_binomial(n: u64) -> BigUint {
    counting::central_binomial(n)
}

#[pyfunction]
fn recurrence_check(n: u64) -> bool {
    counting::recurrence_check(n)
}

#[pyfunction]
fn crossing_kind(a: (u32, u32), b: (u32, u32), marks: u32) -> PyResult<String> {
    arc_crossing_kind(a.into(), b.into(), marks)
        .map(|k| k.to_string())
        .map_err(to_py)
}

#[pyfunction]
fn hom_kind(a: (u32, u32), b: (u32, u32), algebra: &str, n: u32) -> PyResult<String> {
    let spec = spec(algebra, n)?;
    spec.check(a.into()).map_err(to_py)?;
    spec.check(b.into()).map_err(to_py)?;
    Ok(format!("{:?}", arc_hom_kind(a.into(), b.into(), spec)))
}

#[pyfunction]
fn enumerate_ncl(n: u32) -> PyResult<Vec<PyPartition>> {
    if n > 9 {
        return Err(PyValueError::new_err("brute-force enumeration supports n <= 9"));
    }
    Ok(monobrick::enumerate_ncl(n)
        .into_iter()
        .map(|inner| PyPartition { inner })
        .collect())
}

/// Runs the oracle suite; returns a dict with the report and a
/// `checks` list of `(name, passed, detail)`.
#[pyfunction]
#[pyo3(signature = (preset, dim_bound = 6, p = 2))]
fn verify<'py>(py: Python<'py>, preset: &str, dim_bound: usize, p: u8) -> PyResult<Bound<'py, PyDict>> {
    let config = UniverseConfig {
        field: Field::new(p).map_err(to_py)?,
        ..UniverseConfig::with_bound(dim_bound)
    };
    let preset = preset.to_string();
    let report = py.detach(|| run_suite(&preset, config)).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("preset", &report.preset)?;
    d.set_item("dim_bound", report.dim_bound)?;
    d.set_item("p", report.p)?;
    d.set_item("classes", report.classes)?;
    d.set_item("bricks", report.bricks)?;
    d.set_item("monobricks", report.monobricks)?;
    d.set_item("passed", report.passed())?;
    let checks: Vec<(&str, bool, String)> = report
        .checks
        .iter()
        .map(|c| (c.name, c.passed, c.detail.clone()))
        .collect();
    d.set_item("checks", checks)?;
    Ok(d)
}

#[pymodule(name = "monobrick")]
fn monobrick_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDiagram>()?;
    m.add_class::<PyPartition>()?;
    m.add("BudgetError", m.py().get_type::<BudgetError>())?;
    m.add("PRESETS", monobrick::oracle::PRESET_NAMES.to_vec())?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(schroder_count, m)?)?;
    m.add_function(wrap_pyfunction!(b_count, m)?)?;
    m.add_function(wrap_pyfunction!(catalan, m)?)?;
    m.add_function(wrap_pyfunction!(central_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(recurrence_check, m)?)?;
    m.add_function(wrap_pyfunction!(crossing_kind, m)?)?;
    m.add_function(wrap_pyfunction!(hom_kind, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_ncl, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
