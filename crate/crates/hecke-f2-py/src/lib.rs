//! Python bindings: q-expansions, Hecke operators, form spaces, series
//! extraction, class and tangent tables, and the verify harness.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use hecke_f2::galois::frattini_class as class_of;
use hecke_f2::heckeq;
use hecke_f2::recur::{self, PolyCoord};
use hecke_f2::spaces::{self, HeckeContext};
use hecke_f2::structure::{extract_series as extract, SeriesName};
use hecke_f2::tangent::{constraint_system, TangentSystem};
use hecke_f2::verify::{self as harness, Scale, Suite};
use hecke_f2::{genforms, GeneratorId, QExpansion};

fn err(e: hecke_f2::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A mod-2 q-expansion known to a fixed precision.
#[pyclass(name = "QSeries", eq, frozen, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyQSeries(QExpansion);

#[pymethods]
impl PyQSeries {
    #[new]
    fn new(exponents: Vec<usize>, prec: usize) -> Self {
        PyQSeries(QExpansion::from_exponents(&exponents, prec))
    }

    #[getter]
    fn prec(&self) -> usize {
        self.0.prec()
    }

    /// Exponents with coefficient 1.
    fn support(&self) -> Vec<usize> {
        self.0.support().collect()
    }

    fn coeff(&self, i: usize) -> PyResult<bool> {
        self.0.coeff(i).map_err(err)
    }

    fn truncate(&self, prec: usize) -> PyResult<Self> {
        if prec > self.0.prec() {
            return Err(PyValueError::new_err("cannot raise precision"));
        }
        Ok(PyQSeries(self.0.truncate(prec)))
    }

    fn __add__(&self, other: &Self) -> Self {
        PyQSeries(self.0.add(&other.0))
    }

    fn __mul__(&self, other: &Self) -> Self {
        PyQSeries(self.0.mul(&other.0))
    }

    fn __pow__(&self, n: u64, _modulo: Option<u64>) -> Self {
        PyQSeries(self.0.pow(n))
    }

    fn substitute_qpow(&self, m: usize) -> PyResult<Self> {
        if m == 0 {
            return Err(PyValueError::new_err("exponent must be positive"));
        }
        Ok(PyQSeries(self.0.substitute_qpow(m)))
    }

    fn to_f2qser(&self, name: &str, level: u32) -> String {
        self.0.to_f2qser(name, level)
    }

    #[staticmethod]
    fn from_f2qser(text: &str) -> PyResult<(String, u32, Self)> {
        let (h, q) = hecke_f2::fps2::parse_f2qser(text).map_err(err)?;
        Ok((h.name, h.level, PyQSeries(q)))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("QSeries({})", self.0)
    }
}

#[pyfunction]
fn delta(prec: usize) -> PyQSeries {
    PyQSeries(genforms::delta_mod2(prec))
}

/// The generator f_N of level N in {3, 5}.
#[pyfunction]
fn f_generator(level: u32, prec: usize) -> PyResult<PyQSeries> {
    genforms::f_generator(level, prec).map(PyQSeries).map_err(err)
}

#[pyfunction]
fn apply_tell(ell: u64, f: &PyQSeries) -> PyResult<PyQSeries> {
    heckeq::apply_tell(ell, &f.0).map(PyQSeries).map_err(err)
}

#[pyfunction]
fn apply_u(m: usize, f: &PyQSeries) -> PyResult<PyQSeries> {
    if m == 0 {
        return Err(PyValueError::new_err("U index must be positive"));
    }
    heckeq::apply_u(m, &f.0).map(PyQSeries).map_err(err)
}

#[pyfunction]
fn theta(f: &PyQSeries) -> PyQSeries {
    PyQSeries(heckeq::theta(&f.0))
}

/// Companion polynomial of an operator such as "T7" or "U3" at a level.
#[pyfunction]
fn derive_companion(op: &str, level: u32) -> PyResult<String> {
    let spec = heckeq::parse_op(op, level).map_err(err)?;
    let gen = GeneratorId::for_level(level).map_err(err)?;
    recur::derive_companion_default(&spec, &gen)
        .map(|c| c.to_string())
        .map_err(err)
}

/// Hecke matrices on the forms f^n, n < bound, of one level.
#[pyclass(name = "HeckeContext", frozen)]
struct PyContext(HeckeContext);

#[pymethods]
impl PyContext {
    #[new]
    fn new(level: u32, bound: usize) -> PyResult<Self> {
        HeckeContext::new(level, bound).map(PyContext).map_err(err)
    }

    #[getter]
    fn level(&self) -> u32 {
        self.0.level()
    }

    #[getter]
    fn bound(&self) -> usize {
        self.0.bound()
    }

    /// Apply an operator to a form given by its f-exponents; returns the
    /// f-exponents of the image.
    fn apply(&self, op: &str, exponents: Vec<usize>) -> PyResult<Vec<usize>> {
        let spec = heckeq::parse_op(op, self.0.level()).map_err(err)?;
        let v = self.coord(&exponents)?;
        let img = self.0.apply(&spec, &v).map_err(err)?;
        Ok(img.to_poly().exponents())
    }

    /// q-expansion of a form given by its f-exponents.
    fn qexpansion(&self, exponents: Vec<usize>) -> PyResult<PyQSeries> {
        Ok(PyQSeries(self.0.to_qexpansion(&self.coord(&exponents)?)))
    }

    /// Dimensions of K, very new, new and old forms below the bound.
    fn dimensions(&self) -> PyResult<std::collections::HashMap<&'static str, usize>> {
        let c = &self.0;
        let mut m = std::collections::HashMap::new();
        m.insert("k", spaces::k_space(c).dim());
        if c.level() > 1 {
            m.insert("vnew", spaces::vnew_space(c).map_err(err)?.dim());
            m.insert("new", spaces::new_space(c).map_err(err)?.dim());
        }
        m.insert("old", spaces::old_space(c, None).map_err(err)?.dim());
        Ok(m)
    }
}

impl PyContext {
    fn coord(&self, exponents: &[usize]) -> PyResult<PolyCoord> {
        let p = hecke_f2::F2Poly::from_exponents(exponents);
        PolyCoord::from_poly(&p, self.0.bound()).map_err(err)
    }
}

/// One of "f", "g", "f-prime", "g-prime" to total degree < `degree`;
/// returns (series text, form-degree bound used).
#[pyfunction]
#[pyo3(signature = (name, degree=12, start=160, cap=1000))]
fn extract_series(name: &str, degree: usize, start: usize, cap: usize) -> PyResult<(String, usize)> {
    let n: SeriesName = name.parse().map_err(err)?;
    let e = extract(n, degree, start, cap).map_err(err)?;
    Ok((e.series.to_string(), e.bound))
}

/// Class label such as "g7-" of Frob_q for Q(i, √2, √N).
#[pyfunction]
fn frattini_class(q: u64, level: u32) -> PyResult<String> {
    class_of(q, level).map(|c| c.to_string()).map_err(err)
}

#[pyfunction]
fn tangent_nullity(system: &str, n_mod_8: u8) -> PyResult<usize> {
    let kind: TangentSystem = system.parse().map_err(err)?;
    Ok(constraint_system(kind, n_mod_8).map_err(err)?.nullity())
}

/// Run a check suite; returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite="all", level=None, prec=1000, degree=12, nmax=40))]
fn verify(
    py: Python<'_>,
    suite: &str,
    level: Option<u32>,
    prec: usize,
    degree: usize,
    nmax: usize,
) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(err)?;
    let scale = Scale {
        level,
        prec,
        degree,
        nmax,
    };
    Ok(py.detach(|| harness::run(suite, &scale)).to_json())
}

#[pymodule]
#[pyo3(name = "hecke_f2")]
fn hecke_f2_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyQSeries>()?;
    m.add_class::<PyContext>()?;
    m.add_function(wrap_pyfunction!(delta, m)?)?;
    m.add_function(wrap_pyfunction!(f_generator, m)?)?;
    m.add_function(wrap_pyfunction!(apply_tell, m)?)?;
    m.add_function(wrap_pyfunction!(apply_u, m)?)?;
    m.add_function(wrap_pyfunction!(theta, m)?)?;
    m.add_function(wrap_pyfunction!(derive_companion, m)?)?;
    m.add_function(wrap_pyfunction!(extract_series, m)?)?;
    m.add_function(wrap_pyfunction!(frattini_class, m)?)?;
    m.add_function(wrap_pyfunction!(tangent_nullity, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
