//! Python bindings: braid words, Alexander polynomials, bounds, plans and layouts.

use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ribbonfold::invariants::alexander_from_braid;
use ribbonfold::{BraidError, LaurentPolynomial, Rational};

create_exception!(pyribbonfold, LinkError, PyValueError, "Parameters describe a link, not a knot.");

fn py_err(e: BraidError) -> PyErr {
    match e {
        BraidError::Link { .. } => LinkError::new_err(e.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

fn width(w: &str) -> PyResult<Rational> {
    let w: Rational = w.trim().parse().map_err(|_| PyValueError::new_err(format!("bad width {w:?}")))?;
    if w <= Rational::from_integer(0) {
        return Err(PyValueError::new_err("width must be positive"));
    }
    Ok(w)
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialise")
}

#[pyclass(name = "BraidWord", frozen, eq, skip_from_py_object, module = "pyribbonfold")]
#[derive(Clone, PartialEq)]
pub struct PyBraidWord(ribbonfold::BraidWord);

#[pymethods]
impl PyBraidWord {
    #[new]
    fn new(strands: usize, letters: Vec<i32>) -> PyResult<Self> {
        ribbonfold::BraidWord::new(strands, letters).map(Self).map_err(py_err)
    }

    #[getter]
    fn strands(&self) -> usize {
        self.0.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<i32> {
        self.0.letters().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        format!("BraidWord({}, {:?})", self.0.strands(), self.0.letters())
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn mirror(&self) -> Self {
        Self(ribbonfold::mirror_braid(&self.0))
    }

    fn concat(&self, other: &PyBraidWord) -> PyResult<Self> {
        self.0.concat(&other.0).map(Self).map_err(py_err)
    }

    fn components(&self) -> usize {
        ribbonfold::closure_component_count(&self.0)
    }

    /// Infimum and permutation factors of the left-weighted normal form.
    fn normal_form(&self) -> (i64, Vec<Vec<usize>>) {
        let nf = ribbonfold::garside_normal_form(&self.0);
        (nf.infimum(), nf.factors().iter().map(|f| f.image().to_vec()).collect())
    }
}

#[pyclass(name = "Polynomial", frozen, eq, skip_from_py_object, module = "pyribbonfold")]
#[derive(Clone, PartialEq)]
pub struct PyPolynomial(LaurentPolynomial);

#[pymethods]
impl PyPolynomial {
    /// `(exponent, coefficient)` pairs in increasing exponent order.
    fn terms(&self) -> Vec<(i32, i128)> {
        self.0.terms().collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Polynomial({})", self.0)
    }
}

#[pyfunction]
fn torus_braid(p: usize, q: usize) -> PyResult<PyBraidWord> {
    ribbonfold::torus_braid(p, q).map(PyBraidWord).map_err(py_err)
}

#[pyfunction]
fn twisted_torus_braid(p: usize, q: usize, r: usize, s: i64) -> PyResult<PyBraidWord> {
    ribbonfold::twisted_torus_braid(p, q, r, s).map(PyBraidWord).map_err(py_err)
}

#[pyfunction]
fn braid_equal(a: &PyBraidWord, b: &PyBraidWord) -> PyResult<bool> {
    ribbonfold::braid_equal(&a.0, &b.0).map_err(py_err)
}

#[pyfunction]
fn alexander(b: &PyBraidWord) -> PyResult<PyPolynomial> {
    alexander_from_braid(&b.0).map(PyPolynomial).map_err(py_err)
}

#[pyfunction]
fn torus_alexander(p: u32, q: u32) -> PyResult<PyPolynomial> {
    ribbonfold::invariants::alexander_torus_oracle(p, q).map(PyPolynomial).map_err(py_err)
}

#[pyfunction]
fn ribbonlength_upper_bound(p: i64, q: i64, r: i64, s: i64) -> PyResult<u64> {
    ribbonfold::ribbonlength_upper_bound(p, q, r, s).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (p, q, r, s, permissive = false))]
fn bound_json(p: i64, q: i64, r: i64, s: i64, permissive: bool) -> PyResult<String> {
    let params = ribbonfold::normalize_params(p, q, r, s, permissive).map_err(py_err)?;
    Ok(to_json(&ribbonfold::bound_report(&params)))
}

#[pyfunction]
#[pyo3(signature = (p, q, r, s, width = "1", permissive = false, standard = false))]
fn plan_json(p: i64, q: i64, r: i64, s: i64, width: &str, permissive: bool, standard: bool) -> PyResult<String> {
    let params = ribbonfold::normalize_params(p, q, r, s, permissive).map_err(py_err)?;
    let case = standard.then_some(ribbonfold::CaseBranch::Standard);
    let (_, report) = ribbonfold::plan_with_report(&params, self::width(width)?, case).map_err(py_err)?;
    Ok(to_json(&report))
}

fn layout(p: i64, q: i64, r: i64, s: i64, w: &str, permissive: bool) -> PyResult<ribbonfold::RibbonLayout> {
    let params = ribbonfold::normalize_params(p, q, r, s, permissive).map_err(py_err)?;
    let plan = ribbonfold::plan_for(&params, width(w)?).map_err(py_err)?;
    ribbonfold::assemble_layout(&plan).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (p, q, r, s, width = "1", permissive = false))]
fn render_svg(p: i64, q: i64, r: i64, s: i64, width: &str, permissive: bool) -> PyResult<String> {
    Ok(ribbonfold::render_svg(&layout(p, q, r, s, width, permissive)?))
}

#[pyfunction]
#[pyo3(signature = (p, q, r, s, width = "1", permissive = false))]
fn validation_json(p: i64, q: i64, r: i64, s: i64, width: &str, permissive: bool) -> PyResult<String> {
    Ok(to_json(&ribbonfold::validate_layout(&layout(p, q, r, s, width, permissive)?)))
}

#[pymodule]
mod pyribbonfold {
    #[pymodule_export]
    use super::{
        alexander, bound_json, braid_equal, plan_json, render_svg, ribbonlength_upper_bound, torus_alexander,
        torus_braid, twisted_torus_braid, validation_json, LinkError, PyBraidWord, PyPolynomial,
    };
}
