use std::path::PathBuf;
use std::sync::Arc;

use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use g2cells::cell::{self, DominantWeight, LowestCell as CoreLowestCell, W0Index, ZValue};
use g2cells::rep::{self as core_rep, Weight};
use g2cells::{Error, GroupElement, KlConfig, LaurentPoly};

create_exception!(g2cells_py, ResourceLimitError, PyException);
create_exception!(g2cells_py, InvariantError, PyException);
create_exception!(g2cells_py, CacheError, PyException);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::Parse(_) | Error::NotInLowestCell(_) => PyValueError::new_err(e.to_string()),
        Error::ResourceLimit(_) => ResourceLimitError::new_err(e.to_string()),
        Error::CorruptCache(_) | Error::VersionMismatch(_) | Error::Io(_) => {
            CacheError::new_err(e.to_string())
        }
        e => InvariantError::new_err(e.to_string()),
    }
}

/// An element of the affine Weyl group, identified by its action on the
/// plane and printed as its canonical word in digits 0, 1, 2 (= r, s, t).
#[pyclass(name = "Element", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyElement(GroupElement);

#[derive(FromPyObject)]
enum ElementLike {
    Element(PyElement),
    Word(String),
}

impl ElementLike {
    fn get(self) -> PyResult<GroupElement> {
        match self {
            ElementLike::Element(e) => Ok(e.0),
            ElementLike::Word(w) => GroupElement::parse(&w).map_err(py_err),
        }
    }
}

#[pymethods]
impl PyElement {
    #[new]
    #[pyo3(signature = (word = String::new()))]
    fn new(word: String) -> PyResult<Self> {
        GroupElement::parse(&word).map(PyElement).map_err(py_err)
    }

    #[getter]
    fn word(&self) -> String {
        self.0.digits()
    }

    #[getter]
    fn letters(&self) -> String {
        self.0.letters()
    }

    fn __len__(&self) -> usize {
        self.0.length()
    }

    #[getter]
    fn length(&self) -> usize {
        self.0.length()
    }

    fn __mul__(&self, other: ElementLike) -> PyResult<PyElement> {
        Ok(PyElement(self.0.multiply(&other.get()?)))
    }

    fn inverse(&self) -> PyElement {
        PyElement(self.0.inverse())
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn left_descents(&self) -> String {
        self.0.left_descents().iter().map(|g| g.digit()).collect()
    }

    fn right_descents(&self) -> String {
        self.0.right_descents().iter().map(|g| g.digit()).collect()
    }

    fn bruhat_leq(&self, other: ElementLike) -> PyResult<bool> {
        Ok(g2cells::weyl::bruhat_leq(&self.0, &other.get()?))
    }

    fn __str__(&self) -> String {
        self.0.digits()
    }

    fn __repr__(&self) -> String {
        format!("Element('{}')", self.0.digits())
    }
}

/// A Laurent polynomial in `v = q^(1/2)` with integer coefficients.
#[pyclass(name = "LaurentPoly", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq, Eq)]
struct PyPoly(LaurentPoly);

#[pymethods]
impl PyPoly {
    #[new]
    #[pyo3(signature = (text = "0"))]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPoly).map_err(py_err)
    }

    /// `(exponent of v, coefficient)` pairs, lowest exponent first.
    fn terms(&self) -> Vec<(i64, BigInt)> {
        self.0.terms().map(|(k, c)| (k, c.clone())).collect()
    }

    fn coeff(&self, k: i64) -> BigInt {
        self.0.coeff(k)
    }

    fn bar(&self) -> PyPoly {
        PyPoly(self.0.bar())
    }

    fn quantum_text(&self) -> String {
        self.0.quantum_text()
    }

    fn q_text(&self) -> Option<String> {
        self.0.q_text()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __add__(&self, o: &PyPoly) -> PyPoly {
        PyPoly(&self.0 + &o.0)
    }

    fn __sub__(&self, o: &PyPoly) -> PyPoly {
        PyPoly(&self.0 - &o.0)
    }

    fn __mul__(&self, o: &PyPoly) -> PyPoly {
        PyPoly(&self.0 * &o.0)
    }

    fn __neg__(&self) -> PyPoly {
        PyPoly(-self.0.clone())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("LaurentPoly('{}')", self.0)
    }
}

/// Kazhdan-Lusztig polynomials and canonical-basis products, memoized.
#[pyclass(name = "KlEngine", frozen)]
struct PyKlEngine(Arc<g2cells::KlEngine>);

fn combination(c: g2cells::HeckeCombination) -> Vec<(PyElement, PyPoly)> {
    c.terms()
        .rev()
        .map(|(w, h)| (PyElement(w.clone()), PyPoly(h.clone())))
        .collect()
}

#[pymethods]
impl PyKlEngine {
    #[new]
    #[pyo3(signature = (max_length = 40, max_support = 20_000, max_operand_length = 36))]
    fn new(max_length: usize, max_support: usize, max_operand_length: usize) -> Self {
        PyKlEngine(Arc::new(g2cells::KlEngine::new(KlConfig {
            max_length,
            max_support,
            max_operand_length,
        })))
    }

    fn kl_poly(&self, py: Python<'_>, u: ElementLike, w: ElementLike) -> PyResult<PyPoly> {
        let (u, w) = (u.get()?, w.get()?);
        py.detach(|| self.0.kl_poly(&u, &w))
            .map(PyPoly)
            .map_err(py_err)
    }

    fn mu(&self, py: Python<'_>, u: ElementLike, w: ElementLike) -> PyResult<u64> {
        let (u, w) = (u.get()?, w.get()?);
        py.detach(|| self.0.mu(&u, &w)).map_err(py_err)
    }

    /// `C_x C_y` as `(element, coefficient)` pairs, longest element first.
    fn c_product(
        &self,
        py: Python<'_>,
        x: ElementLike,
        y: ElementLike,
    ) -> PyResult<Vec<(PyElement, PyPoly)>> {
        let (x, y) = (x.get()?, y.get()?);
        py.detach(|| self.0.c_product(&x, &y))
            .map(combination)
            .map_err(py_err)
    }

    /// The product rendered with coefficients in powers of `[2]`.
    fn c_product_text(&self, py: Python<'_>, x: ElementLike, y: ElementLike) -> PyResult<String> {
        let (x, y) = (x.get()?, y.get()?);
        py.detach(|| self.0.c_product(&x, &y))
            .map(|c| c.to_string())
            .map_err(py_err)
    }

    fn load_cache(&self, path: PathBuf) -> PyResult<usize> {
        self.0.load_cache(&path).map_err(py_err)
    }

    fn store_cache(&self, path: PathBuf) -> PyResult<usize> {
        self.0.store_cache(&path).map_err(py_err)
    }

    fn columns_ready(&self) -> usize {
        self.0.columns_ready()
    }
}

/// The lowest two-sided cell: decompositions, the delta table and `mu`.
#[pyclass(name = "LowestCell", frozen)]
struct PyLowestCell(CoreLowestCell);

#[pymethods]
impl PyLowestCell {
    #[new]
    fn new(engine: &PyKlEngine) -> Self {
        PyLowestCell(CoreLowestCell::new(Arc::clone(&engine.0)))
    }

    /// Rows `(u, d_u, u', d_u', delta_0, delta_xa, delta_xb, class)`.
    #[allow(clippy::type_complexity)]
    fn delta_table(
        &self,
        py: Python<'_>,
    ) -> PyResult<Vec<(String, String, String, String, u8, u8, u8, String)>> {
        let table = py.detach(|| self.0.table().map(|t| t.to_vec())).map_err(py_err)?;
        Ok(table
            .iter()
            .map(|r| {
                (
                    r.u.name().to_string(),
                    r.u.d_word().to_string(),
                    r.uprime.name().to_string(),
                    r.uprime.d_word().to_string(),
                    r.get(ZValue::Zero),
                    r.get(ZValue::XAlpha),
                    r.get(ZValue::XBeta),
                    r.class.label().to_string(),
                )
            })
            .collect())
    }

    fn mu(&self, py: Python<'_>, y: ElementLike, w: ElementLike) -> PyResult<u64> {
        let (y, w) = (y.get()?, w.get()?);
        py.detach(|| self.0.mu_lowest(&y, &w)).map_err(py_err)
    }
}

#[pyfunction]
fn reduce(word: &str) -> PyResult<String> {
    GroupElement::parse(word).map(|g| g.digits()).map_err(py_err)
}

#[pyfunction]
fn d_element(u: &str) -> PyResult<PyElement> {
    let u = W0Index::from_name(u).map_err(py_err)?;
    cell::d_element(u).map(PyElement).map_err(py_err)
}

#[pyfunction]
fn translation(n_alpha: u32, n_beta: u32) -> PyElement {
    PyElement(cell::translation_element(DominantWeight::new(n_alpha, n_beta)))
}

#[pyfunction]
fn c0_element(i: usize, j: usize, a: u32, b: u32) -> PyResult<PyElement> {
    cell::c0_element(i, j, a, b).map(PyElement).map_err(py_err)
}

type Decomposition = (String, (u32, u32), String);

/// `(u, (n_alpha, n_beta), v)` with `w = d_u t_λ w0 d_v^{-1}`, or `None`.
#[pyfunction]
fn decompose_c0(w: ElementLike) -> PyResult<Option<Decomposition>> {
    let d = cell::decompose_c0(&w.get()?).map_err(py_err)?;
    Ok(d.map(|d| {
        (
            d.u.name().to_string(),
            (d.lambda.n_alpha, d.lambda.n_beta),
            d.v.name().to_string(),
        )
    }))
}

fn weight(w: (i64, i64)) -> Weight {
    Weight::new(w.0, w.1)
}

#[pyfunction]
fn weyl_dim(lam: (i64, i64)) -> PyResult<u64> {
    core_rep::weyl_dim(weight(lam)).map_err(py_err)
}

#[pyfunction]
fn weight_multiplicities(lam: (i64, i64)) -> PyResult<Vec<((i64, i64), u64)>> {
    let m = core_rep::freudenthal_mults(weight(lam)).map_err(py_err)?;
    Ok(m.iter()
        .map(|(w, &k)| ((w.n_alpha, w.n_beta), k))
        .collect())
}

#[pyfunction]
fn tensor_mult(lam: (i64, i64), lam2: (i64, i64), nu: (i64, i64)) -> PyResult<u64> {
    core_rep::tensor_mult(weight(lam), weight(lam2), weight(nu)).map_err(py_err)
}

#[pyfunction]
fn tensor_decomposition(lam: (i64, i64), lam2: (i64, i64)) -> PyResult<Vec<((i64, i64), u64)>> {
    let d = core_rep::tensor_decomposition(weight(lam), weight(lam2)).map_err(py_err)?;
    Ok(d.iter()
        .rev()
        .map(|(w, &k)| ((w.n_alpha, w.n_beta), k))
        .collect())
}

#[pymodule]
fn g2cells_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", g2cells::VERSION)?;
    m.add_class::<PyElement>()?;
    m.add_class::<PyPoly>()?;
    m.add_class::<PyKlEngine>()?;
    m.add_class::<PyLowestCell>()?;
    m.add("ResourceLimitError", m.py().get_type::<ResourceLimitError>())?;
    m.add("InvariantError", m.py().get_type::<InvariantError>())?;
    m.add("CacheError", m.py().get_type::<CacheError>())?;
    m.add_function(wrap_pyfunction!(reduce, m)?)?;
    m.add_function(wrap_pyfunction!(d_element, m)?)?;
    m.add_function(wrap_pyfunction!(translation, m)?)?;
    m.add_function(wrap_pyfunction!(c0_element, m)?)?;
    m.add_function(wrap_pyfunction!(decompose_c0, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_dim, m)?)?;
    m.add_function(wrap_pyfunction!(weight_multiplicities, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_mult, m)?)?;
    m.add_function(wrap_pyfunction!(tensor_decomposition, m)?)?;
    Ok(())
}
