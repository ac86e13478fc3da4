//! Python bindings: algebras, modules, verdicts and reports.

use std::collections::BTreeMap;
use std::sync::Arc;

use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

use nabelian::algebra::Algebra as CoreAlgebra;
use nabelian::corpus::{load_corpus, CORPUS_NAMES};
use nabelian::error::Error;
use nabelian::format::{parse_algebra, parse_projmatrix, AlgebraFile};
use nabelian::higher::{
    cross_check, detect_n, double_dual_sequence, is_k_torsion_free, is_m_spherical, is_n_abelian, n_cokernel,
    star_dual, transpose,
};
use nabelian::homological::{domdim, ext_table, gldim, grade, minimal_resolution, pdim};
use nabelian::report::{selftest_report, DEFAULT_CAP};
use nabelian::repr::{hom_dim, Representation};

fn to_py(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Algebra", frozen)]
struct PyAlgebra {
    file: AlgebraFile,
}

impl PyAlgebra {
    fn inner(&self) -> &Arc<CoreAlgebra> {
        &self.file.algebra
    }

    fn vertex(&self, label: &str) -> PyResult<usize> {
        self.inner().quiver().vertex_index(label).map_err(to_py)
    }
}

#[pymethods]
impl PyAlgebra {
    /// Parse the text format (`field`, `vertex`, `arrow`, `relation`, modules).
    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        Ok(PyAlgebra { file: parse_algebra(text).map_err(to_py)? })
    }

    #[staticmethod]
    fn from_corpus(name: &str) -> PyResult<Self> {
        let entry = load_corpus(name).map_err(|e| PyKeyError::new_err(e.to_string()))?;
        Ok(PyAlgebra { file: entry.parse() })
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner().dim()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner().quiver().vertices().to_vec()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        (0..self.inner().dim()).map(|k| self.inner().basis_label(k)).collect()
    }

    fn opposite(&self) -> Self {
        let alg = self.inner().opposite();
        PyAlgebra { file: AlgebraFile { algebra: alg, modules: Vec::new(), expect: BTreeMap::new() } }
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn gldim(&self, cap: usize) -> String {
        gldim(self.inner(), cap).to_string()
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn domdim(&self, cap: usize) -> String {
        domdim(self.inner(), cap).to_string()
    }

    fn is_n_abelian(&self, n: usize) -> bool {
        is_n_abelian(self.inner(), n).holds
    }

    /// Verdict with its evidence as a dict of strings.
    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn detect(&self, cap: usize) -> BTreeMap<String, String> {
        let v = detect_n(self.inner(), cap);
        BTreeMap::from([
            ("result".to_string(), v.result.to_string()),
            ("gldim".to_string(), v.gldim.to_string()),
            ("domdim".to_string(), v.domdim.to_string()),
            ("reason".to_string(), v.reason),
        ])
    }

    /// `(name, passed, fatal, samples, witness)` per sampled check.
    #[pyo3(signature = (n, seed = 0, samples = 50, cap = DEFAULT_CAP))]
    fn cross_check(&self, n: usize, seed: u64, samples: usize, cap: usize) -> Vec<(String, bool, bool, usize, Option<String>)> {
        let v = detect_n(self.inner(), cap);
        cross_check(self.inner(), &v, n, seed, samples)
            .checks
            .into_iter()
            .map(|c| (c.name, c.passed, c.fatal, c.samples, c.witness))
            .collect()
    }

    /// The full JSON report of the selftest command.
    #[pyo3(signature = (seed = 0, samples = 200, cap = DEFAULT_CAP))]
    fn selftest(&self, seed: u64, samples: usize, cap: usize) -> String {
        selftest_report("python", &self.file, seed, samples, cap).to_json(false)
    }

    fn simple(&self, vertex: &str) -> PyResult<PyRepresentation> {
        Ok(PyRepresentation { inner: Representation::simple(self.inner(), self.vertex(vertex)?) })
    }

    fn projective(&self, vertex: &str) -> PyResult<PyRepresentation> {
        Ok(PyRepresentation { inner: Representation::projective(self.inner(), self.vertex(vertex)?) })
    }

    fn injective(&self, vertex: &str) -> PyResult<PyRepresentation> {
        Ok(PyRepresentation { inner: Representation::injective(self.inner(), self.vertex(vertex)?) })
    }

    /// A module block of the source file, or `S(v)`, `P(v)`, `I(v)`.
    fn module(&self, name: &str) -> PyResult<PyRepresentation> {
        Ok(PyRepresentation { inner: self.file.module(name).map_err(to_py)? })
    }

    /// n-cokernel of `P(..)->P(..): [[..]]`, or `None` if the resolution is
    /// too long.
    fn n_cokernel(&self, spec: &str, n: usize) -> PyResult<Option<Vec<String>>> {
        let f = parse_projmatrix(self.inner(), spec).map_err(to_py)?;
        match n_cokernel(&f, n) {
            Ok(seq) => Ok(Some(seq.maps().iter().map(ToString::to_string).collect())),
            Err(Error::ResolutionExceedsLength(_)) => Ok(None),
            Err(e) => Err(to_py(e)),
        }
    }

    fn __repr__(&self) -> String {
        format!("Algebra(dim={}, vertices={:?})", self.inner().dim(), self.inner().quiver().vertices())
    }
}

#[pyclass(name = "Module", frozen)]
struct PyRepresentation {
    inner: Representation,
}

#[pymethods]
impl PyRepresentation {
    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    #[getter]
    fn total_dim(&self) -> usize {
        self.inner.total_dim()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn is_projective(&self) -> bool {
        self.inner.is_projective()
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn pdim(&self, cap: usize) -> String {
        pdim(&self.inner, cap).to_string()
    }

    #[pyo3(signature = (cap = DEFAULT_CAP))]
    fn grade(&self, cap: usize) -> String {
        grade(&self.inner, cap).to_string()
    }

    /// Vertex lists of the minimal projective resolution up to `length`.
    fn resolution(&self, length: usize) -> Vec<Vec<usize>> {
        minimal_resolution(&self.inner, length).terms
    }

    /// `dim Ext^i(self, other)` for `i = 0..=cap`.
    fn ext(&self, other: &PyRepresentation, cap: usize) -> PyResult<Vec<usize>> {
        let t = ext_table(&self.inner, &other.inner, cap).map_err(to_py)?;
        Ok((0..=cap).map(|i| t.get(i)).collect())
    }

    fn hom_dim(&self, other: &PyRepresentation) -> PyResult<usize> {
        hom_dim(&self.inner, &other.inner).map_err(to_py)
    }

    fn star_dual(&self) -> PyRepresentation {
        PyRepresentation { inner: star_dual(&self.inner).module }
    }

    fn transpose(&self) -> PyRepresentation {
        PyRepresentation { inner: transpose(&self.inner).module }
    }

    fn is_torsion_free(&self, k: usize) -> bool {
        is_k_torsion_free(&self.inner, k)
    }

    fn is_spherical(&self, m: usize) -> bool {
        is_m_spherical(&self.inner, m)
    }

    /// `(dim e1, dim M, dim M**, dim e2)`.
    fn double_dual_dims(&self) -> (usize, usize, usize, usize) {
        let dd = double_dual_sequence(&self.inner);
        (dd.e1.total_dim(), dd.module.total_dim(), dd.double_dual.total_dim(), dd.e2.total_dim())
    }

    fn __repr__(&self) -> String {
        format!("Module(dims={:?})", self.inner.dims())
    }
}

#[pyfunction]
fn corpus_names() -> Vec<&'static str> {
    CORPUS_NAMES.to_vec()
}

#[pymodule]
fn nabelian_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PyRepresentation>()?;
    m.add_function(wrap_pyfunction!(corpus_names, m)?)?;
    Ok(())
}
