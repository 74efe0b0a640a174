//! Python bindings for the `legrack` core crate.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use legrack::audit::{corollary_gate, theorem1_gate};
use legrack::coloring::{self, ColoringOptions};
use legrack::frontcode::{self, Direction, MoveKind, MoveSpec, Stabilization};
use legrack::glrack::{self, mk_permutation_family, mk_trivial};
use legrack::presentation::{self, summarize_code};

fn val<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A front code: a cyclic word of crossing passes and cusps.
#[pyclass(name = "FrontCode", module = "pylegrack", from_py_object)]
#[derive(Clone)]
struct PyFrontCode {
    inner: legrack::FrontCode,
}

#[pymethods]
impl PyFrontCode {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        legrack::FrontCode::parse(text).map(|inner| PyFrontCode { inner }).map_err(val)
    }

    #[staticmethod]
    fn corpus(name: &str) -> PyResult<Self> {
        legrack::corpus::code(name)
            .map(|inner| PyFrontCode { inner })
            .ok_or_else(|| PyValueError::new_err(format!("no corpus code `{name}`")))
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name.clone()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("FrontCode({:?})", self.inner.to_text().trim())
    }

    /// Violations as strings; empty when valid.
    fn validate(&self) -> Vec<String> {
        self.inner.validate().iter().map(|v| v.to_string()).collect()
    }

    /// `(tb, rot, writhe, up_cusps, down_cusps)`
    fn invariants(&self) -> PyResult<(i64, i64, i64, usize, usize)> {
        let c = self.inner.classical_invariants().map_err(val)?;
        Ok((c.tb, c.rot, c.writhe, c.up_cusps, c.down_cusps))
    }

    /// `kind` is `"+"` or `"-"`.
    fn stabilize(&self, kind: &str, site: usize) -> PyResult<Self> {
        let k = match kind {
            "+" => Stabilization::Plus,
            "-" => Stabilization::Minus,
            _ => return Err(PyValueError::new_err("kind must be '+' or '-'")),
        };
        frontcode::stabilize(&self.inner, k, site).map(|inner| PyFrontCode { inner }).map_err(val)
    }

    /// Applies move 1, 2 or 3 in direction `"fwd"` or `"bwd"` at `site`.
    fn apply_move(&self, kind: u8, direction: &str, site: &str) -> PyResult<Self> {
        let kind = match kind {
            1 => MoveKind::Lr1,
            2 => MoveKind::Lr2,
            3 => MoveKind::Lr3,
            _ => return Err(PyValueError::new_err("move must be 1, 2 or 3")),
        };
        let dir = match direction {
            "fwd" => Direction::Forward,
            "bwd" => Direction::Backward,
            _ => return Err(PyValueError::new_err("direction must be 'fwd' or 'bwd'")),
        };
        let spec = MoveSpec::parse(kind, dir, site).map_err(val)?;
        frontcode::apply_move(&self.inner, &spec).map(|inner| PyFrontCode { inner }).map_err(val)
    }

    /// Applicable moves as `(kind, direction, site)` triples.
    fn move_instances(&self) -> Vec<(u8, String, String)> {
        frontcode::move_instances(&self.inner)
            .into_iter()
            .map(|m| {
                let k = match m.kind() {
                    MoveKind::Lr1 => 1,
                    MoveKind::Lr2 => 2,
                    MoveKind::Lr3 => 3,
                };
                let d = if m.direction() == Direction::Forward { "fwd" } else { "bwd" };
                (k, d.to_string(), m.site())
            })
            .collect()
    }

    fn full_presentation(&self) -> PyResult<PyPresentation> {
        presentation::extract_full(&self.inner).map(|p| PyPresentation { inner: p.into() }).map_err(val)
    }

    fn reduced_presentation(&self) -> PyResult<PyPresentation> {
        presentation::extract_reduced(&self.inner).map(|p| PyPresentation { inner: p.into() }).map_err(val)
    }

    /// `(omega, p, q, gens, cusps)`
    fn summary(&self) -> PyResult<(i64, u64, u64, usize, u64)> {
        let s = summarize_code(&self.inner).map_err(val)?;
        Ok((s.omega, s.p, s.q, s.gens, s.cusps))
    }
}

/// A full or reduced presentation of a fundamental GL-rack.
#[pyclass(name = "Presentation", module = "pylegrack", from_py_object)]
#[derive(Clone)]
struct PyPresentation {
    inner: legrack::Presentation,
}

#[pymethods]
impl PyPresentation {
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        legrack::Presentation::parse(text).map(|inner| PyPresentation { inner }).map_err(val)
    }

    #[staticmethod]
    fn corpus(name: &str) -> PyResult<Self> {
        legrack::corpus::presentation(name)
            .map(|inner| PyPresentation { inner })
            .ok_or_else(|| PyValueError::new_err(format!("no corpus presentation `{name}`")))
    }

    #[getter]
    fn gens(&self) -> usize {
        self.inner.gens()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// Relations as equations; reduced presentations only.
    #[pyo3(signature = (letter = 'x'))]
    fn pretty(&self, letter: char) -> PyResult<Vec<String>> {
        match &self.inner {
            legrack::Presentation::Reduced(r) => Ok(r.pretty(letter)),
            legrack::Presentation::Full(_) => Err(PyValueError::new_err("pretty printing needs a reduced presentation")),
        }
    }

    /// `(omega, p, q, gens, cusps)`
    fn summary(&self) -> PyResult<(i64, u64, u64, usize, u64)> {
        let s = self.inner.summary().map_err(val)?;
        Ok((s.omega, s.p, s.q, s.gens, s.cusps))
    }

    fn __repr__(&self) -> String {
        format!("Presentation(gens={})", self.inner.gens())
    }
}

/// A finite generalized Legendrian rack given by tables.
#[pyclass(name = "GlRack", module = "pylegrack", from_py_object)]
#[derive(Clone)]
struct PyGlRack {
    inner: glrack::FiniteGlRack,
}

#[pymethods]
impl PyGlRack {
    /// Validates all axioms; raises with every violation otherwise.
    #[new]
    fn new(n: usize, op: Vec<usize>, u: Vec<usize>, d: Vec<usize>) -> PyResult<Self> {
        glrack::FiniteGlRack::from_tables(n, op, u, d).map(|inner| PyGlRack { inner }).map_err(val)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        glrack::FiniteGlRack::parse(text).map(|inner| PyGlRack { inner }).map_err(val)
    }

    /// `(Z_k, x*y = x+1, u = σ^-a, d = σ^-b)` with `a + b = 1`.
    #[staticmethod]
    fn permutation(k: usize, a: i64, b: i64) -> PyResult<Self> {
        mk_permutation_family(k, a, b).map(|inner| PyGlRack { inner }).map_err(val)
    }

    #[staticmethod]
    fn trivial(n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("n must be at least 1"));
        }
        Ok(PyGlRack { inner: mk_trivial(n) })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    fn op(&self, x: usize, y: usize) -> PyResult<usize> {
        if x >= self.inner.order() || y >= self.inner.order() {
            return Err(PyValueError::new_err("element out of range"));
        }
        Ok(self.inner.op(x, y))
    }

    #[getter]
    fn u(&self) -> Vec<usize> {
        self.inner.u().to_vec()
    }

    #[getter]
    fn d(&self) -> Vec<usize> {
        self.inner.d().to_vec()
    }

    #[getter]
    fn table(&self) -> Vec<usize> {
        self.inner.rack().table().to_vec()
    }

    fn is_quandle(&self) -> bool {
        self.inner.rack().is_quandle()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn __repr__(&self) -> String {
        format!("GlRack(order={})", self.inner.order())
    }

    fn __eq__(&self, other: &PyGlRack) -> bool {
        self.inner == other.inner
    }
}

/// Exact count of colorings; with `emit`, also up to `cap` assignments.
#[pyfunction]
#[pyo3(signature = (pres, rack, emit = false, cap = coloring::DEFAULT_EMIT_CAP))]
fn count_colorings(
    py: Python<'_>,
    pres: &PyPresentation,
    rack: &PyGlRack,
    emit: bool,
    cap: usize,
) -> PyResult<(u64, Option<Vec<Vec<usize>>>)> {
    let (p, x) = (pres.inner.clone(), rack.inner.clone());
    let r = py
        .detach(move || coloring::count_colorings_with(&p, &x, ColoringOptions { emit, cap }))
        .map_err(val)?;
    Ok((r.count, r.colorings))
}

#[pyfunction]
fn count_bruteforce(pres: &PyPresentation, rack: &PyGlRack) -> PyResult<u64> {
    coloring::count_bruteforce(&pres.inner, &rack.inner).map(|r| r.count).map_err(val)
}

/// Permutation rack count from `(omega, p, q)`.
#[pyfunction]
fn closed_form_permutation(omega: i64, p: u64, q: u64, k: u64, a: i64, b: i64) -> PyResult<u64> {
    let s = presentation::PresentationSummary { omega, p, q, gens: 0, cusps: p + q };
    coloring::closed_form_permutation(&s, k, a, b).map_err(val)
}

#[pyfunction]
fn coloring_profile(pres: &PyPresentation, racks: Vec<PyGlRack>) -> PyResult<Vec<u64>> {
    let xs: Vec<_> = racks.into_iter().map(|r| r.inner).collect();
    coloring::coloring_profile(&pres.inner, &xs).map_err(val)
}

/// One GL-rack per isomorphism class of order `n`.
#[pyfunction]
fn enumerate_glracks(n: usize) -> PyResult<Vec<PyGlRack>> {
    glrack::enumerate_glracks(n).map(|xs| xs.into_iter().map(|inner| PyGlRack { inner }).collect()).map_err(val)
}

#[pyfunction]
fn is_isomorphic(a: &PyGlRack, b: &PyGlRack) -> Option<Vec<usize>> {
    glrack::is_isomorphic(&a.inner, &b.inner)
}

/// Text report comparing two presentations.
#[pyfunction]
#[pyo3(signature = (a, b, slice_genus = None))]
fn gate(a: &PyPresentation, b: &PyPresentation, slice_genus: Option<u64>) -> PyResult<String> {
    let (s1, s2) = (a.inner.summary().map_err(val)?, b.inner.summary().map_err(val)?);
    match slice_genus {
        None => theorem1_gate(&s1, &s2).map(|r| r.to_text()).map_err(val),
        Some(g) => corollary_gate(&s1, &s2, g).map(|r| r.to_text()).map_err(val),
    }
}

#[pymodule]
fn pylegrack(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFrontCode>()?;
    m.add_class::<PyPresentation>()?;
    m.add_class::<PyGlRack>()?;
    m.add_function(wrap_pyfunction!(count_colorings, m)?)?;
    m.add_function(wrap_pyfunction!(count_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form_permutation, m)?)?;
    m.add_function(wrap_pyfunction!(coloring_profile, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_glracks, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(gate, m)?)?;
    Ok(())
}
