use std::sync::Arc;

use ordkit_core::io::{self, Instance, RelationFile};
use ordkit_core::lab::enumerate::{enumerate as run_enumeration, EnumerationBounds, EqualityMode};
use ordkit_core::lab::gallery::{run_all_galleries, run_gallery, GALLERY_NAMES};
use ordkit_core::{
    check_star_condition, classify, coarse_product, compare_weak_orders, derive_leq_n, derive_leq_p,
    gord_to_poset, poset_to_strict, seq_compare, Axiom, EvConstSeq, PosetRel, SeqVerdict, Setoid, Side, StrictRel,
    Verdict,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn witness(labels: &[String], v: &Verdict) -> Option<Vec<String>> {
    v.witness().map(|w| w.iter().map(|&i| labels[i].clone()).collect())
}

fn pairs(v: Vec<(String, String)>) -> Vec<[String; 2]> {
    v.into_iter().map(|(a, b)| [a, b]).collect()
}

fn from_json<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(value_error)?;
    py.import("json")?.call_method1("loads", (text,))
}

/// A strict relation `<` over a carrier with an explicit equality.
#[pyclass(name = "StrictRel", module = "ordkit", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
struct PyStrictRel(StrictRel);

#[pymethods]
impl PyStrictRel {
    /// Related pairs are taken as given; a relation that disagrees with
    /// `equal` raises `ValueError`.
    #[new]
    #[pyo3(signature = (elements, less, equal = Vec::new()))]
    fn new(elements: Vec<String>, less: Vec<(String, String)>, equal: Vec<(String, String)>) -> PyResult<Self> {
        let file = RelationFile { elements, equal: pairs(equal), less: Some(pairs(less)), sim: None };
        match file.to_structure().map_err(value_error)? {
            Instance::Strict(r) => Ok(PyStrictRel(r)),
            Instance::Poset(_) => unreachable!("built with `less`"),
        }
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::parse_strict(text).map(PyStrictRel).map_err(value_error)
    }

    /// `0 < 1 < … < n-1`.
    #[staticmethod]
    fn chain(n: usize) -> Self {
        PyStrictRel(StrictRel::chain(n))
    }

    fn to_json(&self) -> String {
        io::emit_strict(&self.0)
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.0.base().labels().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __repr__(&self) -> String {
        let labels = self.0.base().labels();
        let less: Vec<String> = self.0.matrix().pairs().map(|(x, y)| format!("{}<{}", labels[x], labels[y])).collect();
        format!("StrictRel({{{}}})", less.join(", "))
    }

    fn less(&self, x: &str, y: &str) -> PyResult<bool> {
        let s = self.0.base();
        Ok(self.0.less(s.index_of(x).map_err(value_error)?, s.index_of(y).map_err(value_error)?))
    }

    fn equal(&self, x: &str, y: &str) -> PyResult<bool> {
        let s = self.0.base();
        Ok(s.eq(s.index_of(x).map_err(value_error)?, s.index_of(y).map_err(value_error)?))
    }

    fn matrix(&self) -> Vec<Vec<bool>> {
        self.0.matrix().rows()
    }

    fn dual(&self) -> Self {
        PyStrictRel(self.0.dual())
    }

    /// Maps each axiom name to `None` when it holds, or the violating
    /// elements.
    fn classify<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let labels = self.0.base().labels();
        let profile = classify(&self.0);
        let d = PyDict::new(py);
        for a in Axiom::ALL {
            d.set_item(a.name(), witness(labels, profile.verdict(a)))?;
        }
        Ok(d)
    }

    fn is_generalized_ordered(&self) -> bool {
        classify(&self.0).is_generalized_ordered()
    }

    fn is_ordered_set(&self) -> bool {
        classify(&self.0).is_ordered_set()
    }

    /// `x ≤_N y` iff not `y < x`.
    fn leq_n(&self) -> Vec<Vec<bool>> {
        derive_leq_n(&self.0).rows()
    }

    /// `x ≤_P y` iff every `z < x` has `z < y` and every `y < z` has `x < z`.
    fn leq_p(&self) -> Vec<Vec<bool>> {
        derive_leq_p(&self.0).rows()
    }

    fn compare_weak_orders<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let labels = self.0.base().labels();
        let c = compare_weak_orders(&self.0);
        let d = PyDict::new(py);
        d.set_item("leq_n_within_leq_p", witness(labels, &c.n_subset_of_p))?;
        d.set_item("leq_p_within_leq_n", witness(labels, &c.p_subset_of_n))?;
        d.set_item("equal", witness(labels, &c.equal))?;
        Ok(d)
    }

    fn to_poset(&self) -> PyResult<PyPosetRel> {
        gord_to_poset(&self.0).map(PyPosetRel).map_err(value_error)
    }
}

/// A partial order `∼` over a carrier with an explicit equality.
#[pyclass(name = "PosetRel", module = "ordkit", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyPosetRel(PosetRel);

#[pymethods]
impl PyPosetRel {
    #[new]
    #[pyo3(signature = (elements, sim, equal = Vec::new()))]
    fn new(elements: Vec<String>, sim: Vec<(String, String)>, equal: Vec<(String, String)>) -> PyResult<Self> {
        let file = RelationFile { elements, equal: pairs(equal), less: None, sim: Some(pairs(sim)) };
        match file.to_structure().map_err(value_error)? {
            Instance::Poset(p) => Ok(PyPosetRel(p)),
            Instance::Strict(_) => unreachable!("built with `sim`"),
        }
    }

    fn to_json(&self) -> String {
        io::emit_poset(&self.0)
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.0.base().labels().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn matrix(&self) -> Vec<Vec<bool>> {
        self.0.matrix().rows()
    }

    fn total(&self) -> Option<Vec<String>> {
        witness(self.0.base().labels(), &ordkit_core::axioms::check_total(&self.0))
    }

    fn star_condition(&self) -> Option<Vec<String>> {
        witness(self.0.base().labels(), &check_star_condition(&self.0))
    }

    /// `x < y` iff `x ∼ y` and `x ≠ y`.
    fn to_strict(&self) -> PyStrictRel {
        PyStrictRel(poset_to_strict(&self.0))
    }
}

/// An eventually-constant sequence: a finite prefix, then `tail` forever.
#[pyclass(name = "Sequence", module = "ordkit", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySequence(EvConstSeq);

#[pymethods]
impl PySequence {
    #[new]
    #[pyo3(signature = (base, prefix, tail))]
    fn new(base: &PyStrictRel, prefix: Vec<String>, tail: &str) -> PyResult<Self> {
        EvConstSeq::from_labels(Arc::new(base.0.clone()), &prefix, tail).map(PySequence).map_err(value_error)
    }

    fn normalized(&self) -> Self {
        PySequence(self.0.normalized())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Sequence({})", self.0)
    }

    fn at(&self, k: usize) -> String {
        self.0.base().label(self.0.at(k)).to_string()
    }

    /// `("less" | "greater" | "equal" | "incomparable", first difference)`.
    fn compare(&self, other: &PySequence) -> PyResult<(&'static str, Option<usize>)> {
        let v = seq_compare(&self.0, &other.0).map_err(value_error)?;
        let name = match v {
            SeqVerdict::Less { .. } => "less",
            SeqVerdict::Greater { .. } => "greater",
            SeqVerdict::Equal => "equal",
            SeqVerdict::Incomparable { .. } => "incomparable",
            SeqVerdict::UnknownAfter { .. } => unreachable!("exact comparison"),
        };
        Ok((name, v.witness()))
    }
}

#[pyfunction]
fn parse_relation<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    Ok(match io::parse_relation(text).map_err(value_error)? {
        Instance::Strict(r) => Bound::new(py, PyStrictRel(r))?.into_any(),
        Instance::Poset(p) => Bound::new(py, PyPosetRel(p))?.into_any(),
    })
}

#[pyfunction]
fn lex_product(a: &PyStrictRel, b: &PyStrictRel) -> PyStrictRel {
    PyStrictRel(ordkit_core::lex_product(&a.0, &b.0))
}

#[pyfunction]
fn lex_product_n(parts: Vec<PyStrictRel>) -> PyStrictRel {
    let parts: Vec<StrictRel> = parts.into_iter().map(|p| p.0).collect();
    PyStrictRel(ordkit_core::lex_product_n(&parts))
}

#[pyfunction]
fn weak_lex_product(a: &PyStrictRel, b: &PyStrictRel) -> PyStrictRel {
    PyStrictRel(ordkit_core::weak_lex_product(&a.0, &b.0))
}

/// `side` picks the coordinate that decides both equality and order.
#[pyfunction]
#[pyo3(signature = (a, b, side = "left"))]
fn coarse(a: &PyStrictRel, b: &PyStrictRel, side: &str) -> PyResult<PyStrictRel> {
    let side = match side {
        "left" => Side::Left,
        "right" => Side::Right,
        other => return Err(value_error(format!("side must be `left` or `right`, got `{other}`"))),
    };
    Ok(PyStrictRel(coarse_product(&a.0, &b.0, side)))
}

/// Checks every relation on `size` elements; returns the summary as a dict.
#[pyfunction]
#[pyo3(signature = (size, equality = "identity"))]
fn enumerate<'py>(py: Python<'py>, size: usize, equality: &str) -> PyResult<Bound<'py, PyAny>> {
    let mode: EqualityMode = equality.parse().map_err(value_error)?;
    let summary = py
        .detach(|| run_enumeration(size, mode, &EnumerationBounds::default()))
        .map_err(value_error)?;
    from_json(py, &summary)
}

#[pyfunction]
#[pyo3(signature = (name = None))]
fn gallery<'py>(py: Python<'py>, name: Option<&str>) -> PyResult<Bound<'py, PyAny>> {
    let reports = match name {
        None => run_all_galleries(),
        Some(n) => run_gallery(n).ok_or_else(|| {
            value_error(format!("unknown gallery `{n}`; available: {}", GALLERY_NAMES.join(", ")))
        })?,
    };
    from_json(py, &reports)
}

#[pyfunction]
fn setoid_classes(elements: Vec<String>, equal: Vec<(String, String)>) -> PyResult<Vec<Vec<String>>> {
    let s = Setoid::new(elements, equal).map_err(value_error)?;
    Ok(s.classes().into_iter().map(|c| c.into_iter().map(|i| s.label(i).to_string()).collect()).collect())
}

#[pymodule]
fn ordkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyStrictRel>()?;
    m.add_class::<PyPosetRel>()?;
    m.add_class::<PySequence>()?;
    m.add_function(wrap_pyfunction!(parse_relation, m)?)?;
    m.add_function(wrap_pyfunction!(lex_product, m)?)?;
    m.add_function(wrap_pyfunction!(lex_product_n, m)?)?;
    m.add_function(wrap_pyfunction!(weak_lex_product, m)?)?;
    m.add_function(wrap_pyfunction!(coarse, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(gallery, m)?)?;
    m.add_function(wrap_pyfunction!(setoid_classes, m)?)?;
    m.add("GALLERY_NAMES", GALLERY_NAMES.to_vec())?;
    Ok(())
}
