//! Python bindings for knotoid-core.

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;

use knotoid_core as core;
use knotoid_core::{Family, KinkOrder, R2Variant, Role, Sign, StrandOrientation};

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn family(name: &str) -> PyResult<Family> {
    name.parse().map_err(value_error)
}

fn sign(value: i64) -> PyResult<Sign> {
    match value {
        1 => Ok(Sign::Positive),
        -1 => Ok(Sign::Negative),
        _ => Err(PyValueError::new_err("sign must be +1 or -1")),
    }
}

fn role(name: &str) -> PyResult<Role> {
    match name {
        "O" | "over" => Ok(Role::Over),
        "U" | "under" => Ok(Role::Under),
        _ => Err(PyValueError::new_err("role must be 'O'/'over' or 'U'/'under'")),
    }
}

/// A permutation of {1..n}.
#[pyclass(name = "Permutation", module = "knotoid", frozen, skip_from_py_object, eq, hash, ord)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyPermutation(core::Permutation);

#[pymethods]
impl PyPermutation {
    /// Build from the one-based image list [σ(1), …, σ(n)].
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        core::Permutation::from_images(&images).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn parse(degree: usize, cycles: &str) -> PyResult<Self> {
        core::Permutation::parse_cycles(degree, cycles).map(Self).map_err(value_error)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn images(&self) -> Vec<usize> {
        self.0.images()
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        self.0.cycles()
    }

    /// Smallest k ≥ 1 with σ^k the identity.
    fn order(&self) -> u64 {
        self.0.order()
    }

    fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    /// `self ∘ other`: apply `other` first.
    fn compose(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(value_error)
    }

    fn __call__(&self, x: usize) -> PyResult<usize> {
        if x == 0 || x > self.0.degree() {
            return Err(PyIndexError::new_err(format!("{x} is outside 1..={}", self.0.degree())));
        }
        Ok(self.0.apply(x))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.images())
    }
}

/// A finite biquandle on {1..n}.
#[pyclass(name = "Biquandle", module = "knotoid", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyBiquandle(core::Biquandle);

#[pymethods]
impl PyBiquandle {
    /// Parse and validate the n × 2n block-matrix text.
    #[staticmethod]
    fn from_matrix(text: &str) -> PyResult<Self> {
        core::Biquandle::parse_matrix(text).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn alexander(n: usize, t: i64, s: i64) -> PyResult<Self> {
        core::Biquandle::alexander(n, t, s).map(Self).map_err(value_error)
    }

    #[staticmethod]
    fn constant_action(sigma: &PyPermutation) -> PyResult<Self> {
        core::Biquandle::constant_action(&sigma.0).map(Self).map_err(value_error)
    }

    /// n-fold conjugation quandle of a group given by its multiplication table.
    #[staticmethod]
    fn conjugation_quandle(table: Vec<Vec<usize>>, m: i64) -> PyResult<Self> {
        let g = core::GroupTable::new(table).map_err(value_error)?;
        Ok(Self(core::Biquandle::conjugation_quandle(&g, m)))
    }

    #[staticmethod]
    fn core_quandle(table: Vec<Vec<usize>>) -> PyResult<Self> {
        let g = core::GroupTable::new(table).map_err(value_error)?;
        Ok(Self(core::Biquandle::core_quandle(&g)))
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[pyo3(signature = (family, b, x))]
    fn action(&self, family: &str, b: usize, x: usize) -> PyResult<usize> {
        self.0.action(self::family(family)?, b, x).map_err(value_error)
    }

    fn inverse_action(&self, family: &str, b: usize, x: usize) -> PyResult<usize> {
        self.0.inverse_action(self::family(family)?, b, x).map_err(value_error)
    }

    fn column(&self, family: &str, b: usize) -> PyResult<PyPermutation> {
        self.0.column(self::family(family)?, b).map(PyPermutation).map_err(value_error)
    }

    fn is_quandle(&self) -> bool {
        self.0.is_quandle()
    }

    fn to_matrix(&self) -> String {
        self.0.serialize_matrix()
    }

    fn __repr__(&self) -> String {
        format!("Biquandle(order={})", self.0.order())
    }
}

/// Axiom violations of a block-matrix text, one message each; empty when valid.
#[pyfunction]
fn check_matrix(text: &str) -> PyResult<Vec<String>> {
    let tables = core::biquandle::parse_tables(text).map_err(value_error)?;
    let report = core::biquandle::validate(&tables).map_err(value_error)?;
    Ok(report.violations.iter().map(|v| v.to_string()).collect())
}

/// A knotoid diagram given by an open Gauss code.
#[pyclass(name = "KnotoidDiagram", module = "knotoid", frozen, skip_from_py_object, eq, hash)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyDiagram(core::KnotoidDiagram);

#[pymethods]
impl PyDiagram {
    #[new]
    #[pyo3(signature = (code = ""))]
    fn new(code: &str) -> PyResult<Self> {
        core::KnotoidDiagram::parse_gauss(code).map(Self).map_err(value_error)
    }

    #[getter]
    fn crossing_count(&self) -> usize {
        self.0.crossing_count()
    }

    #[getter]
    fn semiarc_count(&self) -> usize {
        self.0.semiarc_count()
    }

    fn mirror(&self) -> Self {
        Self(self.0.mirror())
    }

    /// Add a kink on semiarc `position`; `order` is "OU" or "UO".
    #[pyo3(signature = (position, sign, order = "OU"))]
    fn r1_insert(&self, position: usize, sign: i64, order: &str) -> PyResult<Self> {
        let order = match order {
            "OU" => KinkOrder::OverUnder,
            "UO" => KinkOrder::UnderOver,
            _ => return Err(PyValueError::new_err("order must be 'OU' or 'UO'")),
        };
        self.0
            .r1_insert(position, self::sign(sign)?, order)
            .map(Self)
            .map_err(value_error)
    }

    /// Push semiarc `position_a` across `position_b`; `role` is the role of
    /// the strand at `position_a`.
    #[pyo3(signature = (position_a, position_b, role = "O", parallel = true, sign = 1))]
    fn r2_insert(&self, position_a: usize, position_b: usize, role: &str, parallel: bool, sign: i64) -> PyResult<Self> {
        let variant = R2Variant {
            role_at_a: self::role(role)?,
            orientation: if parallel {
                StrandOrientation::Parallel
            } else {
                StrandOrientation::Antiparallel
            },
        };
        self.0
            .r2_insert(position_a, position_b, variant, self::sign(sign)?)
            .map(Self)
            .map_err(value_error)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("KnotoidDiagram({:?})", self.0.to_string())
    }
}

#[pyfunction]
fn colorings(diagram: &PyDiagram, biquandle: &PyBiquandle) -> Vec<Vec<usize>> {
    core::enumerate_colorings(&diagram.0, &biquandle.0)
        .into_iter()
        .map(|f| f.colors().to_vec())
        .collect()
}

#[pyfunction]
fn counting_invariant(diagram: &PyDiagram, biquandle: &PyBiquandle) -> usize {
    core::counting_invariant(&diagram.0, &biquandle.0)
}

#[pyfunction]
fn counting_matrix(diagram: &PyDiagram, biquandle: &PyBiquandle) -> Vec<Vec<u64>> {
    core::counting_matrix(&diagram.0, &biquandle.0).entries
}

#[pyfunction]
#[pyo3(signature = (diagram, biquandle, family = "beta"))]
fn longitude_multiset(diagram: &PyDiagram, biquandle: &PyBiquandle, family: &str) -> PyResult<Vec<PyPermutation>> {
    Ok(core::longitude_multiset(&diagram.0, &biquandle.0, self::family(family)?)
        .into_iter()
        .map(|w| PyPermutation(w.permutation))
        .collect())
}

#[pyfunction]
fn longitude_pairs(diagram: &PyDiagram, biquandle: &PyBiquandle) -> Vec<(PyPermutation, PyPermutation)> {
    core::longitude_pair_multiset(&diagram.0, &biquandle.0)
        .into_iter()
        .map(|(b, a)| (PyPermutation(b), PyPermutation(a)))
        .collect()
}

/// Longitude weight of one coloring.
#[pyfunction]
#[pyo3(signature = (diagram, coloring, biquandle, family = "beta"))]
fn longitude_weight(
    diagram: &PyDiagram,
    coloring: Vec<usize>,
    biquandle: &PyBiquandle,
    family: &str,
) -> PyResult<PyPermutation> {
    core::blw(&diagram.0, &core::Coloring::new(coloring), &biquandle.0, self::family(family)?)
        .map(PyPermutation)
        .map_err(value_error)
}

#[pyfunction]
#[pyo3(signature = (diagram, biquandle, family = "beta"))]
fn ble(diagram: &PyDiagram, biquandle: &PyBiquandle, family: &str) -> PyResult<String> {
    Ok(core::ble_polynomial(&diagram.0, &biquandle.0, self::family(family)?).to_string())
}

#[pyfunction]
fn ble2(diagram: &PyDiagram, biquandle: &PyBiquandle) -> String {
    core::ble2_polynomial(&diagram.0, &biquandle.0).to_string()
}

fn grid(m: core::PolynomialMatrix) -> Vec<Vec<String>> {
    m.entries
        .iter()
        .map(|row| row.iter().map(|p| p.to_string()).collect())
        .collect()
}

#[pyfunction]
#[pyo3(signature = (diagram, biquandle, family = "beta"))]
fn ble_matrix(diagram: &PyDiagram, biquandle: &PyBiquandle, family: &str) -> PyResult<Vec<Vec<String>>> {
    Ok(grid(core::ble_matrix(&diagram.0, &biquandle.0, self::family(family)?)))
}

#[pyfunction]
fn ble2_matrix(diagram: &PyDiagram, biquandle: &PyBiquandle) -> Vec<Vec<String>> {
    grid(core::ble2_matrix(&diagram.0, &biquandle.0))
}

/// Alexander longitudes of every coloring, as strings like "x+1".
#[pyfunction]
#[pyo3(signature = (diagram, n, t, s, family = "beta"))]
fn alexander_longitudes(diagram: &PyDiagram, n: u64, t: i64, s: i64, family: &str) -> PyResult<Vec<String>> {
    let maps = core::alexander_longitude_multiset(&diagram.0, n, t, s, self::family(family)?).map_err(value_error)?;
    Ok(maps.iter().map(|m| m.to_string()).collect())
}

/// Group named diagrams by an invariant; returns (canonical value, names) pairs.
#[pyfunction]
#[pyo3(signature = (corpus, invariant, biquandle = None, alexander = None, family = "beta"))]
fn partition(
    corpus: &str,
    invariant: &str,
    biquandle: Option<&PyBiquandle>,
    alexander: Option<(u64, i64, i64)>,
    family: &str,
) -> PyResult<Vec<(String, Vec<String>)>> {
    let entries = core::parse_corpus(corpus).map_err(value_error)?;
    let kind: core::InvariantKind = invariant.parse().map_err(value_error)?;
    let family = self::family(family)?;
    let ctx = match (biquandle, alexander) {
        (_, Some((n, t, s))) => {
            core::InvariantContext::alexander(core::AlexanderParams { n, t, s }, family).map_err(value_error)?
        }
        (Some(b), None) => core::InvariantContext::new(b.0.clone(), family),
        (None, None) => return Err(PyValueError::new_err("pass a biquandle or alexander=(n, t, s)")),
    };
    let report = core::partition(&entries, kind, &ctx).map_err(value_error)?;
    Ok(report
        .groups
        .into_iter()
        .map(|g| (g.value.canonical(), g.names))
        .collect())
}

#[pymodule]
fn knotoid(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyBiquandle>()?;
    m.add_class::<PyDiagram>()?;
    m.add_function(wrap_pyfunction!(check_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(colorings, m)?)?;
    m.add_function(wrap_pyfunction!(counting_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(counting_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(longitude_multiset, m)?)?;
    m.add_function(wrap_pyfunction!(longitude_pairs, m)?)?;
    m.add_function(wrap_pyfunction!(longitude_weight, m)?)?;
    m.add_function(wrap_pyfunction!(ble, m)?)?;
    m.add_function(wrap_pyfunction!(ble2, m)?)?;
    m.add_function(wrap_pyfunction!(ble_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(ble2_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(alexander_longitudes, m)?)?;
    m.add_function(wrap_pyfunction!(partition, m)?)?;
    Ok(())
}
