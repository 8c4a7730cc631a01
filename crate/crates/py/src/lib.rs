//! Python bindings. Structured results (reports, verdicts, count tables)
//! come back as plain dicts built from the same JSON the CLI prints.

use std::fmt::Display;

use hausdorff_core::constructions::Construction;
use hausdorff_core::enumeration::{self, CountFilter};
use hausdorff_core::format::{emit_topology, parse_topology};
use hausdorff_core::separation::{self, AnalysisReport, SeparationDecision};
use hausdorff_core::symbolic::{self, SymbolicPoint, VerticalCount};
use hausdorff_core::{FiniteTopology, PointSet};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: impl Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(err)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn filter(t0_only: bool) -> CountFilter {
    if t0_only {
        CountFilter::T0
    } else {
        CountFilter::All
    }
}

fn point_set(points: &[usize], n: usize) -> PyResult<PointSet> {
    PointSet::try_from_points(points.iter().copied(), n)
        .map_err(|p| err(format!("point {p} is out of range for {n} points")))
}

fn sets(n: usize, family: Vec<Vec<usize>>) -> PyResult<Vec<PointSet>> {
    family.iter().map(|s| point_set(s, n)).collect()
}

/// A topology on the points 0..n, stored by its open sets.
#[pyclass(name = "Topology", module = "hausdorff", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyTopology(FiniteTopology);

#[pymethods]
impl PyTopology {
    /// Validate a family of open sets; raises ValueError listing what is missing.
    #[new]
    fn new(n: usize, opens: Vec<Vec<usize>>) -> PyResult<Self> {
        let family = sets(n, opens)?;
        FiniteTopology::validate(n, &family).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_subbasis(n: usize, subbasis: Vec<Vec<usize>>) -> PyResult<Self> {
        let family = sets(n, subbasis)?;
        FiniteTopology::from_subbasis(n, &family).map(Self).map_err(err)
    }

    /// Parse a finite-topology/v1 document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_topology(text).map(|t| Self(t.topology)).map_err(err)
    }

    #[staticmethod]
    fn discrete(n: usize) -> PyResult<Self> {
        FiniteTopology::discrete(n).map(Self).map_err(err)
    }

    #[staticmethod]
    fn indiscrete(n: usize) -> PyResult<Self> {
        FiniteTopology::indiscrete(n).map(Self).map_err(err)
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    #[getter]
    fn opens(&self) -> Vec<Vec<usize>> {
        self.0.opens().iter().map(|u| u.to_vec()).collect()
    }

    fn minimal_neighborhoods(&self) -> Vec<Vec<usize>> {
        self.0.minimal_neighborhoods().iter().map(|u| u.to_vec()).collect()
    }

    fn is_open(&self, points: Vec<usize>) -> PyResult<bool> {
        Ok(self.0.is_open(point_set(&points, self.0.n())?))
    }

    fn hausdorff_number(&self) -> usize {
        separation::hausdorff_number(&self.0).value
    }

    /// A non-separable set of size H − 1.
    fn largest_nonseparable(&self) -> Vec<usize> {
        separation::hausdorff_number(&self.0).largest_nonseparable.to_vec()
    }

    /// Exhaustive search straight from the definition; at most 5 points.
    fn oracle_hausdorff_number(&self) -> PyResult<usize> {
        separation::hausdorff_number_oracle(&self.0)
            .map(|h| h.value)
            .map_err(err)
    }

    fn is_n_hausdorff(&self, k: usize) -> PyResult<bool> {
        separation::is_n_hausdorff(&self.0, k).map_err(err)
    }

    fn is_separable(&self, points: Vec<usize>) -> PyResult<bool> {
        let a = point_set(&points, self.0.n())?;
        Ok(separation::is_separable(&self.0, a).map_err(err)?.is_separable())
    }

    /// Pairs (point, open set) with empty common intersection, or None.
    fn separation_witness(&self, points: Vec<usize>) -> PyResult<Option<Vec<(usize, Vec<usize>)>>> {
        let a = point_set(&points, self.0.n())?;
        Ok(match separation::is_separable(&self.0, a).map_err(err)? {
            SeparationDecision::Separable(w) => Some(
                w.assignments
                    .iter()
                    .map(|(p, u)| (*p, u.to_vec()))
                    .collect(),
            ),
            SeparationDecision::NonSeparable { .. } => None,
        })
    }

    fn axioms(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &separation::axioms_report(&self.0))
    }

    #[pyo3(signature = (oracle = false))]
    fn analyze(&self, py: Python<'_>, oracle: bool) -> PyResult<Py<PyAny>> {
        let mut report = AnalysisReport::new(&self.0);
        if oracle {
            report = report.with_oracle(&self.0).map_err(err)?;
        }
        to_py(py, &report)
    }

    /// The subspace on `points` and, for each new index, its original label.
    fn subspace(&self, points: Vec<usize>) -> PyResult<(Self, Vec<usize>)> {
        let s = point_set(&points, self.0.n())?;
        let (t, labels) = self.0.subspace(s).map_err(err)?;
        Ok((Self(t), labels))
    }

    fn permuted(&self, perm: Vec<usize>) -> PyResult<Self> {
        self.0.permuted(&perm).map(Self).map_err(err)
    }

    /// Hex string shared by exactly the homeomorphic topologies.
    fn canonical_form(&self) -> PyResult<String> {
        Ok(enumeration::canonical_form(&self.0).map_err(err)?.to_string())
    }

    #[pyo3(signature = (name = None))]
    fn to_json(&self, name: Option<&str>) -> String {
        emit_topology(&self.0, name)
    }

    fn __len__(&self) -> usize {
        self.0.n()
    }

    fn __repr__(&self) -> String {
        let opens: Vec<String> = self.0.opens().iter().map(|u| u.to_string()).collect();
        format!("Topology(n={}, opens=[{}])", self.0.n(), opens.join(", "))
    }
}

/// One of the bug-eyed interval spaces. Points are written "b:p/q" or "v:m".
#[pyclass(name = "BugEyedSpace", module = "hausdorff", frozen)]
struct PyBugEyed(symbolic::BugEyedSpace);

fn parse_symbolic(points: &[String]) -> PyResult<Vec<SymbolicPoint>> {
    points.iter().map(|p| p.parse().map_err(err)).collect()
}

#[pymethods]
impl PyBugEyed {
    /// `verticals` is a positive int or "omega"; `t1=False` drops the puncture.
    #[new]
    #[pyo3(signature = (verticals = None, t1 = true))]
    fn new(verticals: Option<&Bound<'_, PyAny>>, t1: bool) -> PyResult<Self> {
        let count = match verticals {
            None => VerticalCount::Finite(1),
            Some(v) => match v.extract::<u64>() {
                Ok(k) => VerticalCount::Finite(k),
                Err(_) => v.extract::<String>()?.parse().map_err(err)?,
            },
        };
        symbolic::BugEyedSpace::new(count, t1).map(Self).map_err(err)
    }

    fn contains(&self, point: &str) -> PyResult<bool> {
        Ok(self.0.contains_point(&point.parse().map_err(err)?))
    }

    /// Verdict dict: a witness when separable, a certificate otherwise.
    fn separable(&self, py: Python<'_>, points: Vec<String>) -> PyResult<Py<PyAny>> {
        let points = parse_symbolic(&points)?;
        to_py(py, &self.0.separable(&points).map_err(err)?)
    }

    fn is_separable(&self, points: Vec<String>) -> PyResult<bool> {
        let points = parse_symbolic(&points)?;
        Ok(self.0.separable(&points).map_err(err)?.is_separable())
    }

    fn hausdorff_number(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &self.0.hausdorff_number())
    }

    fn t1_status(&self, py: Python<'_>, p: &str, q: &str) -> PyResult<Py<PyAny>> {
        let (p, q) = (p.parse().map_err(err)?, q.parse().map_err(err)?);
        to_py(py, &self.0.t1_status(&p, &q).map_err(err)?)
    }

    fn __repr__(&self) -> String {
        format!("{:?}", self.0)
    }
}

/// Every labeled topology on n points.
#[pyfunction]
fn enumerate_labeled(n: usize) -> PyResult<Vec<PyTopology>> {
    Ok(enumeration::enumerate_labeled(n).map_err(err)?.map(PyTopology).collect())
}

/// One representative per homeomorphism class.
#[pyfunction]
fn enumerate_classes(n: usize) -> PyResult<Vec<PyTopology>> {
    Ok(enumeration::enumerate_classes(n)
        .map_err(err)?
        .into_iter()
        .map(|(_, t)| PyTopology(t))
        .collect())
}

#[pyfunction]
#[pyo3(signature = (n, t0_only = false, jobs = 1))]
fn count_labeled(py: Python<'_>, n: usize, t0_only: bool, jobs: usize) -> PyResult<u64> {
    py.detach(|| enumeration::count_labeled(n, filter(t0_only), jobs))
        .map_err(err)
}

#[pyfunction]
#[pyo3(signature = (n, t0_only = false, jobs = 1))]
fn count_by_hausdorff(py: Python<'_>, n: usize, t0_only: bool, jobs: usize) -> PyResult<Py<PyAny>> {
    let table = py
        .detach(|| enumeration::count_by_hausdorff(n, filter(t0_only), jobs))
        .map_err(err)?;
    to_py(py, &table)
}

#[pyfunction]
fn stirling(py: Python<'_>, n: usize) -> PyResult<Py<PyAny>> {
    to_py(py, &enumeration::stirling_consistency(n).map_err(err)?)
}

/// A named construction: "three-point", "two-block:N", "four-point", "doubled:N".
#[pyfunction]
fn example(name: &str) -> PyResult<PyTopology> {
    let c: Construction = name.parse().map_err(err)?;
    c.build().map(PyTopology).map_err(err)
}

#[pymodule]
fn hausdorff(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTopology>()?;
    m.add_class::<PyBugEyed>()?;
    m.add_function(wrap_pyfunction!(enumerate_labeled, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_classes, m)?)?;
    m.add_function(wrap_pyfunction!(count_labeled, m)?)?;
    m.add_function(wrap_pyfunction!(count_by_hausdorff, m)?)?;
    m.add_function(wrap_pyfunction!(stirling, m)?)?;
    m.add_function(wrap_pyfunction!(example, m)?)?;
    Ok(())
}
