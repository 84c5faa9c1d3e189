//! Python bindings for the `transversal` crate.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

use transversal::oracle::{random_path_circular, PathLimits};
use transversal::path_circular::{bicircular, multipath};
use transversal::{
    alpha_table, contract_presentation, is_contraction_transversal, is_cotransversal,
    maximal_presentation, minimal_presenting_graph, normalize_presentation, selftest, Dual,
    ElementSet, Error, GroundSet, PathCircularInstance, PivotKind, RankOracle, SimpleGraph,
    TransversalMatroid, DEFAULT_MAX_GROUND,
};

create_exception!(pytransversal, TransversalError, PyException);
create_exception!(pytransversal, NotTransversalError, TransversalError);
create_exception!(pytransversal, InvalidInstanceError, TransversalError);

fn py_err(e: Error) -> PyErr {
    match e {
        Error::DuplicateLabel(_)
        | Error::EmptyLabel
        | Error::UnknownLabel(_)
        | Error::OutOfGround { .. }
        | Error::Parse(_) => PyValueError::new_err(e.to_string()),
        Error::NotTransversal { .. } => NotTransversalError::new_err(e.to_string()),
        Error::InvalidInstance(_) => InvalidInstanceError::new_err(e.to_string()),
        _ => TransversalError::new_err(e.to_string()),
    }
}

fn subset(ground: &GroundSet, labels: Option<Vec<String>>) -> PyResult<ElementSet> {
    match labels {
        None => Ok(ground.full()),
        Some(l) => ground.subset(&l).map_err(py_err),
    }
}

/// `(transversal, kind, edges)` as returned by `contract_check`.
type CheckTuple = (bool, &'static str, Vec<(usize, usize)>);

fn element(ground: &GroundSet, label: &str) -> PyResult<usize> {
    ground.require(label).map_err(py_err)
}

/// A finite family of subsets of a labelled ground set.
#[pyclass(name = "Presentation", module = "pytransversal", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyPresentation {
    inner: transversal::Presentation,
}

#[pymethods]
impl PyPresentation {
    #[new]
    fn new(elements: Vec<String>, sets: Vec<Vec<String>>) -> PyResult<Self> {
        let ground = GroundSet::new(elements).map_err(py_err)?;
        let sets = sets
            .iter()
            .map(|s| ground.subset(s))
            .collect::<transversal::Result<Vec<_>>>()
            .map_err(py_err)?;
        let inner = transversal::Presentation::new(ground, sets).map_err(py_err)?;
        Ok(Self { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = transversal::Presentation::parse(text).map_err(py_err)?;
        Ok(Self { inner })
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.inner.ground().labels().to_vec()
    }

    #[getter]
    fn sets(&self) -> Vec<Vec<String>> {
        self.inner.sets().iter().map(|&s| self.inner.ground().names(s)).collect()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("Presentation{}", self.inner.describe())
    }
}

/// The transversal matroid presented by a set system.
#[pyclass(name = "TransversalMatroid", module = "pytransversal", frozen)]
struct PyMatroid {
    inner: TransversalMatroid,
    max_ground: usize,
}

impl PyMatroid {
    fn ground(&self) -> &GroundSet {
        self.inner.ground()
    }

    fn names(&self, set: ElementSet) -> Vec<String> {
        self.ground().names(set)
    }
}

#[pymethods]
impl PyMatroid {
    #[new]
    #[pyo3(signature = (presentation, max_ground = DEFAULT_MAX_GROUND))]
    fn new(presentation: &PyPresentation, max_ground: usize) -> Self {
        Self {
            inner: TransversalMatroid::new(presentation.inner.clone()),
            max_ground,
        }
    }

    #[getter]
    fn elements(&self) -> Vec<String> {
        self.ground().labels().to_vec()
    }

    #[getter]
    fn presentation(&self) -> PyPresentation {
        PyPresentation {
            inner: self.inner.presentation().clone(),
        }
    }

    #[pyo3(signature = (subset = None))]
    fn rank(&self, subset: Option<Vec<String>>) -> PyResult<usize> {
        Ok(self.inner.rank(self::subset(self.ground(), subset)?))
    }

    #[pyo3(signature = (subset = None))]
    fn dual_rank(&self, subset: Option<Vec<String>>) -> PyResult<usize> {
        Ok(self.inner.dual_rank(self::subset(self.ground(), subset)?))
    }

    #[pyo3(signature = (subset, dual = false))]
    fn closure(&self, subset: Vec<String>, dual: bool) -> PyResult<Vec<String>> {
        let x = self::subset(self.ground(), Some(subset))?;
        let c = if dual {
            self.inner.dual_closure(x)
        } else {
            self.inner.closure(x)
        };
        Ok(self.names(c))
    }

    fn loops(&self) -> Vec<String> {
        self.names(self.inner.loops())
    }

    fn coloops(&self) -> Vec<String> {
        self.names(self.inner.coloops())
    }

    /// Cyclic flats with their alpha values, as `(flat, alpha)` pairs.
    #[pyo3(signature = (dual = false))]
    fn alpha(&self, dual: bool) -> PyResult<Vec<(Vec<String>, i64)>> {
        let table = if dual {
            alpha_table(&Dual(&self.inner), self.max_ground)
        } else {
            alpha_table(&self.inner, self.max_ground)
        }
        .map_err(py_err)?;
        Ok(table.entries().iter().map(|&(f, a)| (self.names(f), a)).collect())
    }

    #[pyo3(signature = (dual = false))]
    fn is_cotransversal(&self, dual: bool) -> PyResult<bool> {
        let verdict = if dual {
            is_cotransversal(&Dual(&self.inner), self.max_ground)
        } else {
            is_cotransversal(&self.inner, self.max_ground)
        }
        .map_err(py_err)?;
        Ok(verdict.cotransversal)
    }

    fn maximal_presentation(&self) -> PyResult<PyPresentation> {
        let (normalized, _) = normalize_presentation(&self.inner, self.max_ground).map_err(py_err)?;
        let inner = maximal_presentation(&normalized).map_err(py_err)?;
        Ok(PyPresentation { inner })
    }

    /// Whether `M / e` is transversal; returns `(transversal, kind, edges)`.
    fn contract_check(&self, element: &str) -> PyResult<CheckTuple> {
        let e = self::element(self.ground(), element)?;
        let check = is_contraction_transversal(&self.inner, e, self.max_ground).map_err(py_err)?;
        let kind = match check.kind {
            PivotKind::Loop => "loop",
            PivotKind::Coloop => "coloop",
            PivotKind::Ordinary => "ordinary",
        };
        Ok((check.transversal, kind, check.graph.edges.iter().copied().collect()))
    }

    /// A verified presentation of `M / e`.
    fn contract(&self, element: &str) -> PyResult<PyPresentation> {
        let e = self::element(self.ground(), element)?;
        let out = contract_presentation(&self.inner, e, self.max_ground).map_err(py_err)?;
        Ok(PyPresentation {
            inner: out.presentation,
        })
    }

    fn minimal_graph_dot(&self, element: &str) -> PyResult<String> {
        let e = self::element(self.ground(), element)?;
        let (normalized, _) = normalize_presentation(&self.inner, self.max_ground).map_err(py_err)?;
        let g = minimal_presenting_graph(&normalized, e).map_err(py_err)?;
        Ok(g.to_dot(&normalized))
    }

    fn __repr__(&self) -> String {
        format!("TransversalMatroid{}", self.inner.presentation().describe())
    }
}

/// A graph with a family of labelled paths.
#[pyclass(name = "PathCircular", module = "pytransversal", frozen)]
struct PyPathCircular {
    inner: PathCircularInstance,
}

fn wrap(inner: transversal::Result<PathCircularInstance>) -> PyResult<PyPathCircular> {
    inner.map(|inner| PyPathCircular { inner }).map_err(py_err)
}

#[pymethods]
impl PyPathCircular {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        wrap(PathCircularInstance::parse(text))
    }

    #[staticmethod]
    fn bicircular(vertices: Vec<String>, edges: Vec<(String, String)>) -> PyResult<Self> {
        let h = SimpleGraph::new(vertices)
            .and_then(|g| g.with_edges(&edges))
            .map_err(py_err)?;
        wrap(bicircular(&h))
    }

    #[staticmethod]
    fn multipath(n: usize, intervals: Vec<(usize, usize)>) -> PyResult<Self> {
        wrap(multipath(n, &intervals))
    }

    #[staticmethod]
    fn random(seed: u64) -> PyResult<Self> {
        wrap(random_path_circular(seed, &PathLimits::default()))
    }

    fn to_json(&self) -> String {
        self.inner.to_json_string()
    }

    fn to_dot(&self) -> String {
        self.inner.to_dot()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.inner.labels().to_vec()
    }

    #[getter]
    fn paths(&self) -> Vec<Vec<String>> {
        (0..self.inner.n_paths()).map(|i| self.inner.path_names(i)).collect()
    }

    /// Violated conditions, one message each; empty when valid.
    fn violations(&self) -> Vec<String> {
        let v = self.inner.validate();
        v.violations.iter().map(|x| self.inner.describe_violation(x)).collect()
    }

    fn is_valid(&self) -> bool {
        self.inner.validate().is_valid()
    }

    fn presentation(&self) -> PyResult<PyPresentation> {
        let inner = self.inner.presentation().map_err(py_err)?;
        Ok(PyPresentation { inner })
    }

    fn delete(&self, label: &str) -> PyResult<Self> {
        wrap(self.inner.delete_path(label))
    }

    #[pyo3(signature = (label, max_ground = DEFAULT_MAX_GROUND))]
    fn contract(&self, label: &str, max_ground: usize) -> PyResult<Self> {
        wrap(self.inner.contract_path(label, max_ground))
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }
}

/// Runs the randomized self-checks and returns the report as JSON.
#[pyfunction]
#[pyo3(signature = (seed = 1, cases = 100))]
fn run_selftest(seed: u64, cases: usize) -> PyResult<String> {
    let report = selftest::run_all(seed, cases);
    serde_json::to_string(&report).map_err(|e| TransversalError::new_err(e.to_string()))
}

#[pymodule]
fn pytransversal(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPresentation>()?;
    m.add_class::<PyMatroid>()?;
    m.add_class::<PyPathCircular>()?;
    m.add_function(wrap_pyfunction!(run_selftest, m)?)?;
    let py = m.py();
    m.add("TransversalError", py.get_type::<TransversalError>())?;
    m.add("NotTransversalError", py.get_type::<NotTransversalError>())?;
    m.add("InvalidInstanceError", py.get_type::<InvalidInstanceError>())?;
    Ok(())
}
