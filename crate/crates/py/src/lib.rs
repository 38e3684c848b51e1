//! Python bindings: tables, the condition checkers, the link oracle and the
//! Garside, Artin and free-group constructions.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use syspres::artin::{dual_table as build_dual, OrientedLabeledGraph};
use syspres::conditions::{ConditionReport, CONDITION_VARIABLES};
use syspres::cycles::check_six_large as six_large;
use syspres::free::counterexample_realization;
use syspres::garside::{check_gcd_condition as gcd_check, classify_garside as classify, AmalgamSpec};
use syspres::link::build_link;

fn value_error(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "ProductTable", module = "syspres_py", frozen, skip_from_py_object)]
struct PyProductTable {
    inner: syspres::ProductTable,
}

#[pymethods]
impl PyProductTable {
    #[new]
    fn new(generators: Vec<String>, products: Vec<(String, String, String)>) -> PyResult<Self> {
        let inner = syspres::ProductTable::new(
            generators.iter().map(String::as_str),
            products
                .iter()
                .map(|(s, t, u)| (s.as_str(), t.as_str(), u.as_str())),
        )
        .map_err(value_error)?;
        Ok(Self { inner })
    }

    /// Parses the `generators:` / `product:` text format.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        syspres::ProductTable::parse(text)
            .map(|inner| Self { inner })
            .map_err(value_error)
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.inner.names().to_vec()
    }

    fn products(&self) -> Vec<(String, String, String)> {
        self.inner
            .named_products()
            .map(|(s, t, u)| (s.to_string(), t.to_string(), u.to_string()))
            .collect()
    }

    fn product(&self, s: &str, t: &str) -> Option<String> {
        let (s, t) = (self.inner.gen(s)?, self.inner.gen(t)?);
        self.inner.product(s, t).map(|u| self.inner.name(u).to_string())
    }

    /// Descriptions of violated invariants; empty when valid.
    fn validate(&self) -> Vec<String> {
        let r = self.inner.validate();
        r.violations
            .iter()
            .map(|v| self.inner.describe_violation(v))
            .collect()
    }

    fn is_valid(&self) -> bool {
        self.inner.validate().is_valid()
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!(
            "ProductTable({} generators, {} products)",
            self.inner.len(),
            self.inner.num_products()
        )
    }
}

fn report_dict<'py>(
    py: Python<'py>,
    t: &syspres::ProductTable,
    r: &ConditionReport,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("overall", r.overall())?;
    d.set_item(
        "failing",
        r.failing().into_iter().map(u32::from).collect::<Vec<_>>(),
    )?;
    let witnesses = PyDict::new(py);
    for o in &r.outcomes {
        let vars = CONDITION_VARIABLES[usize::from(o.condition) - 1];
        let ws: Vec<Vec<(String, String)>> = o
            .witnesses
            .iter()
            .map(|w| {
                vars.iter()
                    .zip(w)
                    .map(|(v, &g)| (v.to_string(), t.name(g).to_string()))
                    .collect()
            })
            .collect();
        witnesses.set_item(o.condition, ws)?;
    }
    d.set_item("witnesses", witnesses)?;
    Ok(d)
}

fn checked(table: &PyProductTable) -> PyResult<&syspres::ProductTable> {
    if table.inner.validate().is_valid() {
        Ok(&table.inner)
    } else {
        Err(PyValueError::new_err("table fails validation"))
    }
}

/// Five-condition check. Returns `{"overall", "failing", "witnesses"}`.
#[pyfunction]
#[pyo3(signature = (table, literal = false))]
fn check_systolic_conditions<'py>(
    py: Python<'py>,
    table: &PyProductTable,
    literal: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let t = checked(table)?;
    let r = if literal {
        syspres::check_literal_conditions(t)
    } else {
        syspres::check_systolic_conditions(t)
    };
    report_dict(py, t, &r)
}

#[pyfunction]
fn check_conditions_via_orders<'py>(py: Python<'py>, table: &PyProductTable) -> PyResult<Bound<'py, PyDict>> {
    let t = checked(table)?;
    let r = syspres::check_conditions_via_orders(t).map_err(value_error)?;
    report_dict(py, t, &r)
}

/// 6-largeness of the link of the identity.
#[pyfunction]
fn check_six_large<'py>(py: Python<'py>, table: &PyProductTable) -> PyResult<Bound<'py, PyDict>> {
    let t = checked(table)?;
    let link = build_link(t);
    let r = six_large(&link);
    let d = PyDict::new(py);
    d.set_item("passed", r.passed())?;
    d.set_item("vertices", link.num_vertices())?;
    d.set_item("edges", link.edges().len())?;
    d.set_item("four_cycles", r.four_cycles)?;
    d.set_item("five_cycles", r.five_cycles)?;
    let cycles: Vec<String> = r.diagonal_free.iter().map(|c| c.display(&link)).collect();
    d.set_item("diagonal_free", cycles)?;
    Ok(d)
}

/// Garside table of a spec such as `"2x3"` or `"1x2;1x3"`.
#[pyfunction]
fn garside_table(spec: &str) -> PyResult<PyProductTable> {
    let spec: AmalgamSpec = spec.parse().map_err(value_error)?;
    Ok(PyProductTable {
        inner: syspres::garside::garside_table(&spec),
    })
}

#[pyfunction]
fn check_gcd_condition(table: &PyProductTable) -> PyResult<bool> {
    Ok(gcd_check(checked(table)?).map_err(value_error)?.passed())
}

/// Canonical amalgam spec of a Garside table.
#[pyfunction]
fn classify_garside(table: &PyProductTable) -> PyResult<String> {
    classify(checked(table)?)
        .map(|s| s.to_string())
        .map_err(value_error)
}

/// Dual table of a graph in the `vertex:` / `edge:` text format; returns
/// `(table, warnings)`.
#[pyfunction]
fn dual_table(graph: &str) -> PyResult<(PyProductTable, Vec<String>)> {
    let g = OrientedLabeledGraph::parse(graph).map_err(value_error)?;
    let d = build_dual(&g).map_err(value_error)?;
    Ok((PyProductTable { inner: d.table }, d.warnings))
}

fn index(i: u8) -> PyResult<u8> {
    if (1..=5).contains(&i) {
        Ok(i)
    } else {
        Err(PyValueError::new_err("counterexample index must be in 1..=5"))
    }
}

#[pyfunction]
fn counterexample_table(i: u8) -> PyResult<PyProductTable> {
    Ok(PyProductTable {
        inner: counterexample_realization(index(i)?).table(),
    })
}

/// Runs the 512-triple word check; returns `(passed, first_failure)`.
#[pyfunction]
fn verify_counterexample(i: u8) -> PyResult<(bool, Option<String>)> {
    let v = counterexample_realization(index(i)?).verify();
    let failure = v
        .first_failure
        .map(|((a, b, c), f)| format!("({a},{b},{c}): {f:?}"));
    Ok((v.passed(), failure))
}

#[pymodule]
fn syspres_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyProductTable>()?;
    m.add_function(wrap_pyfunction!(check_systolic_conditions, m)?)?;
    m.add_function(wrap_pyfunction!(check_conditions_via_orders, m)?)?;
    m.add_function(wrap_pyfunction!(check_six_large, m)?)?;
    m.add_function(wrap_pyfunction!(garside_table, m)?)?;
    m.add_function(wrap_pyfunction!(check_gcd_condition, m)?)?;
    m.add_function(wrap_pyfunction!(classify_garside, m)?)?;
    m.add_function(wrap_pyfunction!(dual_table, m)?)?;
    m.add_function(wrap_pyfunction!(counterexample_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify_counterexample, m)?)?;
    Ok(())
}
