//! Python bindings: the main types and operations of the toolkit.

use cyclic_census::analysis::{hasse_dot, subgroup_lattice, sylow_count};
use cyclic_census::tables::DEFAULT_SCAN_BOUND;
use cyclic_census::{
    count_cyclic, cyclic_profile, enumerate_cyclic_subgroups, is_clt, parse_spec,
    verify_group_axioms, FiniteGroup, DEFAULT_ORDER_CAP,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use std::collections::BTreeMap;

fn err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite group held as an explicit multiplication table.
#[pyclass(name = "Group")]
struct PyGroup {
    inner: FiniteGroup,
}

#[pymethods]
impl PyGroup {
    #[new]
    #[pyo3(signature = (spec, order_cap = DEFAULT_ORDER_CAP))]
    fn new(spec: &str, order_cap: u64) -> PyResult<Self> {
        let g = parse_spec(spec).map_err(err)?.build(order_cap).map_err(err)?;
        Ok(PyGroup { inner: g })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn label(&self) -> String {
        self.inner.label().to_string()
    }

    fn mul(&self, a: u16, b: u16) -> PyResult<u16> {
        let n = self.inner.order() as u16;
        if a >= n || b >= n {
            return Err(err("element index out of range"));
        }
        Ok(self.inner.mul(cyclic_census::Element(a), cyclic_census::Element(b)).0)
    }

    fn element_order(&self, x: u16) -> PyResult<u32> {
        self.inner.element_order(cyclic_census::Element(x)).map_err(err)
    }

    fn axioms_hold(&self) -> bool {
        verify_group_axioms(&self.inner).holds
    }

    fn count_cyclic(&self) -> u64 {
        count_cyclic(&self.inner)
    }

    /// {"order": n, "total": c, "per_order": {m: c_m}}
    fn profile(&self) -> (u64, u64, BTreeMap<u64, u64>) {
        let p = cyclic_profile(&self.inner);
        (p.group_order, p.total, p.per_order)
    }

    fn cyclic_subgroups(&self) -> Vec<Vec<u16>> {
        enumerate_cyclic_subgroups(&self.inner).into_iter().map(|s| s.elements).collect()
    }

    fn is_clt(&self) -> PyResult<bool> {
        is_clt(&self.inner).map_err(err)
    }

    fn sylow_count(&self, p: u64) -> PyResult<u64> {
        sylow_count(&self.inner, p).map_err(err)
    }

    fn lattice_size(&self) -> PyResult<usize> {
        Ok(subgroup_lattice(&self.inner).map_err(err)?.subgroups.len())
    }

    fn hasse_dot(&self) -> PyResult<String> {
        Ok(hasse_dot(&subgroup_lattice(&self.inner).map_err(err)?))
    }

    fn __repr__(&self) -> String {
        format!("Group({:?}, order={})", self.inner.label(), self.inner.order())
    }
}

/// Total number of cyclic subgroups of the group the spec describes.
#[pyfunction]
#[pyo3(signature = (spec, order_cap = DEFAULT_ORDER_CAP))]
fn count(spec: &str, order_cap: u64) -> PyResult<u64> {
    let g = parse_spec(spec).map_err(err)?.build(order_cap).map_err(err)?;
    Ok(count_cyclic(&g))
}

#[pyfunction]
fn euler_phi(m: u64) -> u64 {
    cyclic_census::euler_phi(m)
}

#[pyfunction]
fn divisor_count(n: u64) -> u64 {
    cyclic_census::divisor_count(n)
}

#[pyfunction]
fn omega(n: u64) -> u32 {
    cyclic_census::omega(n)
}

#[pyfunction]
fn abelian_count(invariants: Vec<u64>) -> PyResult<u64> {
    if invariants.is_empty() || invariants.contains(&0) {
        return Err(err("invariants must be positive"));
    }
    Ok(cyclic_census::abelian_count(&invariants))
}

#[pyfunction]
fn shape_classes(n: u64) -> Vec<String> {
    cyclic_census::shape_classes(n)
}

#[pyfunction]
fn admissible_shapes(n: u64) -> Vec<Vec<u32>> {
    cyclic_census::admissible_shapes(n).into_iter().map(|s| s.exponents).collect()
}

#[pyfunction]
fn table_ids() -> PyResult<Vec<String>> {
    Ok(cyclic_census::all_scenarios().map_err(err)?.into_iter().map(|s| s.id).collect())
}

/// Full reproduction report for one table, as a JSON string.
#[pyfunction]
fn reproduce_table(id: &str) -> PyResult<String> {
    let sc = cyclic_census::scenario_by_id(id).map_err(err)?;
    let rep = cyclic_census::reproduce_table(&sc, DEFAULT_SCAN_BOUND).map_err(err)?;
    Ok(rep.to_json().to_string())
}

/// (pass, report JSON) for the 11- or 12-cyclic membership check.
#[pyfunction]
fn verify_theorem(n: u64) -> PyResult<(bool, String)> {
    if n != 11 && n != 12 {
        return Err(err("only 11 and 12 are classified"));
    }
    let rep = cyclic_census::verify_theorem(n, DEFAULT_ORDER_CAP);
    Ok((rep.pass, rep.to_json().to_string()))
}

#[pyfunction]
fn verify_registry() -> (bool, String) {
    let rep = cyclic_census::verify_registry();
    (rep.pass, rep.to_json().to_string())
}

/// (pass, summary JSON) for the full table audit.
#[pyfunction]
fn audit_tables() -> PyResult<(bool, String)> {
    let scenarios = cyclic_census::all_scenarios().map_err(err)?;
    let audit = cyclic_census::audit_tables(&scenarios, DEFAULT_SCAN_BOUND).map_err(err)?;
    Ok((audit.pass, audit.to_json().to_string()))
}

#[pymodule]
fn cyclic_census_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGroup>()?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(euler_phi, m)?)?;
    m.add_function(wrap_pyfunction!(divisor_count, m)?)?;
    m.add_function(wrap_pyfunction!(omega, m)?)?;
    m.add_function(wrap_pyfunction!(abelian_count, m)?)?;
    m.add_function(wrap_pyfunction!(shape_classes, m)?)?;
    m.add_function(wrap_pyfunction!(admissible_shapes, m)?)?;
    m.add_function(wrap_pyfunction!(table_ids, m)?)?;
    m.add_function(wrap_pyfunction!(reproduce_table, m)?)?;
    m.add_function(wrap_pyfunction!(verify_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(verify_registry, m)?)?;
    m.add_function(wrap_pyfunction!(audit_tables, m)?)?;
    Ok(())
}
