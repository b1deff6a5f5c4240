//! Python bindings: catalog surfaces, δ reports, ray walks and verification.

use pyo3::exceptions::{PyKeyError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use wdp_delta::catalog::{get_surface, list_surfaces, CatalogEntry};
use wdp_delta::cli::{evaluate, verify_entry};
use wdp_delta::delta::{Evaluator, Extraction};
use wdp_delta::json;
use wdp_delta::picard::DivisorClass;
use wdp_delta::zariski::{decompose_at, walk_ray_from};
use wdp_delta::Rat;

/// `(stratum, expected, computed)`.
type Mismatch = (String, String, String);

fn runtime(e: impl std::fmt::Display) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn parse_rat(s: &str) -> PyResult<Rat> {
    s.parse().map_err(|_| PyValueError::new_err(format!("not a rational: {s:?}")))
}

/// A catalog surface.
#[pyclass(frozen, module = "wdp_delta_py")]
struct Surface {
    entry: CatalogEntry,
}

impl Surface {
    fn class(&self, ray: &str) -> PyResult<DivisorClass> {
        let m = &self.entry.model;
        match m.generator(ray) {
            Ok(c) => Ok(c.clone()),
            Err(_) => DivisorClass::parse(ray, &m.basis)
                .ok()
                .filter(|c| c.rank() == m.rank())
                .ok_or_else(|| PyValueError::new_err(format!("unknown curve or class {ray:?}"))),
        }
    }
}

#[pymethods]
impl Surface {
    #[new]
    fn new(id: &str) -> PyResult<Surface> {
        get_surface(id).map(|entry| Surface { entry }).map_err(|e| PyKeyError::new_err(e.to_string()))
    }

    #[getter]
    fn id(&self) -> String {
        self.entry.id().to_string()
    }

    /// Anti-canonical degree as `"n/d"`.
    #[getter]
    fn degree(&self) -> String {
        self.entry.model.degree.fraction_string()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.entry.model.basis.clone()
    }

    /// `(label, class)` pairs, the class rendered in the basis.
    fn generators(&self) -> Vec<(String, String)> {
        let m = &self.entry.model;
        m.generators.iter().map(|(l, c)| (l.clone(), m.render(c))).collect()
    }

    /// Intersection number of two curves or classes.
    fn pair(&self, a: &str, b: &str) -> PyResult<String> {
        Ok(self.entry.model.dot(&self.class(a)?, &self.class(b)?).fraction_string())
    }

    /// `S(E)` for a curve on the surface.
    fn s_invariant(&self, curve: &str) -> PyResult<String> {
        let e = &self.entry;
        Evaluator::new(&e.model, &e.aux).s_divisor(&Extraction::curve(curve)).map(|s| s.fraction_string()).map_err(runtime)
    }

    /// Full δ report as a JSON document.
    fn report(&self) -> PyResult<String> {
        evaluate(&self.entry).map(|r| json::to_string(&json::report_json(&r))).map_err(runtime)
    }

    fn global_delta(&self) -> PyResult<String> {
        evaluate(&self.entry).map(|r| r.global_delta.fraction_string()).map_err(runtime)
    }

    /// Chambers of `-K - uB` as a JSON document.
    fn walk(&self, ray: &str) -> PyResult<String> {
        let m = &self.entry.model;
        walk_ray_from(m, &m.anti_canonical, &self.class(ray)?).map(|r| json::to_string(&json::ray_json(m, &r))).map_err(runtime)
    }

    /// `(P, {label: coefficient})` of `-K - uB`, P rendered in the basis.
    fn decompose(&self, ray: &str, u: &str) -> PyResult<(String, Vec<(String, String)>)> {
        let m = &self.entry.model;
        let d = m.anti_canonical.add_scaled(&-parse_rat(u)?, &self.class(ray)?);
        let z = decompose_at(m, &d).map_err(runtime)?;
        Ok((m.render(&z.p), z.n.iter().map(|(l, c)| (l.clone(), c.fraction_string())).collect()))
    }

    /// `(passed, [(stratum, expected, computed)])` against the expected table.
    fn verify(&self) -> PyResult<(bool, Vec<Mismatch>)> {
        let v = verify_entry(&self.entry).map_err(runtime)?;
        let diffs = v.mismatches.iter().map(|(l, a, b)| (l.clone(), a.fraction_string(), b.fraction_string())).collect();
        Ok((v.passed, diffs))
    }

    fn __repr__(&self) -> String {
        format!("Surface({:?})", self.entry.id())
    }
}

#[pyfunction]
fn surfaces() -> Vec<&'static str> {
    list_surfaces()
}

#[pymodule]
fn wdp_delta_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Surface>()?;
    m.add_function(wrap_pyfunction!(surfaces, m)?)?;
    Ok(())
}
