//! Python bindings: `import specgraph`.

use std::sync::Arc;

use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ::specgraph as core;
use core::decompose::{self, Decomposition};
use core::document::InputDocument;
use core::graph::{self as graphs, PrimeGraph, SimplicialComplex};
use core::ideal::{make_context, MonomialPrime, SquarefreeIdeal as CoreIdeal, VariableContext};
use core::report::{AnalyzeJson, Render};
use core::verdicts;

create_exception!(specgraph, SpecgraphError, PyException);
create_exception!(specgraph, InputError, SpecgraphError);
create_exception!(specgraph, CapacityError, SpecgraphError);
create_exception!(specgraph, InvariantError, SpecgraphError);

fn raise(e: core::Error) -> PyErr {
    let msg = e.to_string();
    match e {
        core::Error::Capacity(_) => CapacityError::new_err(msg),
        core::Error::Invariant(_) => InvariantError::new_err(msg),
        _ => InputError::new_err(msg),
    }
}

trait OrRaise<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrRaise<T> for core::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(raise)
    }
}

/// A squarefree monomial ideal over named variables.
#[pyclass(name = "Ideal", module = "specgraph", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyIdeal {
    inner: CoreIdeal,
}

impl PyIdeal {
    fn wrap(inner: CoreIdeal) -> Self {
        PyIdeal { inner }
    }

    fn ctx(&self) -> &Arc<VariableContext> {
        self.inner.context()
    }

    fn prime(&self, names: Vec<String>) -> PyResult<MonomialPrime> {
        Ok(MonomialPrime::new(self.ctx().varset_by_names(&names).py()?))
    }

    fn names(&self, primes: &[MonomialPrime]) -> Vec<Vec<String>> {
        primes.iter().map(|p| self.ctx().set_names(p.vars())).collect()
    }
}

#[pymethods]
impl PyIdeal {
    /// `Ideal(["x", "y", "z"], "(y, x*z)")`
    #[new]
    fn new(variables: Vec<String>, text: &str) -> PyResult<Self> {
        let ctx = make_context(&variables).py()?;
        Ok(Self::wrap(core::parse::parse_ideal(text, &ctx).py()?))
    }

    #[staticmethod]
    fn zero(variables: Vec<String>) -> PyResult<Self> {
        Ok(Self::wrap(CoreIdeal::zero(&make_context(&variables).py()?)))
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.ctx().names().to_vec()
    }

    /// Generator supports as lists of variable names.
    #[getter]
    fn generators(&self) -> Vec<Vec<String>> {
        self.inner.gens().iter().map(|g| self.ctx().set_names(*g)).collect()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Ideal({:?}, {:?})", self.ctx().names(), self.inner.to_string())
    }

    fn is_unit(&self) -> bool {
        self.inner.is_unit()
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    fn __add__(&self, other: &PyIdeal) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.sum(&other.inner).py()?))
    }

    fn __and__(&self, other: &PyIdeal) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.intersect(&other.inner).py()?))
    }

    fn contained_in_prime(&self, prime: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.contained_in_prime(self.prime(prime)?))
    }

    fn minimal_primes(&self) -> PyResult<Vec<Vec<String>>> {
        Ok(self.names(&decompose::minimal_primes(&self.inner).py()?))
    }

    fn height(&self) -> PyResult<usize> {
        decompose::height(&self.inner).py()
    }

    fn dim(&self) -> PyResult<usize> {
        decompose::dim_quotient(&self.inner).py()
    }

    fn is_unmixed(&self) -> PyResult<bool> {
        Ok(Decomposition::of(&self.inner).py()?.is_unmixed())
    }

    fn ideal_top(&self) -> PyResult<Self> {
        Ok(Self::wrap(decompose::ideal_top(&self.inner).py()?))
    }

    fn lower_part(&self) -> PyResult<Self> {
        Ok(Self::wrap(decompose::lower_part(&self.inner).py()?))
    }

    fn split_hc(&self) -> PyResult<Vec<Self>> {
        Ok(verdicts::split_hc(&self.inner).py()?.into_iter().map(Self::wrap).collect())
    }

    /// `u_A(self)` with `A = R/ambient`.
    fn u_ideal(&self, ambient: &PyIdeal) -> PyResult<Self> {
        Ok(Self::wrap(decompose::u_ideal(&ambient.inner, &self.inner).py()?))
    }

    /// Height of a monomial prime containing this ideal, measured in R/self.
    fn height_in_quotient(&self, prime: Vec<String>) -> PyResult<usize> {
        graphs::height_in_quotient(&self.inner, self.prime(prime)?).py()
    }

    /// `(statement, result)` for the top local cohomology module.
    fn hc_verdict(&self) -> PyResult<(String, String)> {
        let v = verdicts::analyze_hc(&self.inner).py()?;
        Ok((v.statement, v.result.as_str().to_string()))
    }
}

fn graph_dict<'py>(py: Python<'py>, ctx: &VariableContext, g: &PrimeGraph) -> PyResult<Bound<'py, PyDict>> {
    let cert = graphs::connectivity(g);
    if !cert.validate(g) {
        return Err(InvariantError::new_err("connectivity certificate failed to re-validate"));
    }
    let d = PyDict::new(py);
    d.set_item("kind", g.kind.cli_name())?;
    let vertices: Vec<Vec<String>> = g.vertices.iter().map(|v| ctx.set_names(*v)).collect();
    d.set_item("vertices", vertices)?;
    d.set_item("edges", g.edges.clone())?;
    d.set_item("status", cert.status.as_str())?;
    d.set_item("components", cert.components)?;
    Ok(d)
}

/// One prime graph with its connectivity: kind is `def51` (needs `quotient`
/// for a nonzero J), `def61` or `punctured`.
#[pyfunction]
#[pyo3(signature = (kind, ideal, quotient=None))]
fn prime_graph<'py>(
    py: Python<'py>,
    kind: &str,
    ideal: &PyIdeal,
    quotient: Option<&PyIdeal>,
) -> PyResult<Bound<'py, PyDict>> {
    let zero = CoreIdeal::zero(ideal.ctx());
    let g = match kind {
        "def51" => graphs::off_locus_graph(quotient.map_or(&zero, |q| &q.inner), &ideal.inner),
        "def61" => graphs::codim_one_graph(&ideal.inner),
        "punctured" => graphs::punctured_graph(&ideal.inner),
        other => return Err(InputError::new_err(format!("unknown graph kind {other:?}"))),
    }
    .py()?;
    graph_dict(py, ideal.ctx(), &g)
}

/// Stanley-Reisner ideal of the complex with the given facets.
#[pyfunction]
fn stanley_reisner(variables: Vec<String>, facets: Vec<Vec<String>>) -> PyResult<PyIdeal> {
    let ctx = make_context(&variables).py()?;
    let faces = facets.iter().map(|f| ctx.varset_by_names(f)).collect::<core::Result<Vec<_>>>().py()?;
    let complex = SimplicialComplex::new(&ctx, faces).py()?;
    Ok(PyIdeal::wrap(graphs::stanley_reisner(&ctx, &complex).py()?))
}

/// Full analysis of an input document, returned as `specgraph/1` JSON.
#[pyfunction]
fn analyze(document: &str) -> PyResult<String> {
    let case = InputDocument::from_json(document).py()?.resolve().py()?;
    Ok(AnalyzeJson::for_case(&case).py()?.to_json())
}

/// Oracle comparisons for an input document as `(name, agree, detail)` tuples.
#[pyfunction]
fn verify(document: &str) -> PyResult<Vec<(String, bool, String)>> {
    let case = InputDocument::from_json(document).py()?.resolve().py()?;
    let checks = core::crosscheck::crosscheck(&case).py()?;
    Ok(checks.into_iter().map(|c| (c.name, c.agree, c.detail)).collect())
}

#[pymodule]
fn specgraph(m: &Bound<'_, PyModule>) -> PyResult<()> {
    let py = m.py();
    m.add_class::<PyIdeal>()?;
    m.add_function(wrap_pyfunction!(prime_graph, m)?)?;
    m.add_function(wrap_pyfunction!(stanley_reisner, m)?)?;
    m.add_function(wrap_pyfunction!(analyze, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add("SpecgraphError", py.get_type::<SpecgraphError>())?;
    m.add("InputError", py.get_type::<InputError>())?;
    m.add("CapacityError", py.get_type::<CapacityError>())?;
    m.add("InvariantError", py.get_type::<InvariantError>())?;
    m.add("SCHEMA", core::report::SCHEMA)?;
    Ok(())
}
