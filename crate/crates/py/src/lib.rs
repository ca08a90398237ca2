//! Python bindings for the conformal Hochschild cohomology workbench.
//!
//! Chains are plain lists of indices, linear combinations come back as lists
//! of `(basis, coefficient)` pairs with exact `fractions.Fraction`
//! coefficients, and cohomology tables are dictionaries mirroring the JSON
//! report schema.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use conformal_hochschild::closed::tilde_partial_fast;
use conformal_hochschild::cohomology::{Calculator, CohomologyReport, Method};
use conformal_hochschild::current::{
    current_cohomology_dim, current_cohomology_table, ordinary_hochschild_dim as ordinary_dim,
    theorem_check as run_theorem_check, FiniteAlgebra,
};
use conformal_hochschild::morse::{
    chain_predicate, enumerate_chains, g_map as g_map_paths, tilde_partial_general, AnickChain,
};
use conformal_hochschild::rewrite::{normal_form_word, Family, LinComb, Word};
use conformal_hochschild::Rational;
use conformal_hochschild::selftest::{run_suite, Suite};

type Terms = Vec<(Vec<u32>, Rational)>;

fn parse_family(name: &str) -> PyResult<Family> {
    match name.to_ascii_lowercase().as_str() {
        "u2" | "u(2)" => Ok(Family::U2),
        "u3" | "u(3)" => Ok(Family::U3),
        other => Err(PyValueError::new_err(format!("unknown family `{other}` (use u2 or u3)"))),
    }
}

fn parse_chain(family: Family, indices: &[u32]) -> PyResult<AnickChain> {
    if !chain_predicate(family, indices) {
        return Err(PyValueError::new_err(format!(
            "{indices:?} is not a chain of {}",
            family.name()
        )));
    }
    Ok(AnickChain::new(indices.to_vec()))
}

fn chain_terms(x: &LinComb<AnickChain>) -> Terms {
    x.iter().map(|(c, coeff)| (c.indices().to_vec(), coeff.clone())).collect()
}

fn load_algebra(spec: &str) -> PyResult<FiniteAlgebra> {
    FiniteAlgebra::load(spec).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn report_to_dict<'py>(py: Python<'py>, report: &CohomologyReport) -> PyResult<Bound<'py, PyDict>> {
    let out = PyDict::new(py);
    out.set_item("family", &report.family)?;
    let caps = PyDict::new(py);
    caps.set_item("n_max", report.caps.n_max)?;
    caps.set_item("deg_max", report.caps.deg_max)?;
    out.set_item("caps", caps)?;
    let entries = pyo3::types::PyList::empty(py);
    for e in &report.entries {
        let cell = PyDict::new(py);
        cell.set_item("n", e.n)?;
        cell.set_item("d", e.d)?;
        cell.set_item("dim_space", e.dim_space)?;
        cell.set_item("dim_kernel", e.dim_kernel)?;
        cell.set_item("dim_ker_delta", e.dim_ker_delta)?;
        cell.set_item("dim_im_delta", e.dim_im_delta)?;
        cell.set_item("cohomology", e.cohomology)?;
        entries.append(cell)?;
    }
    out.set_item("entries", entries)?;
    let totals = PyDict::new(py);
    for (n, t) in &report.totals {
        totals.set_item(n, t)?;
    }
    out.set_item("totals", totals)?;
    Ok(out)
}

/// Anick chains of the given length and index degree, in lexicographic order.
#[pyfunction]
fn anick_chains(family: &str, n: usize, d: u32) -> PyResult<Vec<Vec<u32>>> {
    let family = parse_family(family)?;
    if n < 1 {
        return Err(PyValueError::new_err("n must be at least 1"));
    }
    Ok(enumerate_chains(family, n, d).iter().map(|c| c.indices().to_vec()).collect())
}

/// Is the index tuple an Anick chain of the family?
#[pyfunction]
fn is_chain(family: &str, indices: Vec<u32>) -> PyResult<bool> {
    Ok(chain_predicate(parse_family(family)?, &indices))
}

/// Gröbner–Shirshov normal form of a word in the generators, as
/// `(word, coefficient)` pairs.
#[pyfunction]
fn normal_form(family: &str, word: Vec<u32>) -> PyResult<Terms> {
    let family = parse_family(family)?;
    let nf = normal_form_word(family, &Word::new(word));
    Ok(nf.iter().map(|(w, c)| (w.letters().to_vec(), c.clone())).collect())
}

/// Anick differential of a chain. `method` is `closed`, `paths`, or `both`.
#[pyfunction]
#[pyo3(signature = (family, chain, method = "both"))]
fn anick_diff(family: &str, chain: Vec<u32>, method: &str) -> PyResult<Terms> {
    let family = parse_family(family)?;
    let chain = parse_chain(family, &chain)?;
    let method: Method =
        method.parse().map_err(PyValueError::new_err)?;
    let mut calc = Calculator::new(family, method, true);
    let out = calc.anick_delta(&chain).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(chain_terms(&out))
}

/// Transferred derivation of a chain. `method` is `closed` (the slotwise
/// rule), `paths` (through the homotopy), or `both`.
#[pyfunction]
#[pyo3(signature = (family, chain, method = "both"))]
fn tilde_partial(family: &str, chain: Vec<u32>, method: &str) -> PyResult<Terms> {
    let family = parse_family(family)?;
    let chain = parse_chain(family, &chain)?;
    let fast = tilde_partial_fast(family, &chain);
    match method {
        "closed" => Ok(chain_terms(&fast)),
        "paths" => Ok(chain_terms(&tilde_partial_general(family, &chain))),
        "both" => {
            let general = tilde_partial_general(family, &chain);
            if general != fast {
                return Err(PyRuntimeError::new_err(format!(
                    "derivation routes disagree on {chain}"
                )));
            }
            Ok(chain_terms(&fast))
        }
        other => Err(PyValueError::new_err(format!("unknown method `{other}`"))),
    }
}

/// The chain homotopy `g` of a chain, as `(components, coefficient)` pairs
/// where each component is a word in the generators.
#[pyfunction]
fn g_map(family: &str, chain: Vec<u32>) -> PyResult<Vec<(Vec<Vec<u32>>, Rational)>> {
    let family = parse_family(family)?;
    let chain = parse_chain(family, &chain)?;
    Ok(g_map_paths(family, &chain)
        .iter()
        .map(|(b, c)| {
            let comps = b.components().iter().map(|w| w.letters().to_vec()).collect();
            (comps, c.clone())
        })
        .collect())
}

/// Dimension of the kernel of the transferred derivation at `(n, d)`.
#[pyfunction]
fn kernel_dim(family: &str, n: usize, d: u32) -> PyResult<usize> {
    let family = parse_family(family)?;
    let mut calc = Calculator::new(family, Method::Closed, true);
    Ok(calc.kernel_basis(n, d).map_err(|e| PyRuntimeError::new_err(e.to_string()))?.dim())
}

/// Kernel basis at `(n, d)` as a list of chain combinations.
#[pyfunction]
fn kernel_basis(family: &str, n: usize, d: u32) -> PyResult<Vec<Terms>> {
    let family = parse_family(family)?;
    let mut calc = Calculator::new(family, Method::Closed, true);
    let kernel = calc.kernel_basis(n, d).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok((0..kernel.dim()).map(|i| chain_terms(&kernel.basis_chains(i))).collect())
}

/// Full cohomology table of a family, mirroring the JSON report schema.
#[pyfunction]
#[pyo3(signature = (family, n_max, deg_max, method = "both"))]
fn cohomology_table<'py>(
    py: Python<'py>,
    family: &str,
    n_max: usize,
    deg_max: u32,
    method: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let family = parse_family(family)?;
    let method: Method = method.parse().map_err(PyValueError::new_err)?;
    let mut calc = Calculator::new(family, method, true);
    let report =
        calc.cohomology_table(n_max, deg_max).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    report_to_dict(py, &report)
}

/// Cohomology table of a current conformal algebra. `algebra` is
/// `builtin:mat:k`, `builtin:truncpoly:N`, or a path to a structure-constant
/// JSON document.
#[pyfunction]
fn current_table<'py>(
    py: Python<'py>,
    algebra: &str,
    n_max: usize,
    deg_max: u32,
) -> PyResult<Bound<'py, PyDict>> {
    let algebra = load_algebra(algebra)?;
    report_to_dict(py, &current_cohomology_table(&algebra, n_max, deg_max))
}

/// `dim H^n(Cur A, k)` in one polynomial degree.
#[pyfunction]
fn current_dim(algebra: &str, n: usize, d: u32) -> PyResult<usize> {
    Ok(current_cohomology_dim(&load_algebra(algebra)?, n, d))
}

/// `dim H^n(A', k)` of the augmented coefficient algebra.
#[pyfunction]
fn ordinary_hochschild_dim(algebra: &str, n: usize) -> PyResult<usize> {
    Ok(ordinary_dim(&load_algebra(algebra)?, n))
}

/// Run the comparison against the ordinary cohomology of the augmented
/// algebra; returns `(name, applicable, lhs, rhs)` rows.
#[pyfunction]
fn theorem_check(
    algebra: &str,
    n_max: usize,
    deg_max: u32,
) -> PyResult<Vec<(String, bool, usize, usize)>> {
    let report = run_theorem_check(&load_algebra(algebra)?, n_max, deg_max);
    Ok(report.items.into_iter().map(|i| (i.name, i.applicable, i.lhs, i.rhs)).collect())
}

/// Run a named invariant suite; returns `(name, passed, details)` rows.
#[pyfunction]
fn selftest(suite: &str) -> PyResult<Vec<(String, bool, String)>> {
    let suite: Suite = suite.parse().map_err(PyValueError::new_err)?;
    Ok(run_suite(suite).into_iter().map(|r| (r.name, r.passed, r.details)).collect())
}

#[pymodule]
fn conformal_hochschild_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(anick_chains, m)?)?;
    m.add_function(wrap_pyfunction!(is_chain, m)?)?;
    m.add_function(wrap_pyfunction!(normal_form, m)?)?;
    m.add_function(wrap_pyfunction!(anick_diff, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_partial, m)?)?;
    m.add_function(wrap_pyfunction!(g_map, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_dim, m)?)?;
    m.add_function(wrap_pyfunction!(kernel_basis, m)?)?;
    m.add_function(wrap_pyfunction!(cohomology_table, m)?)?;
    m.add_function(wrap_pyfunction!(current_table, m)?)?;
    m.add_function(wrap_pyfunction!(current_dim, m)?)?;
    m.add_function(wrap_pyfunction!(ordinary_hochschild_dim, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_check, m)?)?;
    m.add_function(wrap_pyfunction!(selftest, m)?)?;
    Ok(())
}
