//! Python bindings for the auslab toolkit.
//!
//! Exposes structure-constant algebras, the analysis session, and the
//! condition/theorem checks. Build the cdylib and import it as `pyauslab`;
//! see `python/smoke_test.py` at the repository root.

use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use auslab::check;
use auslab::homology::AnalysisSession;
use auslab::rng::DEFAULT_SEED;
use auslab::textio;
use auslab::{AlgebraRef, StructureAlgebra};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A finite-dimensional associative unital algebra over a prime field.
#[pyclass(frozen)]
struct Algebra {
    inner: AlgebraRef,
}

impl Algebra {
    fn wrap(a: StructureAlgebra) -> Self {
        Algebra { inner: Arc::new(a) }
    }
}

#[pymethods]
impl Algebra {
    /// The field F_p as a one-dimensional algebra.
    #[staticmethod]
    fn field(p: u64) -> PyResult<Self> {
        if auslab::PrimeField::new(p).is_err() {
            return Err(value_err(format!("{p} is not a usable prime")));
        }
        Ok(Algebra::wrap(auslab::prime_field_algebra(p)))
    }

    /// F_p[x]/(x^n).
    #[staticmethod]
    fn truncated_polynomial(p: u64, n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(value_err("n must be at least 1"));
        }
        Ok(Algebra::wrap(auslab::truncated_polynomial(p, n)))
    }

    /// The full matrix algebra M_n(F_p).
    #[staticmethod]
    fn matrix(p: u64, n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(value_err("n must be at least 1"));
        }
        Ok(Algebra::wrap(auslab::matrix_algebra(p, n)))
    }

    /// The local algebra F_p<x,y>/(x,y)^2.
    #[staticmethod]
    fn local_rad_square_zero(p: u64) -> PyResult<Self> {
        Ok(Algebra::wrap(auslab::local_rad_square_zero(p)))
    }

    /// The path algebra of the two-vertex quiver with one arrow.
    #[staticmethod]
    fn path_a2(p: u64) -> PyResult<Self> {
        Ok(Algebra::wrap(auslab::path_algebra_a2(p)))
    }

    /// Direct product of two algebras over the same field.
    #[staticmethod]
    fn product(a: &Algebra, b: &Algebra) -> PyResult<Self> {
        if a.inner.field() != b.inner.field() {
            return Err(value_err("product requires a common base field"));
        }
        Ok(Algebra::wrap(auslab::product(&a.inner, &b.inner)))
    }

    /// Parse the line-oriented algebra text format.
    #[staticmethod]
    fn from_text(text: &str, name: &str) -> PyResult<Self> {
        textio::parse_algebra(text, name)
            .map(Algebra::wrap)
            .map_err(value_err)
    }

    /// The lower triangular matrix algebra of degree `t` over this algebra.
    fn lower_triangular(&self, t: usize) -> PyResult<Self> {
        if t == 0 {
            return Err(value_err("t must be at least 1"));
        }
        Ok(Algebra::wrap(auslab::lower_triangular(&self.inner, t)))
    }

    /// The opposite algebra.
    fn opposite(&self) -> Self {
        Algebra::wrap(self.inner.opposite())
    }

    /// Canonical text serialization.
    fn to_text(&self) -> String {
        textio::serialize_algebra(&self.inner)
    }

    /// Violated axioms, as human-readable strings (empty when valid).
    fn validate(&self) -> Vec<String> {
        self.inner
            .validate()
            .iter()
            .map(|v| v.to_string())
            .collect()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn name(&self) -> String {
        self.inner.name().to_string()
    }

    #[getter]
    fn p(&self) -> u64 {
        self.inner.field().modulus()
    }

    fn __repr__(&self) -> String {
        format!(
            "Algebra({}, dim {}, F_{})",
            self.inner.name(),
            self.inner.dim(),
            self.inner.field().modulus()
        )
    }
}

/// Analysis session over one algebra: resolutions, dimension profiles,
/// condition checks, theorem verifications. Results are memoized.
#[pyclass(frozen)]
struct Analysis {
    ctx: Arc<AnalysisSession>,
}

#[pymethods]
impl Analysis {
    #[new]
    #[pyo3(signature = (algebra, seed = DEFAULT_SEED))]
    fn new(algebra: &Algebra, seed: u64) -> Self {
        Analysis {
            ctx: AnalysisSession::new(algebra.inner.clone(), seed),
        }
    }

    /// Rendered profile entries `r.fd I^0 .. r.fd I^max_degree`
    /// ("-inf", "n", or ">=c").
    #[pyo3(signature = (max_degree, cap = 6))]
    fn profile(&self, max_degree: usize, cap: u32) -> PyResult<Vec<String>> {
        let prof = self.ctx.rfd_profile(max_degree, cap).map_err(value_err)?;
        Ok(prof.entries.iter().map(|e| e.to_string()).collect())
    }

    /// Dimension of the i-th minimal injective resolution term of the
    /// regular module.
    fn injective_term_dim(&self, i: usize) -> PyResult<usize> {
        Ok(self.ctx.injective_term(i).map_err(value_err)?.mdim())
    }

    /// Dimensions of the simple right modules, in session order.
    fn simple_dims(&self) -> Vec<usize> {
        self.ctx.simples().iter().map(|s| s.mdim()).collect()
    }

    /// Verdict of the bound `r.fd I^i <= i + k` for `i < n`:
    /// "holds" | "fails" | "inconclusive".
    #[pyo3(signature = (n, k, cap = None))]
    fn gnk(&self, n: u32, k: u32, cap: Option<u32>) -> PyResult<String> {
        let cap = cap.unwrap_or(n + k + 3);
        Ok(check::is_gnk(&self.ctx, n, k, cap)
            .map_err(value_err)?
            .verdict
            .to_string())
    }

    /// Verdict of the bound `r.fd I^i <= l - 1` for `i < n`.
    #[pyo3(signature = (l, n, cap = None))]
    fn lnop(&self, l: u32, n: u32, cap: Option<u32>) -> PyResult<String> {
        let cap = cap.unwrap_or(l + n + 3);
        Ok(check::is_ln_op(&self.ctx, l, n, cap)
            .map_err(value_err)?
            .verdict
            .to_string())
    }

    /// Definitely-dominant indices up to `max_n`.
    #[pyo3(signature = (max_n, cap = None))]
    fn dominant(&self, max_n: usize, cap: Option<u32>) -> PyResult<Vec<usize>> {
        let cap = cap.unwrap_or(max_n as u32 + 4);
        Ok(check::dominant_numbers(&self.ctx, max_n, cap)
            .map_err(value_err)?
            .dominant())
    }

    /// Per-index comparison of the triangular profile against the shifted
    /// maximum of this algebra's profile; returns the serialized report.
    #[pyo3(signature = (t, max_degree, cap = None))]
    fn verify_thm36(&self, t: usize, max_degree: usize, cap: Option<u32>) -> PyResult<String> {
        let cap = cap.unwrap_or(max_degree as u32 + 4);
        let tri = check::triangular_session(&self.ctx, t);
        let report = check::verify_thm36(&self.ctx, &tri, t, max_degree, cap).map_err(value_err)?;
        Ok(report.serialize())
    }

    #[pyo3(signature = (n, k, t, cap = None))]
    fn verify_thm37(&self, n: u32, k: u32, t: usize, cap: Option<u32>) -> PyResult<String> {
        let cap = cap.unwrap_or(n + k + 3);
        let tri = check::triangular_session(&self.ctx, t);
        let report = check::verify_thm37(&self.ctx, &tri, n, k, t, cap).map_err(value_err)?;
        Ok(report.serialize())
    }

    #[pyo3(signature = (l, n, t, cap = None))]
    fn verify_cor38(&self, l: u32, n: u32, t: usize, cap: Option<u32>) -> PyResult<String> {
        let cap = cap.unwrap_or(l + n + 3);
        let tri = check::triangular_session(&self.ctx, t);
        let report =
            check::verify_cor38(&self.ctx, &tri, l, n, t, n as usize, cap).map_err(value_err)?;
        Ok(report.serialize())
    }

    fn __repr__(&self) -> String {
        format!("Analysis({})", self.ctx.algebra().name())
    }
}

/// Runs the built-in corpus; returns (name, passed, details) tuples.
#[pyfunction]
#[pyo3(signature = (filter = None, jobs = 1, seed = DEFAULT_SEED))]
fn run_corpus(filter: Option<&str>, jobs: usize, seed: u64) -> Vec<(String, bool, Vec<String>)> {
    let entries = auslab::corpus::builtin_entries();
    auslab::corpus::run_corpus(&entries, filter, jobs, seed)
        .into_iter()
        .map(|o| (o.name.clone(), o.passed(), o.failures))
        .collect()
}

#[pymodule]
fn pyauslab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<Analysis>()?;
    m.add_function(wrap_pyfunction!(run_corpus, m)?)?;
    m.add("DEFAULT_SEED", DEFAULT_SEED)?;
    Ok(())
}
