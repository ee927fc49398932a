//! Python bindings: ideal files, monomial ideals, gin and the
//! almost-revlex / Lefschetz checks.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ginarl::algebra::{Monomial, VariableContext};
use ginarl::analysis::{self, ArlCondition};
use ginarl::gin::{self, GinConfig, GinError};
use ginarl::ideal::{IdealError, MonomialIdeal};
use ginarl::io::{self, CliError, ErrorKind, IdealFile, OutputFormat, RunConfig};

fn ideal_err(e: IdealError) -> PyErr {
    match e {
        IdealError::NotArtinian { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn gin_err(e: GinError) -> PyErr {
    match e {
        GinError::Config(_) | GinError::Groebner(_) => PyValueError::new_err(e.to_string()),
        GinError::Ideal(e) => ideal_err(e),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn cli_err(e: CliError) -> PyErr {
    match e.kind {
        ErrorKind::Input => PyValueError::new_err(e.to_string()),
        ErrorKind::Computation => PyRuntimeError::new_err(e.to_string()),
    }
}

/// `(generator, missing monomial)` as exponent vectors.
type GapWitness = (Vec<u32>, Vec<u32>);
/// `(level, alpha, beta)`, `beta` absent for the axis condition.
type ProfileWitness = (usize, Vec<u32>, Option<Vec<u32>>);

fn levels<W>(list: &[analysis::LevelVerdict<W>]) -> Vec<(usize, bool)> {
    list.iter().map(|c| (c.index, c.verdict.holds)).collect()
}

fn exps(ms: &[Monomial]) -> Vec<Vec<u32>> {
    ms.iter().map(|m| m.exps().to_vec()).collect()
}

/// A parsed ideal file.
#[pyclass(name = "Ideal", frozen)]
struct PyIdeal {
    file: IdealFile,
}

#[pymethods]
impl PyIdeal {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        io::parse_ideal_file(text).map(|file| Self { file }).map_err(|e| PyValueError::new_err(e.to_string()))
    }

    #[getter]
    fn variables(&self) -> Vec<String> {
        self.file.context.names().to_vec()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.file.generators.iter().map(|g| g.format(&self.file.context)).collect()
    }

    fn is_monomial(&self) -> bool {
        self.file.is_monomial()
    }

    fn to_text(&self) -> String {
        self.file.to_text()
    }

    /// The monomial ideal spanned by the generators, which must be terms.
    fn monomial_ideal(&self) -> PyResult<PyMonomialIdeal> {
        if !self.file.is_monomial() {
            return Err(PyValueError::new_err("generators are not all single terms"));
        }
        let n = self.file.context.nvars();
        let inner =
            MonomialIdeal::from_generators(n, self.file.generators.iter().filter_map(|g| g.leading_monomial().cloned()));
        Ok(PyMonomialIdeal { inner })
    }

    fn __repr__(&self) -> String {
        format!("Ideal([{}])", self.generators().join(", "))
    }
}

/// A monomial ideal given by exponent vectors, stored by its minimal
/// generators.
#[pyclass(name = "MonomialIdeal", frozen)]
struct PyMonomialIdeal {
    inner: MonomialIdeal,
}

#[pymethods]
impl PyMonomialIdeal {
    #[new]
    fn new(nvars: usize, generators: Vec<Vec<u32>>) -> PyResult<Self> {
        let gens = generators.into_iter().map(Monomial::new).collect();
        MonomialIdeal::try_from_generators(nvars, gens).map(|inner| Self { inner }).map_err(ideal_err)
    }

    #[getter]
    fn nvars(&self) -> usize {
        self.inner.nvars()
    }

    #[getter]
    fn generators(&self) -> Vec<Vec<u32>> {
        exps(self.inner.generators())
    }

    fn contains(&self, exponents: Vec<u32>) -> PyResult<bool> {
        if exponents.len() != self.inner.nvars() {
            return Err(PyValueError::new_err("exponent vector has the wrong length"));
        }
        Ok(self.inner.contains(&Monomial::new(exponents)))
    }

    fn is_artinian(&self) -> bool {
        self.inner.is_artinian()
    }

    fn is_strongly_stable(&self) -> bool {
        self.inner.is_strongly_stable()
    }

    fn hilbert_function(&self) -> PyResult<Vec<u64>> {
        self.inner.hilbert_function().map(|h| h.values().to_vec()).map_err(ideal_err)
    }

    /// The ideal with every variable after the first `i + 1` set to zero.
    fn restrict_to_first(&self, i: usize) -> PyResult<Self> {
        self.inner.restrict_to_first(i).map(|inner| Self { inner }).map_err(ideal_err)
    }

    /// `(holds, witness)`; the witness is `(generator, missing monomial)`.
    fn arl(&self) -> (bool, Option<GapWitness>) {
        let v = analysis::arl_check_direct(&self.inner);
        (v.holds, v.witness.map(|g| (g.generator.exps().to_vec(), g.monomial.exps().to_vec())))
    }

    /// The same question answered from the exponent profile; the witness is
    /// `(level, alpha, beta)` with `beta` absent for the axis condition.
    fn arl_profile(&self) -> PyResult<(bool, Option<ProfileWitness>)> {
        let p = self.inner.f_profile().map_err(ideal_err)?;
        let v = analysis::arl_check_profile(&p);
        Ok((
            v.holds,
            v.witness.map(|w| match w.condition {
                ArlCondition::Axis { alpha } => (w.level, alpha, None),
                ArlCondition::Monotone { alpha, beta } => (w.level, alpha, Some(beta)),
            }),
        ))
    }

    fn slp(&self) -> PyResult<(bool, Option<Vec<u32>>)> {
        let v = analysis::slp_check(&self.inner.f_profile().map_err(ideal_err)?);
        Ok((v.holds, v.witness))
    }

    fn ssp(&self) -> PyResult<(bool, Option<Vec<u32>>)> {
        let v = analysis::ssp_check(&self.inner.f_profile().map_err(ideal_err)?);
        Ok((v.holds, v.witness))
    }

    /// Full report as a dict.
    fn mainthm<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let r = analysis::mainthm_analyze(&self.inner).map_err(ideal_err)?;
        let d = PyDict::new(py);
        d.set_item("arl", r.arl_by_conditions())?;
        d.set_item("arl_direct", r.arl_direct.holds)?;
        d.set_item("arl_profile", r.arl_profile.holds)?;
        d.set_item("slp", r.slp.holds)?;
        d.set_item("ssp", r.ssp.holds)?;
        d.set_item("condition1", levels(&r.condition1))?;
        d.set_item("condition2", levels(&r.condition2))?;
        d.set_item("consistent", r.is_consistent())?;
        Ok(d)
    }

    /// Generators written with the given variable names, or `x, y, z, ...`.
    #[pyo3(signature = (names = None))]
    fn format(&self, names: Option<Vec<String>>) -> PyResult<String> {
        let ctx = match names {
            Some(names) => VariableContext::new(&names),
            None => VariableContext::standard(self.inner.nvars()),
        }
        .map_err(|e| PyValueError::new_err(e.to_string()))?;
        if ctx.nvars() != self.inner.nvars() {
            return Err(PyValueError::new_err("wrong number of variable names"));
        }
        Ok(self.inner.format(&ctx))
    }

    fn __eq__(&self, other: PyRef<'_, PyMonomialIdeal>) -> bool {
        self.inner == other.inner
    }

    fn __repr__(&self) -> String {
        format!("MonomialIdeal({}, {:?})", self.inner.nvars(), self.generators())
    }
}

#[pyclass(name = "GinResult", frozen)]
struct PyGinResult {
    result: gin::GinResult,
    config: GinConfig,
}

#[pymethods]
impl PyGinResult {
    #[getter]
    fn gin(&self) -> PyMonomialIdeal {
        PyMonomialIdeal { inner: self.result.gin.clone() }
    }

    #[getter]
    fn trials_used(&self) -> usize {
        self.result.trials_used
    }

    #[getter]
    fn pairs_reduced(&self) -> usize {
        self.result.pairs_reduced
    }

    #[getter]
    fn certificate<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let c = &self.result.certificate;
        let d = PyDict::new(py);
        d.set_item("strongly_stable", c.strongly_stable)?;
        d.set_item("trials_agreeing", c.trials_agreeing)?;
        d.set_item("coefficient_bound", c.coefficient_bound)?;
        d.set_item("seed", c.seed)?;
        Ok(d)
    }

    fn __repr__(&self) -> String {
        format!("GinResult({:?}, trials_used={})", exps(self.result.gin.generators()), self.result.trials_used)
    }
}

fn config(seed: u64, coeff_bound: u32, max_trials: usize, max_degree: u32) -> GinConfig {
    GinConfig { seed, coeff_bound, max_trials, max_degree }
}

/// gin of the ideal, accepted once two random coordinate changes agree on a
/// strongly stable initial ideal.
#[pyfunction]
#[pyo3(signature = (ideal, seed = 0, coeff_bound = 1000, max_trials = 8, max_degree = 40))]
fn compute_gin(
    ideal: PyRef<'_, PyIdeal>,
    seed: u64,
    coeff_bound: u32,
    max_trials: usize,
    max_degree: u32,
) -> PyResult<PyGinResult> {
    let config = config(seed, coeff_bound, max_trials, max_degree);
    let result = gin::compute_gin(&ideal.file.generators, &config).map_err(gin_err)?;
    Ok(PyGinResult { result, config })
}

/// Checks each degree of a gin against pivot extraction under a fresh
/// coordinate change. Returns the first disagreeing degree, or `None`.
#[pyfunction]
fn oracle_compare(ideal: PyRef<'_, PyIdeal>, result: PyRef<'_, PyGinResult>) -> PyResult<Option<u32>> {
    io::oracle_compare(&ideal.file.generators, &result.result, &result.config)
        .map(|c| c.mismatch.map(|m| m.degree))
        .map_err(cli_err)
}

/// Leading coefficients of `prod (1 - z^d) / (1 - z)^n`, cut before the
/// first non-positive one.
#[pyfunction]
fn froberg_series(n: usize, degrees: Vec<u32>) -> PyResult<Vec<i64>> {
    analysis::froberg_series(n, &degrees)
        .map(|s| s.coeffs().to_vec())
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyfunction]
fn hilbert_after_generic_form(h: Vec<u64>, d: u32) -> Vec<u64> {
    analysis::hilbert_after_generic_form(&ginarl::ideal::HilbertFunction::new(h), d).values().to_vec()
}

/// Runs a command-line subcommand and returns `(output, exit_code)`.
#[pyfunction]
#[pyo3(signature = (command, text = None, seed = 0, coeff_bound = 1000, max_trials = 8, max_degree = 40, json = false, n = None, degrees = None))]
#[allow(clippy::too_many_arguments)]
fn run(
    command: &str,
    text: Option<&str>,
    seed: u64,
    coeff_bound: u32,
    max_trials: usize,
    max_degree: u32,
    json: bool,
    n: Option<usize>,
    degrees: Option<Vec<u32>>,
) -> PyResult<(String, i32)> {
    let cmd = match command {
        "gin" => io::Command::Gin,
        "arl" => io::Command::Arl,
        "slp" => io::Command::Slp,
        "ssp" => io::Command::Ssp,
        "hilbert" => io::Command::Hilbert,
        "mainthm" => io::Command::Mainthm,
        "oracle-compare" => io::Command::OracleCompare,
        "froberg" => io::Command::Froberg {
            nvars: n.ok_or_else(|| PyValueError::new_err("froberg needs n"))?,
            degrees: degrees.unwrap_or_default(),
        },
        other => return Err(PyValueError::new_err(format!("unknown command {other:?}"))),
    };
    let file = text.map(io::parse_ideal_file).transpose().map_err(|e| PyValueError::new_err(e.to_string()))?;
    let format = if json { OutputFormat::Structured } else { OutputFormat::Text };
    let run_config = RunConfig { gin: config(seed, coeff_bound, max_trials, max_degree), output_format: format };
    let outcome = io::run_command(&cmd, file.as_ref(), &run_config).map_err(cli_err)?;
    Ok((outcome.render(format), outcome.exit_code()))
}

#[pymodule]
mod pyginarl {
    #[pymodule_export]
    use super::{
        compute_gin, froberg_series, hilbert_after_generic_form, oracle_compare, run, PyGinResult, PyIdeal,
        PyMonomialIdeal,
    };
}
