//! Subcommand dispatch and report rendering.
//!
//! Every run produces one structured document with the fields `command`,
//! `inputs`, `result`, `witnesses`, `certificate` and `timing`. `timing`
//! holds deterministic effort counters rather than wall-clock time, so
//! identical invocations give byte-identical documents.

use serde::Serialize;
use serde_json::{json, Value};

use super::parse::IdealFile;
use super::{CliError, ErrorKind};
use crate::algebra::{Monomial, Polynomial, VariableContext};
use crate::analysis::{
    arl_check_direct, arl_check_profile, froberg_series, mainthm_analyze, slp_check, ssp_check, ArlCondition,
    ArlViolation, RevlexGap, Verdict,
};
use crate::gin::{compute_gin, gin_degree_slice_oracle, random_change, trial_rng, GinConfig, GinError, GinResult};
use crate::ideal::{IdealError, MonomialIdeal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Gin,
    Arl,
    Slp,
    Ssp,
    Hilbert,
    Froberg { nvars: usize, degrees: Vec<u32> },
    Mainthm,
    OracleCompare,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Gin => "gin",
            Command::Arl => "arl",
            Command::Slp => "slp",
            Command::Ssp => "ssp",
            Command::Hilbert => "hilbert",
            Command::Froberg { .. } => "froberg",
            Command::Mainthm => "mainthm",
            Command::OracleCompare => "oracle-compare",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Structured,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub gin: GinConfig,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { gin: GinConfig::default(), output_format: OutputFormat::Text }
    }
}

/// Whether a run answered a yes/no question, and how.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Done,
    Holds,
    Fails,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub status: Status,
    pub text: String,
    pub document: Value,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Done | Status::Holds => 0,
            Status::Fails => 1,
        }
    }

    /// Text or pretty-printed document, per the output format.
    pub fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Text => self.text.clone(),
            OutputFormat::Structured => serde_json::to_string_pretty(&self.document).expect("plain values"),
        }
    }
}

fn gin_error(e: GinError) -> CliError {
    let kind = match &e {
        GinError::Config(_) => ErrorKind::Input,
        GinError::Groebner(_) => ErrorKind::Input,
        GinError::Ideal(IdealError::NotArtinian { .. }) => ErrorKind::Computation,
        GinError::Ideal(_) => ErrorKind::Input,
        _ => ErrorKind::Computation,
    };
    CliError::new(kind, "gin", e.to_string())
}

fn ideal_error(e: IdealError) -> CliError {
    let kind = match e {
        IdealError::NotArtinian { .. } => ErrorKind::Computation,
        _ => ErrorKind::Input,
    };
    CliError::new(kind, "ideal", e.to_string())
}

/// The ideal that gets analyzed: the input itself when it is a strongly
/// stable monomial ideal, its gin otherwise.
struct Subject {
    ideal: MonomialIdeal,
    gin: Option<GinResult>,
}

impl Subject {
    fn resolve(file: &IdealFile, config: &GinConfig) -> Result<Subject, CliError> {
        let n = file.context.nvars();
        if file.is_monomial() {
            let ideal = MonomialIdeal::from_generators(
                n,
                file.generators.iter().filter_map(|g| g.leading_monomial().cloned()),
            );
            if !ideal.is_zero() && ideal.is_strongly_stable() {
                return Ok(Subject { ideal, gin: None });
            }
        }
        let r = compute_gin(&file.generators, config).map_err(gin_error)?;
        Ok(Subject { ideal: r.gin.clone(), gin: Some(r) })
    }

    fn analyzed(&self) -> &'static str {
        if self.gin.is_some() {
            "gin"
        } else {
            "input"
        }
    }

    fn note(&self) -> Option<&'static str> {
        self.gin.as_ref().map(|_| "input is not a strongly stable monomial ideal; analyzed its gin")
    }

    fn certificate(&self) -> Value {
        self.gin.as_ref().map_or(Value::Null, |r| json!(r.certificate))
    }

    fn timing(&self) -> Value {
        match &self.gin {
            Some(r) => json!({ "trials_used": r.trials_used, "pairs_reduced": r.pairs_reduced }),
            None => json!({ "trials_used": 0, "pairs_reduced": 0 }),
        }
    }
}

fn tuple(a: &[u32]) -> String {
    format!("({})", a.iter().map(u32::to_string).collect::<Vec<_>>().join(", "))
}

fn gap_json(ctx: &VariableContext, g: &RevlexGap) -> Value {
    json!({ "generator": g.generator.format(ctx), "monomial": g.monomial.format(ctx) })
}

fn gap_text(ctx: &VariableContext, g: &RevlexGap) -> String {
    format!("witness generator {}, monomial {}", g.generator.format(ctx), g.monomial.format(ctx))
}

fn condition_json(c: &ArlCondition) -> Value {
    match c {
        ArlCondition::Axis { alpha } => json!({ "condition": 1, "alpha": alpha }),
        ArlCondition::Monotone { alpha, beta } => json!({ "condition": 2, "alpha": alpha, "beta": beta }),
    }
}

fn condition_text(c: &ArlCondition) -> String {
    match c {
        ArlCondition::Axis { alpha } => format!("condition (1) at alpha {}", tuple(alpha)),
        ArlCondition::Monotone { alpha, beta } => {
            format!("condition (2) at alpha {}, beta {}", tuple(alpha), tuple(beta))
        }
    }
}

fn violation_json(v: &ArlViolation) -> Value {
    let mut out = condition_json(&v.condition);
    out["level"] = json!(v.level);
    out
}

fn violation_text(v: &ArlViolation) -> String {
    format!("level {}, {}", v.level, condition_text(&v.condition))
}

fn verdict_line<W>(v: &Verdict<W>, describe: impl Fn(&W) -> String) -> String {
    match &v.witness {
        None => v.holds.to_string(),
        Some(w) => format!("{}; {}", v.holds, describe(w)),
    }
}

fn status_of(holds: bool) -> Status {
    if holds {
        Status::Holds
    } else {
        Status::Fails
    }
}

fn formatted(ctx: &VariableContext, ms: &[Monomial]) -> Vec<String> {
    ms.iter().map(|m| m.format(ctx)).collect()
}

fn inputs_json(file: Option<&IdealFile>, config: &RunConfig, extra: Value) -> Value {
    let mut inputs = json!({ "config": config.gin });
    if let Some(f) = file {
        inputs["ring"] = json!(f.context.names());
        inputs["generators"] = json!(f.generators.iter().map(|g| g.format(&f.context)).collect::<Vec<_>>());
        inputs["metadata"] = json!(f.metadata);
    }
    if let Value::Object(map) = extra {
        for (k, v) in map {
            inputs[k] = v;
        }
    }
    inputs
}

fn document(command: &str, inputs: Value, result: Value, witnesses: Value, certificate: Value, timing: Value) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "witnesses": witnesses,
        "certificate": certificate,
        "timing": timing,
    })
}

fn with_note(subject: &Subject, text: String) -> String {
    match subject.note() {
        Some(n) => format!("{text}\nnote: {n}"),
        None => text,
    }
}

/// Runs one subcommand. Every command except `froberg` needs a file.
pub fn run_command(cmd: &Command, file: Option<&IdealFile>, config: &RunConfig) -> Result<Outcome, CliError> {
    config.gin.validate().map_err(gin_error)?;
    if let Command::Froberg { nvars, degrees } = cmd {
        let series = froberg_series(*nvars, degrees)
            .map_err(|e| CliError::new(ErrorKind::Input, "analysis", e.to_string()))?;
        let text = series.coeffs().iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
        let doc = document(
            cmd.name(),
            inputs_json(None, config, json!({ "n": nvars, "degrees": degrees })),
            json!({ "series": series.coeffs() }),
            Value::Null,
            Value::Null,
            json!({ "trials_used": 0, "pairs_reduced": 0 }),
        );
        return Ok(Outcome { status: Status::Done, text, document: doc });
    }
    let file = file.ok_or_else(|| CliError::new(ErrorKind::Input, "io", format!("{} needs an ideal file", cmd.name())))?;
    let ctx = &file.context;
    let inputs = inputs_json(Some(file), config, Value::Null);

    match cmd {
        Command::Gin => {
            let r = compute_gin(&file.generators, &config.gin).map_err(gin_error)?;
            let hf = r.gin.hilbert_function().map_err(ideal_error)?;
            let c = &r.certificate;
            let text = format!(
                "{}\ncertificate: strongly_stable={}, trials_agreeing={}, coefficient_bound={}, seed={}, trials_used={}",
                r.gin.format(ctx),
                c.strongly_stable,
                c.trials_agreeing,
                c.coefficient_bound,
                c.seed,
                r.trials_used
            );
            let doc = document(
                cmd.name(),
                inputs,
                json!({ "generators": formatted(ctx, r.gin.generators()), "hilbert_function": hf.values() }),
                Value::Null,
                json!(c),
                json!({ "trials_used": r.trials_used, "pairs_reduced": r.pairs_reduced }),
            );
            Ok(Outcome { status: Status::Done, text, document: doc })
        }
        Command::Hilbert => {
            let subject = Subject::resolve(file, &config.gin)?;
            let hf = subject.ideal.hilbert_function().map_err(ideal_error)?;
            let text = with_note(&subject, hf.values().iter().map(u64::to_string).collect::<Vec<_>>().join(", "));
            let doc = document(
                cmd.name(),
                inputs,
                json!({ "analyzed": subject.analyzed(), "values": hf.values(), "socle_degree": hf.socle_degree() }),
                Value::Null,
                subject.certificate(),
                subject.timing(),
            );
            Ok(Outcome { status: Status::Done, text, document: doc })
        }
        Command::Arl => {
            let subject = Subject::resolve(file, &config.gin)?;
            let direct = arl_check_direct(&subject.ideal);
            let profile = subject.ideal.f_profile().map_err(ideal_error)?;
            let by_profile = arl_check_profile(&profile);
            let mut text = verdict_line(&direct, |g| gap_text(ctx, g));
            if let Some(v) = &by_profile.witness {
                text.push_str(&format!("\nprofile: {}", violation_text(v)));
            }
            let doc = document(
                cmd.name(),
                inputs,
                json!({ "analyzed": subject.analyzed(), "arl": direct.holds, "arl_profile": by_profile.holds }),
                json!({
                    "arl_direct": direct.witness.as_ref().map(|g| gap_json(ctx, g)),
                    "arl_profile": by_profile.witness.as_ref().map(violation_json),
                }),
                subject.certificate(),
                subject.timing(),
            );
            Ok(Outcome { status: status_of(direct.holds), text: with_note(&subject, text), document: doc })
        }
        Command::Slp | Command::Ssp => {
            let subject = Subject::resolve(file, &config.gin)?;
            let profile = subject.ideal.f_profile().map_err(ideal_error)?;
            let v = if *cmd == Command::Slp { slp_check(&profile) } else { ssp_check(&profile) };
            let text = verdict_line(&v, |a| format!("witness alpha {}", tuple(a)));
            let doc = document(
                cmd.name(),
                inputs,
                json!({ "analyzed": subject.analyzed(), "holds": v.holds }),
                json!({ "alpha": v.witness }),
                subject.certificate(),
                subject.timing(),
            );
            Ok(Outcome { status: status_of(v.holds), text: with_note(&subject, text), document: doc })
        }
        Command::Mainthm => {
            let subject = Subject::resolve(file, &config.gin)?;
            let r = mainthm_analyze(&subject.ideal).map_err(ideal_error)?;
            let arl = r.arl_by_conditions();
            let mut lines = vec![format!("arl: {arl}")];
            for c in &r.condition1 {
                lines.push(format!(
                    "condition (1), i={}: {}",
                    c.index,
                    verdict_line(&c.verdict, |a| format!("slp fails at alpha {}", tuple(a)))
                ));
            }
            for c in &r.condition2 {
                lines.push(format!("condition (2), i={}: {}", c.index, verdict_line(&c.verdict, condition_text)));
            }
            lines.push(format!("arl direct: {}", verdict_line(&r.arl_direct, |g| gap_text(ctx, g))));
            lines.push(format!("arl profile: {}", verdict_line(&r.arl_profile, violation_text)));
            lines.push(format!("slp: {}", r.slp.holds));
            lines.push(format!("ssp: {}", r.ssp.holds));
            lines.push(format!("consistent: {}", r.is_consistent()));
            let doc = document(
                cmd.name(),
                inputs,
                json!({
                    "analyzed": subject.analyzed(),
                    "arl": arl,
                    "arl_direct": r.arl_direct.holds,
                    "arl_profile": r.arl_profile.holds,
                    "slp": r.slp.holds,
                    "ssp": r.ssp.holds,
                    "condition1": r.condition1.iter().map(|c| json!({ "i": c.index, "holds": c.verdict.holds })).collect::<Vec<_>>(),
                    "condition2": r.condition2.iter().map(|c| json!({ "i": c.index, "holds": c.verdict.holds })).collect::<Vec<_>>(),
                    "consistent": r.is_consistent(),
                }),
                json!({
                    "arl_direct": r.arl_direct.witness.as_ref().map(|g| gap_json(ctx, g)),
                    "arl_profile": r.arl_profile.witness.as_ref().map(violation_json),
                    "slp": r.slp.witness,
                    "ssp": r.ssp.witness,
                    "condition1": r.condition1.iter().filter_map(|c| c.verdict.witness.as_ref().map(|a| json!({ "i": c.index, "alpha": a }))).collect::<Vec<_>>(),
                    "condition2": r.condition2.iter().filter_map(|c| c.verdict.witness.as_ref().map(|w| { let mut v = condition_json(w); v["i"] = json!(c.index); v })).collect::<Vec<_>>(),
                }),
                subject.certificate(),
                subject.timing(),
            );
            Ok(Outcome { status: status_of(arl), text: with_note(&subject, lines.join("\n")), document: doc })
        }
        Command::OracleCompare => {
            let r = compute_gin(&file.generators, &config.gin).map_err(gin_error)?;
            let cmp = oracle_compare(&file.generators, &r, &config.gin)?;
            let text = match &cmp.mismatch {
                None => format!("agree (degrees 0..={})", cmp.last_degree),
                Some(m) => format!(
                    "mismatch in degree {}: gin [{}], pivots [{}]",
                    m.degree,
                    formatted(ctx, &m.gin).join(", "),
                    formatted(ctx, &m.pivots).join(", ")
                ),
            };
            let doc = document(
                cmd.name(),
                inputs,
                json!({
                    "agree": cmp.mismatch.is_none(),
                    "last_degree": cmp.last_degree,
                    "first_mismatch": cmp.mismatch.as_ref().map(|m| json!({
                        "degree": m.degree,
                        "gin": formatted(ctx, &m.gin),
                        "pivots": formatted(ctx, &m.pivots),
                    })),
                }),
                Value::Null,
                json!(r.certificate),
                json!({ "trials_used": r.trials_used, "pairs_reduced": r.pairs_reduced }),
            );
            Ok(Outcome { status: status_of(cmp.mismatch.is_none()), text, document: doc })
        }
        Command::Froberg { .. } => unreachable!("handled above"),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceMismatch {
    pub degree: u32,
    pub gin: Vec<Monomial>,
    pub pivots: Vec<Monomial>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleComparison {
    pub last_degree: u32,
    pub mismatch: Option<SliceMismatch>,
}

/// Compares each degree of an accepted gin, through socle degree + 1, with
/// pivot extraction under a fresh coordinate change drawn from a stream no
/// gin trial uses.
pub fn oracle_compare(gens: &[Polynomial], r: &GinResult, config: &GinConfig) -> Result<OracleComparison, CliError> {
    let n = r.gin.nvars();
    let hf = r.gin.hilbert_function().map_err(ideal_error)?;
    let last_degree = hf.socle_degree().map_or(0, |t| t + 1);
    let g = random_change(&mut trial_rng(config.seed, usize::MAX), n, config.coeff_bound).map_err(gin_error)?;
    for d in 0..=last_degree {
        let pivots = gin_degree_slice_oracle(gens, &g, d).map_err(gin_error)?;
        let gin = r.gin.monomials_in_degree(d);
        if pivots != gin {
            return Ok(OracleComparison { last_degree, mismatch: Some(SliceMismatch { degree: d, gin, pivots }) });
        }
    }
    Ok(OracleComparison { last_degree, mismatch: None })
}
