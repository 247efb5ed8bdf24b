//! Command-line dispatcher behind the `kpos` binary.
//!
//! Every subcommand produces one report. In JSON mode the report is a single document with the
//! run configuration echoed under `config`; big coefficients are decimal strings and floats are
//! rounded to six decimals, so reruns with the same configuration are byte-identical.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Signed;
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::decomp::{
    caret_decompose, cut_tail, fourth_power_pipeline, layer_decomposition, near_staircase_square, split_with, stairgrid,
    SplitKind,
};
use crate::oracle::{self, OracleError};
use crate::partition::{
    blockwise_distance, blockwise_distance_bfs, generalized_blockwise_distance, parse_partition, partitions, triangular,
    Partition,
};
use crate::prover::certificate::Certificate;
use crate::prover::saxl::{default_cache_dir, Prover};
use crate::prover::{verify_saxl, SaxlOptions, SearchConfig, Verifier};
use crate::samplers::{self, experiment_coverage, sample_report, Measure};

/// Decimal places kept for floating-point values in reports.
pub const FLOAT_DIGITS: i32 = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureArg {
    Uniform,
    Plancherel,
}

impl From<MeasureArg> for Measure {
    fn from(m: MeasureArg) -> Measure {
        match m {
            MeasureArg::Uniform => Measure::Uniform,
            MeasureArg::Plancherel => Measure::Plancherel,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecomposeKind {
    /// Smooth or plain `(k, i)`-layer decomposition of `ϱ_m`.
    Layer,
    /// `k × k` grid of staircases of `ϱ_n`.
    Stairgrid,
    /// The caret identity for `k`.
    Caret,
    /// Uniform grid split of `--nu` with target `ϱ_m`.
    UniformSplit,
    /// Plancherel grid split of `--nu` with target `ϱ_m`.
    PlancherelSplit,
    /// Cut `--nu` into staircases of the comma-separated `--factors` indices with column cap `--k`.
    Tail,
    /// Near staircase-square target for `--nu ⊢ m(m+1)/2`.
    Near,
    /// Irregular-staircase fourth power pipeline for `--nu`.
    FourthPower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExperimentKind {
    /// Split success and prover rescue at `ϱ_m`.
    Coverage,
    /// β-sum-flexibility of Plancherel samples.
    Flexibility,
    /// Scaled singleton-column counts.
    Singletons,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args, Serialize)]
pub struct Common {
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Largest size handed to the character oracle.
    #[arg(long = "oracle-ceiling", global = true, default_value_t = oracle::DEFAULT_CEILING)]
    pub oracle_ceiling: usize,
    /// Node budget of the pair search.
    #[arg(long, global = true, default_value_t = SearchConfig::default().budget)]
    pub budget: usize,
    /// Worker threads; all cores when absent.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Certificate cache directory; defaults to the `KRONPOS_CACHE` environment variable.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
}

/// Partition and numeric parameters; each subcommand reads the ones it needs.
#[derive(Debug, Clone, Default, Args, Serialize)]
pub struct Params {
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mu: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nu: Option<String>,
    /// Partitions separated by `;`, or staircase indices for `decompose tail`.
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factors: Option<String>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub beta: Option<f64>,
    #[arg(long)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
    #[arg(long, value_enum)]
    #[serde(skip_serializing_if = "Option::is_none")]
    pub measure: Option<MeasureArg>,
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Kronecker coefficient `g_{λμ}^ν`, or the multiplicity of `--nu` in the product of `--factors`.
    Kron(Params),
    /// Support of `λ ⊗ μ` (`μ` defaults to `λ`).
    Support(Params),
    /// Certificate for `--nu` in `ϱ_m ⊗ ϱ_m`.
    Prove(Params),
    /// Prove every partition of `m(m+1)/2` in `ϱ_m ⊗ ϱ_m`.
    Saxl(Params),
    /// Verify a certificate file (`-` for standard input).
    VerifyCert {
        file: PathBuf,
    },
    /// Decompositions, splits and the move pipelines.
    Decompose {
        #[arg(value_enum)]
        kind: DecomposeKind,
        #[command(flatten)]
        params: Params,
    },
    /// Draw seeded samples and report their statistics.
    Sample(Params),
    /// Batch experiments over seeded samples.
    Experiment {
        #[arg(value_enum)]
        kind: ExperimentKind,
        #[command(flatten)]
        params: Params,
    },
    /// Blockwise distance between `--lambda` and `--mu`.
    Distance(Params),
    /// Shapes of size `--n` whose tensor square contains every irreducible.
    Exceptions(Params),
}

#[derive(Debug, Clone, Parser, Serialize)]
#[command(name = "kpos", version, about = "Kronecker coefficient positivity workbench")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(String),
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<crate::partition::PartitionError> for CliError {
    fn from(e: crate::partition::PartitionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<crate::decomp::DecompError> for CliError {
    fn from(e: crate::decomp::DecompError) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// A computed report: the JSON body and a short text rendering.
struct Report {
    body: Value,
    text: String,
}

fn report<T: Serialize>(value: &T, text: String) -> Report {
    Report { body: serde_json::to_value(value).expect("reports serialize"), text }
}

/// Parses `argv` (without the program name) and runs the subcommand.
pub fn dispatch<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = std::iter::once(std::ffi::OsString::from("kpos")).chain(argv.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    run(&cli)
}

/// Runs an already parsed command line.
pub fn run(cli: &Cli) -> Outcome {
    let result = match cli.common.threads {
        Some(t) if t > 0 => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| execute(cli)),
            Err(e) => Err(CliError::Io(e.to_string())),
        },
        Some(_) => Err(CliError::Usage("--threads must be positive".into())),
        None => execute(cli),
    };
    match result {
        Ok(r) => Outcome { code: 0, stdout: render(cli, r), stderr: String::new() },
        Err(e) => {
            let code = match e {
                CliError::Usage(_) => 2,
                CliError::Io(_) => 1,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

fn render(cli: &Cli, r: Report) -> String {
    match cli.common.format {
        Format::Text => {
            let mut s = format!("seed {}\n{}", cli.common.seed, r.text);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            s
        }
        Format::Json => {
            let mut doc = match round_floats(r.body) {
                Value::Object(m) => m,
                other => {
                    let mut m = Map::new();
                    m.insert("result".into(), other);
                    m
                }
            };
            doc.insert("config".into(), round_floats(config_echo(cli)));
            doc.insert("seed".into(), json!(cli.common.seed));
            let mut s = serde_json::to_string_pretty(&Value::Object(doc)).expect("json");
            s.push('\n');
            s
        }
    }
}

fn config_echo(cli: &Cli) -> Value {
    let mut v = serde_json::to_value(cli).expect("config serializes");
    if let Some(common) = v.get_mut("common").and_then(Value::as_object_mut) {
        // thread count does not affect results
        common.remove("threads");
    }
    v
}

/// Rounds every float to `FLOAT_DIGITS` decimals.
pub fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().unwrap_or(0.0);
            let scale = 10f64.powi(FLOAT_DIGITS);
            let r = (x * scale).round() / scale;
            serde_json::Number::from_f64(if r == 0.0 { 0.0 } else { r }).map_or(Value::Null, Value::Number)
        }
        Value::Array(a) => Value::Array(a.into_iter().map(round_floats).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, round_floats(v))).collect()),
        other => other,
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
}

fn partition_arg(v: &Option<String>, flag: &str) -> Result<Partition, CliError> {
    let text = v.as_deref().ok_or_else(|| CliError::Usage(format!("missing --{flag}")))?;
    parse_partition(text).map_err(|e| CliError::Usage(format!("--{flag}: {e}")))
}

fn factor_list(v: &Option<String>) -> Result<Vec<Partition>, CliError> {
    let text = v.as_deref().ok_or_else(|| CliError::Usage("missing --factors".into()))?;
    text.split(';')
        .map(|t| parse_partition(t).map_err(|e| CliError::Usage(format!("--factors: {e}"))))
        .collect()
}

fn config(common: &Common) -> SearchConfig {
    SearchConfig { ceiling: common.oracle_ceiling, budget: common.budget, ..SearchConfig::default() }
}

fn prover(common: &Common) -> Option<Prover> {
    let c = config(common);
    (c != SearchConfig::default()).then(|| Prover::new(c))
}

fn cache_dir(common: &Common) -> Option<PathBuf> {
    common.cache.clone().or_else(default_cache_dir)
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    let common = &cli.common;
    match &cli.command {
        Command::Kron(p) => kron(p, common),
        Command::Support(p) => support(p, common),
        Command::Prove(p) => prove(p, common),
        Command::Saxl(p) => saxl(p, common),
        Command::VerifyCert { file } => verify_cert(file, common),
        Command::Decompose { kind, params } => decompose(*kind, params),
        Command::Sample(p) => sample(p, common),
        Command::Experiment { kind, params } => experiment(*kind, params, common),
        Command::Distance(p) => distance(p),
        Command::Exceptions(p) => exceptions(p, common),
    }
}

fn kron(p: &Params, common: &Common) -> Result<Report, CliError> {
    let nu = partition_arg(&p.nu, "nu")?;
    let factors = if p.factors.is_some() {
        factor_list(&p.factors)?
    } else {
        vec![partition_arg(&p.lambda, "lambda")?, partition_arg(&p.mu, "mu")?]
    };
    let r = oracle::multi_kronecker(&nu, &factors, common.oracle_ceiling)?;
    let text = format!("coefficient {}", r.coefficient);
    Ok(report(&r, text))
}

fn support(p: &Params, common: &Common) -> Result<Report, CliError> {
    let lambda = partition_arg(&p.lambda, "lambda")?;
    let mu = if p.mu.is_some() { partition_arg(&p.mu, "mu")? } else { lambda.clone() };
    let n = lambda.size();
    if mu.size() != n {
        return Err(CliError::Usage(format!("size mismatch: {} vs {}", n, mu.size())));
    }
    if n > common.oracle_ceiling {
        return Err(OracleError::AboveCeiling { n, ceiling: common.oracle_ceiling }.into());
    }
    let table = oracle::table(n);
    let mut support = Vec::new();
    let mut total = 0;
    for nu in partitions(n) {
        total += 1;
        if table.class_sum(&[&nu, &lambda, &mu]).is_positive() {
            support.push(nu);
        }
    }
    let missing: Vec<Partition> = partitions(n).filter(|nu| !support.contains(nu)).collect();
    let body = json!({
        "lambda": lambda,
        "mu": mu,
        "support": support,
        "missing": missing,
        "covers_all": missing.is_empty(),
        "total": total,
    });
    let text = format!(
        "{} of {} partitions in the support\nmissing: {}",
        support.len(),
        total,
        missing.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join(" ")
    );
    Ok(Report { body, text })
}

fn prove(p: &Params, common: &Common) -> Result<Report, CliError> {
    let nu = partition_arg(&p.nu, "nu")?;
    let m = match p.m {
        Some(m) => m,
        None => crate::partition::staircase_index(nu.size())
            .ok_or_else(|| CliError::Usage("--nu has no staircase size; pass --m".into()))?,
    };
    if nu.size() != triangular(m) {
        return Err(CliError::Usage(format!("|nu| = {} but m(m+1)/2 = {}", nu.size(), triangular(m))));
    }
    let own = prover(common);
    let prover = own.as_ref().unwrap_or_else(|| Prover::shared());
    let cert = prover.prove_in_staircase_square(m, &nu)?;
    let text = match &cert {
        Some(c) => format!("proved ({nu}) in the square of the staircase of length {m}: {} nodes, depth {}", c.node_count(), c.depth()),
        None => format!("proof not found for ({nu})"),
    };
    let body = json!({
        "m": m,
        "nu": nu,
        "proved": cert.is_some(),
        "certificate": cert,
    });
    Ok(Report { body, text })
}

fn saxl(p: &Params, common: &Common) -> Result<Report, CliError> {
    let m = need(p.m, "m")?;
    let opts = SaxlOptions { config: config(common), threads: common.threads, cache: cache_dir(common), progress: true };
    let r = verify_saxl(m, &opts);
    let mut text = format!("m={m} n={}: {} of {} proved ({} from cache)", r.n, r.proved, r.total, r.from_cache);
    for (k, v) in &r.leaf_kinds {
        text.push_str(&format!("\n  {k}: {v} leaves"));
    }
    for f in &r.failed {
        text.push_str(&format!("\n  unproved ({f})"));
    }
    let body = json!({
        "m": r.m,
        "n": r.n,
        "total": r.total,
        "proved": r.proved,
        "all_proved": r.all_proved(),
        "failed": r.failed,
        "leaf_kinds": r.leaf_kinds,
        "symmetric_cube_targets": r.targets.iter().filter(|t| t.symmetric_cube_leaves > 0).map(|t| &t.nu).collect::<Vec<_>>(),
    });
    Ok(Report { body, text })
}

fn verify_cert(file: &PathBuf, common: &Common) -> Result<Report, CliError> {
    let text = if file.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Io(e.to_string()))?
    } else {
        std::fs::read_to_string(file).map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?
    };
    let value: Value = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("not JSON: {e}")))?;
    // accept a bare certificate or any report carrying one
    let inner = value.get("certificate").filter(|v| !v.is_null()).cloned().unwrap_or(value);
    let cert: Certificate = serde_json::from_value(inner).map_err(|e| CliError::Usage(format!("not a certificate: {e}")))?;
    let verdict = Verifier::new(common.oracle_ceiling).verify(&Arc::new(cert.clone()));
    let summary = if verdict.ok {
        format!("valid: {} nodes, goal {:?}", verdict.nodes, cert.goal)
    } else {
        format!("invalid: {:?}", verdict.failure)
    };
    let body = json!({ "goal": cert.goal, "verdict": verdict });
    Ok(Report { body, text: summary })
}

fn decompose(kind: DecomposeKind, p: &Params) -> Result<Report, CliError> {
    match kind {
        DecomposeKind::Layer => {
            let m = need(p.m, "m")?;
            let k = need(p.k, "k")?;
            let i = need(p.i, "i")?;
            let d = layer_decomposition(m, k, i, true).or_else(|_| layer_decomposition(m, k, i, false))?;
            let text = format!("core {} flakes {:?} spread {}", d.layers.last().map_or(m, |l| l.inner), d.flakes, d.flake_spread());
            Ok(report(&d, text))
        }
        DecomposeKind::Stairgrid => {
            let n = need(p.n.or(p.m), "n")?;
            let k = need(p.k, "k")?;
            let d = stairgrid(n, k);
            let text = format!("cells {:?}", d.flakes);
            Ok(report(&d, text))
        }
        DecomposeKind::Caret => {
            let k = need(p.k, "k")?;
            let d = caret_decompose(k);
            let text = format!("{} staircases, replay size {}", d.recipe.leaves().len(), d.replay().size());
            Ok(report(&d, text))
        }
        DecomposeKind::UniformSplit | DecomposeKind::PlancherelSplit => {
            let nu = partition_arg(&p.nu, "nu")?;
            let m = match p.m {
                Some(m) => m,
                None => crate::partition::staircase_index(nu.size()).ok_or_else(|| CliError::Usage("pass --m".into()))?,
            };
            let split = if kind == DecomposeKind::UniformSplit { SplitKind::Uniform } else { SplitKind::Plancherel };
            let r = split_with(split, &nu, m, p.k)?;
            let text = match &r.diagnostic {
                None => format!("success: parts {:?}", r.parts),
                Some(d) => format!("failure: {d}"),
            };
            Ok(report(&r, text))
        }
        DecomposeKind::Tail => {
            let nu = partition_arg(&p.nu, "nu")?;
            let text = p.factors.as_deref().ok_or_else(|| CliError::Usage("missing --factors".into()))?;
            let targets: Vec<usize> = text
                .split(',')
                .map(|t| t.trim().parse().map_err(|_| CliError::Usage(format!("--factors: bad index `{t}`"))))
                .collect::<Result<_, _>>()?;
            let c = p.k.unwrap_or_else(|| nu.len().max(1));
            let r = cut_tail(&nu, &targets, c, true).map_err(|e| CliError::Usage(e.to_string()))?;
            let text = format!("output ({}) with {} moves, bound {}", r.output, r.realized_moves, r.bound);
            Ok(report(&r, text))
        }
        DecomposeKind::Near => {
            let nu = partition_arg(&p.nu, "nu")?;
            let m = match p.m {
                Some(m) => m,
                None => crate::partition::staircase_index(nu.size()).ok_or_else(|| CliError::Usage("pass --m".into()))?,
            };
            let r = near_staircase_square(&nu, m)?;
            let text = format!("target ({}) at distance {}, {} moves made", r.target, r.trace.len(), r.realized);
            Ok(report(&r, text))
        }
        DecomposeKind::FourthPower => {
            let nu = partition_arg(&p.nu, "nu")?;
            let r = fourth_power_pipeline(&nu);
            let text = format!("target ({}) at distance {} (ratio {:.6})", r.target, r.distance, r.ratio);
            Ok(report(&r, text))
        }
    }
}

fn measure(p: &Params) -> Measure {
    p.measure.map_or(Measure::Uniform, Measure::from)
}

fn sample(p: &Params, common: &Common) -> Result<Report, CliError> {
    let n = need(p.n, "n")?;
    let samples = p.samples.unwrap_or(1);
    let beta = p.beta.unwrap_or(1.0);
    if !(beta.is_finite() && beta > 0.0) {
        return Err(CliError::Usage("--beta must be positive".into()));
    }
    let r = sample_report(measure(p), n, samples, common.seed, beta);
    let mut body = serde_json::to_value(&r).expect("reports serialize");
    if let Value::Object(o) = &mut body {
        o.remove("singleton_counts");
        if n <= 200 && samples <= 1000 {
            o.insert("partitions".into(), json!(samplers::draw(measure(p), n, samples, common.seed)));
        }
    }
    let text = format!(
        "{} samples of size {n}: mean length {:.6}, mean height {:.6}, median limit distance {:.6}",
        samples, r.mean_length, r.mean_height, r.median_distance
    );
    Ok(Report { body, text })
}

fn experiment(kind: ExperimentKind, p: &Params, common: &Common) -> Result<Report, CliError> {
    let samples = p.samples.unwrap_or(200);
    match kind {
        ExperimentKind::Coverage => {
            let m = need(p.m, "m")?;
            let limit = p.k.unwrap_or(crate::decomp::tail::BASE_LENGTH);
            let r = experiment_coverage(m, measure(p), samples, common.seed, limit);
            let text = format!(
                "m={m}: split {}/{} ({:.6}), proved {} ({:.6}), skipped {}",
                r.split_successes, samples, r.split_rate, r.proved, r.proved_rate, r.skipped
            );
            Ok(report(&r, text))
        }
        ExperimentKind::Flexibility => {
            let n = need(p.n, "n")?;
            let beta = p.beta.unwrap_or(1.0);
            let r = samplers::experiment_flexibility(n, beta, samples, common.seed);
            let text = format!("P({n}, {beta}) ≈ {:.6}, interval {:.6}..{:.6}", r.flexible_rate, r.flexible_interval.0, r.flexible_interval.1);
            let mut body = serde_json::to_value(&r).expect("reports serialize");
            if let Value::Object(o) = &mut body {
                o.remove("singleton_counts");
            }
            Ok(Report { body, text })
        }
        ExperimentKind::Singletons => {
            let n = need(p.n, "n")?;
            let r = samplers::singleton_column_stats(n, samples, common.seed, measure(p));
            let text = format!("median scaled singleton count {:.6}", r.median_scaled_singletons);
            Ok(report(&r, text))
        }
    }
}

fn distance(p: &Params) -> Result<Report, CliError> {
    let a = partition_arg(&p.lambda, "lambda")?;
    let b = partition_arg(&p.mu, "mu")?;
    if a.size() == b.size() {
        let d = blockwise_distance(&a, &b)?;
        let trace = crate::partition::blockwise_trace(&a, &b)?;
        let bfs = (a.size() <= 12).then(|| blockwise_distance_bfs(&a, &b)).transpose()?;
        let body = json!({ "lambda": a, "mu": b, "distance": d, "exact": true, "bfs": bfs, "trace": trace });
        Ok(Report { body, text: format!("distance {d}") })
    } else {
        let g = generalized_blockwise_distance(&a, &b);
        let text = format!("generalized distance {}{}", g.value, if g.exact { "" } else { " (upper bound)" });
        let body = json!({ "lambda": a, "mu": b, "distance": g.value, "exact": g.exact, "trace": g.trace });
        Ok(Report { body, text })
    }
}

fn exceptions(p: &Params, common: &Common) -> Result<Report, CliError> {
    let n = need(p.n, "n")?;
    let r = oracle::saxl_exception_scan(n, common.oracle_ceiling)?;
    let text = if r.any() {
        format!(
            "{} of {} shapes cover P_{n}: {}",
            r.covering.len(),
            r.checked,
            r.covering.iter().map(|p| format!("({p})")).collect::<Vec<_>>().join(" ")
        )
    } else {
        format!("no λ covers P_{n}")
    };
    let mut body = serde_json::to_value(&r).expect("reports serialize");
    if let Value::Object(o) = &mut body {
        o.insert("exception".into(), json!(!r.any()));
    }
    Ok(Report { body, text })
}
