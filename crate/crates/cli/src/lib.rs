//! Command-line front end for `nakayama-core`.
//!
//! Every command writes its result to the given writer and returns the
//! process exit code; errors propagate and `main` maps them to exit code 2.

pub mod reproduce;

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nakayama_core::classifier::{
    classify, verify_gp_socle_sub, verify_gpd_bound, verify_gpd_inequalities, verify_precluster, verify_prinj_socle,
    verify_simple_count, VerdictRecord, VerdictStatus,
};
use nakayama_core::crosscheck;
use nakayama_core::notation::{parse_kupisch, parse_module};
use nakayama_core::oracle::{Oracle, DEFAULT_PRIME};
use nakayama_core::precluster::DEFAULT_SEARCH_CAP;
use nakayama_core::sweep::{self, Shapes, SweepSpec};
use nakayama_core::{KupischSeries, ModuleSum, Shape};

#[derive(Debug, Parser)]
#[command(name = "nakayama", version, about = "Homological invariants of Nakayama algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one algebra and print its JSON report.
    Analyze {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Answer a query about a module.
    Module {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// e.g. "M(1,2) + S(3)", "P(2)", "I(1)"
        #[arg(long)]
        expr: String,
        /// pd | id | gpd | socle | top | envelope | cover | in-sub-lambda | ext:k:target
        #[arg(long)]
        query: String,
    },
    /// Run one verifier. Exit 0 on pass, 1 on fail, 2 if the hypotheses do not hold.
    Verify {
        #[command(flatten)]
        alg: AlgebraArgs,
        /// prinj | gp-socle-sub | thm31-count | gpd-bound | lemma22 | precluster[:n]
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Classify every algebra within the bounds, appending JSONL records.
    Sweep(SweepArgs),
    /// Recompute the two worked examples and compare with the published values.
    Reproduce {
        /// Test fixture: read Kupisch series in the opposite arrow direction.
        #[arg(long, hide = true)]
        flip_convention: bool,
    },
    /// Query the matrix oracle, or compare it with the formulas on every pair.
    Oracle {
        #[command(flatten)]
        alg: AlgebraArgs,
        #[arg(long, default_value_t = DEFAULT_PRIME)]
        field_p: u32,
        /// An indecomposable; omit to run the full comparison.
        #[arg(long, requires = "query")]
        expr: Option<String>,
        /// hom:target | ext1:target | injective | tau
        #[arg(long, requires = "expr")]
        query: Option<String>,
    },
}

#[derive(Debug, Args)]
pub struct AlgebraArgs {
    /// Loewy lengths of the indecomposable projectives, e.g. 3,3,4
    #[arg(long)]
    pub kupisch: String,
    /// Cyclic quiver (default: linear)
    #[arg(long)]
    pub cyclic: bool,
}

impl AlgebraArgs {
    pub fn algebra(&self) -> Result<KupischSeries> {
        let shape = if self.cyclic { Shape::Cyclic } else { Shape::Linear };
        Ok(KupischSeries::new(parse_kupisch(&self.kupisch)?, shape)?)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ShapeArg {
    Linear,
    Cyclic,
    Both,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub max_vertices: usize,
    #[arg(long)]
    pub max_length: usize,
    #[arg(long, value_enum, default_value = "both")]
    pub shapes: ShapeArg,
    #[arg(long, default_value_t = 0)]
    pub n_min: u32,
    #[arg(long, default_value_t = 4)]
    pub n_max: u32,
    #[arg(long)]
    pub output: PathBuf,
    /// Worker threads (default: one per core)
    #[arg(long)]
    pub jobs: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl SweepArgs {
    pub fn spec(&self) -> SweepSpec {
        let shapes = match self.shapes {
            ShapeArg::Linear => Shapes::Linear,
            ShapeArg::Cyclic => Shapes::Cyclic,
            ShapeArg::Both => Shapes::Both,
        };
        let mut spec = SweepSpec::new(self.max_vertices, self.max_length, shapes, &self.output);
        spec.n_range = self.n_min..=self.n_max;
        spec.jobs = self.jobs;
        spec.seed = self.seed;
        spec
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Analyze { alg, seed } => cmd_analyze(&alg.algebra()?, seed, out),
        Command::Module { alg, expr, query } => cmd_module(&alg.algebra()?, &expr, &query, out),
        Command::Verify { alg, theorem, n, seed } => cmd_verify(&alg.algebra()?, &theorem, n, seed, out),
        Command::Sweep(args) => cmd_sweep(&args.spec(), out),
        Command::Reproduce { flip_convention } => reproduce::cmd_reproduce(flip_convention, out),
        Command::Oracle { alg, field_p, expr, query } => {
            cmd_oracle(&alg.algebra()?, field_p, expr.as_deref().zip(query.as_deref()), out)
        }
    }
}

pub fn cmd_analyze(alg: &KupischSeries, seed: u64, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "{}", serde_json::to_string_pretty(&classify(alg, seed))?)?;
    Ok(0)
}

fn module_json(m: &ModuleSum) -> Value {
    Value::String(m.to_string())
}

/// `Lambda` (the regular module) or a module expression.
fn parse_target(alg: &KupischSeries, expr: &str) -> Result<ModuleSum> {
    match expr.trim() {
        "Lambda" => Ok(alg.regular()),
        e => Ok(parse_module(alg, e)?),
    }
}

pub fn module_query(alg: &KupischSeries, expr: &str, query: &str) -> Result<Value> {
    let m = parse_module(alg, expr)?;
    let value = match query {
        "pd" => serde_json::to_value(alg.pd(&m))?,
        "id" => serde_json::to_value(alg.id(&m))?,
        "gpd" => json!(alg.gpd(&m)?),
        "socle" => module_json(&alg.socle(&m)),
        "top" => module_json(&alg.top(&m)),
        "envelope" => module_json(&alg.injective_envelope(&m)),
        "cover" => module_json(&alg.projective_cover(&m)),
        "in-sub-lambda" => json!(alg.in_sub_lambda(&m)?),
        q if q.starts_with("ext:") => {
            let (k, target) = q["ext:".len()..].split_once(':').ok_or_else(|| anyhow!("expected ext:k:target"))?;
            let k: usize = k.parse().with_context(|| format!("bad Ext degree {k:?}"))?;
            json!(alg.ext_dim(&m, &parse_target(alg, target)?, k))
        }
        q => bail!("unknown query {q:?}"),
    };
    Ok(value)
}

pub fn cmd_module(alg: &KupischSeries, expr: &str, query: &str, out: &mut dyn Write) -> Result<i32> {
    writeln!(out, "{}", module_query(alg, expr, query)?)?;
    Ok(0)
}

/// Runs a verifier. Precondition failures are reported as a record with
/// status `error` and exit code 2.
pub fn verify(alg: &KupischSeries, theorem: &str, n: Option<u32>, seed: u64) -> Result<VerdictRecord> {
    let (name, inline_n) = match theorem.split_once(':') {
        Some((name, n)) => (name, Some(n.parse::<u32>().with_context(|| format!("bad n in {theorem:?}"))?)),
        None => (theorem, None),
    };
    let n = match (inline_n, n) {
        (Some(a), Some(b)) if a != b => bail!("conflicting values of n: {a} and {b}"),
        (a, b) => a.or(b),
    };
    let need_n = || n.ok_or_else(|| anyhow!("--n is required for {name}"));
    let record = match name {
        "prinj" => VerdictRecord::from_result(verify_prinj_socle(alg, need_n()?), None),
        "gp-socle-sub" => VerdictRecord::from_result(verify_gp_socle_sub(alg, need_n()?, seed), None),
        "thm31-count" => VerdictRecord::from_result(verify_simple_count(alg, need_n()?), None),
        "gpd-bound" => VerdictRecord::from_result(verify_gpd_bound(alg), None),
        "lemma22" => VerdictRecord::from_result(verify_gpd_inequalities(alg), None),
        "precluster" => match verify_precluster(alg, n.unwrap_or(1), DEFAULT_SEARCH_CAP) {
            Ok(r) => r,
            Err(e) => VerdictRecord::from_result(Err(e), None),
        },
        other => bail!("unknown theorem {other:?}"),
    };
    Ok(record)
}

pub fn cmd_verify(alg: &KupischSeries, theorem: &str, n: Option<u32>, seed: u64, out: &mut dyn Write) -> Result<i32> {
    let record = verify(alg, theorem, n, seed)?;
    writeln!(out, "{}", serde_json::to_string_pretty(&record)?)?;
    Ok(match record.status {
        VerdictStatus::Pass => 0,
        VerdictStatus::Fail => 1,
        VerdictStatus::Error => 2,
    })
}

pub fn cmd_sweep(spec: &SweepSpec, out: &mut dyn Write) -> Result<i32> {
    let summary = sweep::run(spec)?;
    writeln!(out, "{}", serde_json::to_string(&json!({ "summary": summary }))?)?;
    Ok(if summary.inconsistent.is_empty() { 0 } else { 1 })
}

pub fn cmd_oracle(alg: &KupischSeries, p: u32, query: Option<(&str, &str)>, out: &mut dyn Write) -> Result<i32> {
    let Some((expr, query)) = query else {
        let cmp = crosscheck::compare(alg, p)?;
        writeln!(out, "{}", serde_json::to_string_pretty(&cmp)?)?;
        return Ok(if cmp.agrees() { 0 } else { 1 });
    };
    let oracle = Oracle::new(alg, p)?;
    let single = |e: &str| -> Result<_> {
        let m = parse_module(alg, e)?;
        match m.summands() {
            [x] => Ok(*x),
            _ => bail!("oracle queries take an indecomposable, got {e:?}"),
        }
    };
    let x = single(expr)?;
    let value = match query.split_once(':') {
        Some(("hom", t)) => json!(oracle.hom_dim(&x, &single(t)?)?),
        Some(("ext1", t)) => json!(oracle.ext1_dim(&x, &single(t)?)?),
        None if query == "injective" => json!(oracle.is_injective(&x)?),
        None if query == "tau" => json!(oracle.tau(&x)?.map_or_else(|| "0".to_string(), |t| t.to_string())),
        _ => bail!("unknown oracle query {query:?}"),
    };
    writeln!(out, "{value}")?;
    Ok(0)
}
