//! Exhaustive classification sweeps over bounded Kupisch series.
//!
//! Output is JSONL, one record per algebra, in enumeration order. A sweep
//! resumes from an existing output file by skipping every canonical form
//! already recorded there.

use std::collections::{BTreeMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{validate, KupischSeries, Shape};
use crate::classifier::{classify, ClassificationReport};
use crate::error::{Error, Result};

const BATCH: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shapes {
    Linear,
    Cyclic,
    Both,
}

impl Shapes {
    fn includes(self, shape: Shape) -> bool {
        matches!((self, shape), (Shapes::Both, _) | (Shapes::Linear, Shape::Linear) | (Shapes::Cyclic, Shape::Cyclic))
    }
}

#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub max_vertices: usize,
    pub max_length: usize,
    pub shapes: Shapes,
    /// Values of `n` counted in the summary.
    pub n_range: RangeInclusive<u32>,
    pub output: PathBuf,
    pub seed: u64,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
}

impl SweepSpec {
    pub fn new(max_vertices: usize, max_length: usize, shapes: Shapes, output: impl Into<PathBuf>) -> Self {
        SweepSpec { max_vertices, max_length, shapes, n_range: 0..=4, output: output.into(), seed: 0, jobs: None }
    }

    fn check(&self) -> Result<()> {
        if self.max_vertices == 0 || self.max_length == 0 {
            return Err(Error::PreconditionFailed("sweep bounds must be at least 1".into()));
        }
        if self.n_range.is_empty() {
            return Err(Error::PreconditionFailed("empty n range".into()));
        }
        Ok(())
    }
}

/// Canonical forms within the bounds: linear series first, then cyclic ones
/// (least rotation only), each by vertex count and then lexicographically.
pub fn enumerate(max_vertices: usize, max_length: usize, shapes: Shapes) -> Vec<KupischSeries> {
    let mut out = Vec::new();
    for shape in [Shape::Linear, Shape::Cyclic] {
        if !shapes.includes(shape) {
            continue;
        }
        for v in 1..=max_vertices {
            let mut prefix = Vec::with_capacity(v);
            extend(&mut prefix, v, max_length, shape, &mut out);
        }
    }
    out
}

fn extend(prefix: &mut Vec<usize>, v: usize, max_length: usize, shape: Shape, out: &mut Vec<KupischSeries>) {
    if prefix.len() == v {
        if validate(prefix, shape).is_ok() {
            let alg = KupischSeries::new(prefix.clone(), shape).expect("validated");
            if alg.is_canonical() {
                out.push(alg);
            }
        }
        return;
    }
    let lo = match prefix.last() {
        Some(&prev) => prev.saturating_sub(1).max(1),
        None => 1,
    };
    for c in lo..=max_length {
        prefix.push(c);
        extend(prefix, v, max_length, shape, out);
        prefix.pop();
    }
}

/// One JSONL line.
#[derive(Debug, Serialize)]
pub struct SweepRecord<'a> {
    pub canonical: String,
    pub consistent: bool,
    pub minimal_ag_for: Vec<u32>,
    pub n_auslander_for: Vec<u32>,
    pub report: &'a ClassificationReport,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SweepSummary {
    pub algebras: usize,
    pub computed: usize,
    pub resumed: usize,
    pub gorenstein: usize,
    pub self_injective: usize,
    pub minimal_ag: BTreeMap<u32, usize>,
    pub n_auslander: BTreeMap<u32, usize>,
    pub inconsistent: Vec<String>,
}

impl SweepSummary {
    fn absorb(&mut self, line: &Value) {
        self.algebras += 1;
        let report = &line["report"];
        if report["gorenstein_degree"].is_u64() {
            self.gorenstein += 1;
        }
        if report["self_injective"] == json!(true) {
            self.self_injective += 1;
        }
        for (key, target) in [("minimal_ag_for", &mut self.minimal_ag), ("n_auslander_for", &mut self.n_auslander)] {
            for n in line[key].as_array().into_iter().flatten().filter_map(Value::as_u64) {
                *target.entry(n as u32).or_default() += 1;
            }
        }
        if line["consistent"] != json!(true) {
            self.inconsistent.push(line["canonical"].as_str().unwrap_or("?").to_string());
        }
    }
}

pub fn record_line(
    alg: &KupischSeries,
    report: &ClassificationReport,
    n_range: &RangeInclusive<u32>,
) -> Result<String> {
    let record = SweepRecord {
        canonical: alg.to_string(),
        consistent: report.all_consistent(),
        minimal_ag_for: n_range.clone().filter(|&n| alg.is_minimal_ag(n)).collect(),
        n_auslander_for: n_range.clone().filter(|&n| alg.is_n_auslander(n)).collect(),
        report,
    };
    Ok(serde_json::to_string(&record)?)
}

/// Reads the lines of a previous run, dropping a torn trailing line.
fn load_existing(spec: &SweepSpec) -> Result<Vec<Value>> {
    let file = match File::open(&spec.output) {
        Ok(f) => f,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(Vec::new()),
        Err(e) => return Err(e.into()),
    };
    let mut lines = Vec::new();
    let mut torn = false;
    for line in BufReader::new(file).lines() {
        let line = line?;
        match serde_json::from_str::<Value>(&line) {
            Ok(v) if v["canonical"].is_string() => lines.push((line, v)),
            _ => torn = true,
        }
    }
    if torn {
        let mut f = File::create(&spec.output)?;
        for (raw, _) in &lines {
            writeln!(f, "{raw}")?;
        }
    }
    Ok(lines.into_iter().map(|(_, v)| v).collect())
}

/// Runs (or resumes) a sweep, appending to `spec.output`.
pub fn run(spec: &SweepSpec) -> Result<SweepSummary> {
    spec.check()?;
    let existing = load_existing(spec)?;
    let done: HashSet<String> = existing.iter().filter_map(|v| v["canonical"].as_str().map(String::from)).collect();
    let mut summary = SweepSummary::default();
    for v in &existing {
        summary.absorb(v);
    }
    summary.resumed = existing.len();

    let todo: Vec<KupischSeries> = enumerate(spec.max_vertices, spec.max_length, spec.shapes)
        .into_iter()
        .filter(|a| !done.contains(&a.to_string()))
        .collect();

    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = spec.jobs {
        pool = pool.num_threads(jobs);
    }
    let pool = pool.build().map_err(|e| Error::PreconditionFailed(format!("thread pool: {e}")))?;

    let mut out = OpenOptions::new().create(true).append(true).open(&spec.output)?;
    for batch in todo.chunks(BATCH) {
        let lines: Vec<String> = pool.install(|| {
            batch
                .par_iter()
                .map(|alg| record_line(alg, &classify(alg, spec.seed), &spec.n_range))
                .collect::<Result<_>>()
        })?;
        for line in &lines {
            writeln!(out, "{line}")?;
            summary.absorb(&serde_json::from_str(line)?);
        }
        out.flush()?;
        summary.computed += lines.len();
    }
    Ok(summary)
}
