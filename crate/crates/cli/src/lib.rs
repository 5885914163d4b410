//! `cpl`: group specs in, JSON reports out.
//!
//! Exit status is 0 when every report passed, 1 when any report has
//! violations (or the open-question scan found a breach), and 2 for usage,
//! ingestion and order-guard errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use cpl_core::catalog::{catalog, CatalogProfile};
use cpl_core::classes::{all_conjugacy_classes, decompose_normal_subset, inverse_class, product_of_subsets};
use cpl_core::harness::{
    reproduce_example_2_2, reproduce_example_3_2, reproduce_remark_4, run_theorem, SweepOptions,
};
use cpl_core::ingest::load_generator_file;
use cpl_core::search::{conjecture_group, open_question_group, ConjectureSummary, OpenQuestionScan};
use cpl_core::section::DEFAULT_MAX_CLASSES;
use cpl_core::series::{
    chief_factor_orders, chief_series, derived_length, derived_series, is_nilpotent, is_solvable,
    is_supersolvable, lower_central_series, nilpotency_class, upper_central_series, ChiefChoice,
};
use cpl_core::subgroup::{center, element_centralizer};
use cpl_core::{GroupSpec, OrderGuard, TheoremId, VerificationReport, DEFAULT_MAX_ORDER};

mod output;

pub use output::{render, Format};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser, Serialize)]
#[command(name = "cpl", version, about = "Conjugacy-class products and centralizer sections of finite groups")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    #[serde(skip)]
    pub output: Option<PathBuf>,

    /// Largest group order any construction may enumerate.
    #[arg(long, global = true, env = "CPL_MAX_ORDER", default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// Order, series and solvability data for one group.
    Info(SpecArg),
    /// Conjugacy classes with sizes and centralizer orders.
    Classes(SpecArg),
    /// Number of classes in a product of two classes.
    Eta(EtaArgs),
    /// Check one statement over a set of groups.
    Verify(VerifyArgs),
    /// Reproduce a worked example exactly.
    Reproduce(ReproduceArgs),
    /// Collect data for an open problem.
    Scan(ScanArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Info(_) => "info",
            Command::Classes(_) => "classes",
            Command::Eta(_) => "eta",
            Command::Verify(_) => "verify",
            Command::Reproduce(_) => "reproduce",
            Command::Scan(_) => "scan",
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct SpecArg {
    /// Group spec, e.g. "D4 x Q8" or "wr(C2,3)".
    #[arg(value_name = "SPEC", required_unless_present = "group")]
    pub spec: Option<String>,
    #[arg(long, conflicts_with = "spec")]
    pub group: Option<String>,
}

impl SpecArg {
    fn text(&self) -> &str {
        self.spec.as_deref().or(self.group.as_deref()).unwrap_or_default()
    }
}

#[derive(Debug, Args, Serialize)]
pub struct EtaArgs {
    #[command(flatten)]
    pub spec: SpecArg,
    /// Take A to be the first class whose elements have this order.
    #[arg(long, conflicts_with = "rep_index", required_unless_present = "rep_index")]
    pub rep_order: Option<usize>,
    /// Take A to be the class with this index.
    #[arg(long)]
    pub rep_index: Option<usize>,
    /// Take B = A⁻¹ (default B = A).
    #[arg(long, conflicts_with = "b_rep_index")]
    pub with_inverse: bool,
    /// Take B to be the class with this index.
    #[arg(long)]
    pub b_rep_index: Option<usize>,
}

#[derive(Debug, Args, Serialize)]
#[group(required = true, multiple = false)]
pub struct Source {
    /// A group spec; may be repeated.
    #[arg(long)]
    pub group: Vec<String>,
    #[arg(long, value_enum)]
    pub catalog: Option<Profile>,
    /// JSON generator file: one object or an array of
    /// `{"name", "degree", "generators": [[images]]}`.
    #[arg(long)]
    pub from: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Smoke,
    Full,
}

impl From<Profile> for CatalogProfile {
    fn from(p: Profile) -> Self {
        match p {
            Profile::Smoke => CatalogProfile::Smoke,
            Profile::Full => CatalogProfile::Full,
        }
    }
}

#[derive(Debug, Args, Serialize)]
pub struct VerifyArgs {
    /// One of A, B, T2.4, L4.1, T4.2, ETA_PGROUP.
    #[arg(long)]
    pub theorem: TheoremId,
    #[command(flatten)]
    pub source: Source,
    /// Normal subsets for theorem A are unions of at most this many classes.
    #[arg(long, default_value_t = 1)]
    pub union_depth: usize,
    /// Skip class-pair sweeps on groups with more classes than this.
    #[arg(long, default_value_t = DEFAULT_MAX_CLASSES)]
    pub max_classes: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Example {
    #[value(name = "2.2")]
    #[serde(rename = "2.2")]
    ExtraspecialProducts,
    #[value(name = "3.2")]
    #[serde(rename = "3.2")]
    AffineGroups,
    #[value(name = "remark4")]
    #[serde(rename = "remark4")]
    Wreath,
}

#[derive(Debug, Args, Serialize)]
pub struct ReproduceArgs {
    #[arg(long, value_enum)]
    pub example: Example,
    /// Values of m for example 2.2; may be repeated. Default 2, 3, 5, 6, 30.
    #[arg(long)]
    pub m: Vec<u64>,
    /// Primes for example 3.2; may be repeated. Default 3, 5, 7, 11, 13.
    #[arg(long)]
    pub p: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Question {
    Open4,
    Conjecture,
}

#[derive(Debug, Args, Serialize)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub question: Question,
    #[command(flatten)]
    pub source: Source,
    #[arg(long, default_value_t = DEFAULT_MAX_CLASSES)]
    pub max_classes: usize,
}

/// The full result of one invocation.
#[derive(Debug, Serialize)]
pub struct Envelope {
    pub schema_version: u32,
    pub command: String,
    pub config: Value,
    pub reports: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
    pub wall_time_ms: u64,
    #[serde(skip)]
    pub failed: bool,
}

impl Envelope {
    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed || self.reports.iter().any(|r| !r.passed()))
    }
}

fn guard(cfg: &RunConfig) -> OrderGuard {
    OrderGuard(cfg.max_order)
}

fn load(source: &Source, guard: OrderGuard) -> anyhow::Result<Vec<GroupSpec>> {
    if let Some(p) = source.catalog {
        return Ok(catalog(p.into(), guard)?);
    }
    if let Some(path) = &source.from {
        return Ok(load_generator_file(path, guard)?);
    }
    source
        .group
        .iter()
        .map(|s| GroupSpec::parse(s, guard).with_context(|| format!("group spec `{s}`")))
        .collect()
}

fn info(spec: &GroupSpec) -> Value {
    let g = &spec.group;
    let orders = |s: cpl_core::SeriesReport| s.orders();
    json!({
        "spec": spec.expression,
        "order": g.order(),
        "degree": g.degree(),
        "generators": g.generators().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "classes": all_conjugacy_classes(g).len(),
        "abelian": g.is_abelian(),
        "nilpotent": is_nilpotent(g),
        "supersolvable": is_supersolvable(g),
        "solvable": is_solvable(g),
        "derived_length": derived_length(g),
        "nilpotency_class": nilpotency_class(g),
        "center_order": center(g).order(),
        "derived_series": orders(derived_series(g)),
        "lower_central_series": orders(lower_central_series(g)),
        "upper_central_series": orders(upper_central_series(g)),
        "chief_factors": chief_factor_orders(&chief_series(g, ChiefChoice::First)),
    })
}

fn classes(spec: &GroupSpec) -> Value {
    let g = &spec.group;
    let rows: Vec<Value> = all_conjugacy_classes(g)
        .iter()
        .map(|c| {
            json!({
                "index": c.index(),
                "rep": c.rep(),
                "size": c.size(),
                "element_order": g.element_order(c.rep()),
                "centralizer_order": element_centralizer(g, c.rep()).order(),
                "rep_cycles": g.element(c.rep()).to_string(),
            })
        })
        .collect();
    json!({ "spec": spec.expression, "classes": rows })
}

fn eta_data(spec: &GroupSpec, args: &EtaArgs) -> anyhow::Result<Value> {
    let g = &spec.group;
    let cs = all_conjugacy_classes(g);
    let pick = |i: usize| cs.get(i).ok_or_else(|| anyhow!("class index {i} out of range (0..{})", cs.len()));
    let a = match (args.rep_index, args.rep_order) {
        (Some(i), _) => pick(i)?,
        (None, Some(k)) => cs
            .iter()
            .find(|c| g.element_order(c.rep()) == k)
            .ok_or_else(|| anyhow!("no element of order {k} in {}", spec.expression))?,
        (None, None) => bail!("one of --rep-order or --rep-index is required"),
    };
    let b = match args.b_rep_index {
        Some(j) => pick(j)?,
        None if args.with_inverse => inverse_class(g, a),
        None => a,
    };
    let product = product_of_subsets(g, a.members(), b.members());
    let report = decompose_normal_subset(g, &product)?;
    let class_ids: Vec<usize> = report
        .constituents
        .iter()
        .map(|&r| cpl_core::classes::class_index_of(g, r))
        .collect();
    Ok(json!({
        "spec": spec.expression,
        "a": { "index": a.index(), "rep": a.rep(), "size": a.size() },
        "b": { "index": b.index(), "rep": b.rep(), "size": b.size() },
        "eta": report.eta,
        "constituent_classes": class_ids,
        "product_size": report.product_size,
    }))
}

/// Runs one command without writing anything.
pub fn execute(cfg: &RunConfig) -> anyhow::Result<Envelope> {
    let start = Instant::now();
    let guard = guard(cfg);
    let mut reports = Vec::new();
    let mut data = None;
    let mut failed = false;
    match &cfg.command {
        Command::Info(s) => data = Some(info(&GroupSpec::parse(s.text(), guard)?)),
        Command::Classes(s) => data = Some(classes(&GroupSpec::parse(s.text(), guard)?)),
        Command::Eta(args) => data = Some(eta_data(&GroupSpec::parse(args.spec.text(), guard)?, args)?),
        Command::Verify(args) => {
            if matches!(args.theorem, TheoremId::Example22 | TheoremId::Example32 | TheoremId::Remark4) {
                bail!("{} is reproduced with `cpl reproduce`", args.theorem);
            }
            let opts = SweepOptions {
                union_depth: args.union_depth,
                max_classes: args.max_classes,
            };
            let groups = load(&args.source, guard)?;
            reports = groups
                .par_iter()
                .map(|s| run_theorem(args.theorem, &s.group, &opts))
                .collect::<Result<Vec<_>, _>>()?;
        }
        Command::Reproduce(args) => {
            reports = match args.example {
                Example::ExtraspecialProducts => {
                    let ms = if args.m.is_empty() { vec![2, 3, 5, 6, 30] } else { args.m.clone() };
                    ms.par_iter()
                        .map(|&m| reproduce_example_2_2(m, guard))
                        .collect::<Result<Vec<_>, _>>()?
                }
                Example::AffineGroups => {
                    let ps = if args.p.is_empty() { vec![3, 5, 7, 11, 13] } else { args.p.clone() };
                    ps.par_iter()
                        .map(|&p| reproduce_example_3_2(p, guard))
                        .collect::<Result<Vec<_>, _>>()?
                }
                Example::Wreath => vec![reproduce_remark_4(guard)?],
            };
        }
        Command::Scan(args) => {
            let groups = load(&args.source, guard)?;
            match args.question {
                Question::Open4 => {
                    let parts: Vec<_> = groups.par_iter().map(|s| open_question_group(&s.group)).collect();
                    let scan = OpenQuestionScan::from_parts(parts);
                    failed = !scan.breaches.is_empty();
                    data = Some(serde_json::to_value(scan)?);
                }
                Question::Conjecture => {
                    let parts = groups
                        .par_iter()
                        .map(|s| conjecture_group(&s.group, args.max_classes))
                        .collect::<Result<Vec<_>, _>>()?;
                    data = Some(serde_json::to_value(ConjectureSummary::from_parts(parts))?);
                }
            }
        }
    }
    Ok(Envelope {
        schema_version: SCHEMA_VERSION,
        command: cfg.command.name().to_string(),
        config: serde_json::to_value(cfg)?,
        reports,
        data,
        wall_time_ms: start.elapsed().as_millis() as u64,
        failed,
    })
}

/// Executes and writes the rendered result; returns the exit status.
pub fn run(cfg: &RunConfig) -> anyhow::Result<i32> {
    let env = execute(cfg)?;
    let text = render(&env, cfg.format)?;
    match &cfg.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(env.exit_code())
}

/// Parses arguments and runs, mapping every error to exit status 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(&cfg) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    }
}
