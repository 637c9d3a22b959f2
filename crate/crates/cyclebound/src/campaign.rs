/*!
Batch verification campaigns with deterministic, machine-readable reports.

A campaign takes a list of graph sources (generator specs, graph6 files,
or bare graph6 literals), a list of checks, and processing knobs, and
produces one record per graph in input order: the exact invariant
profile, the requested bound rows, the 3-connected dichotomy, sharpness
of the main bound, and the lemma suite. Failures of proved statements
are collected as violations (the implementation-bug signal); failures of
the conjectured bound are findings and never affect verdicts.

Three properties shape the report plumbing:

- Skip, do not fail: graphs beyond a solver cap or out of a checker's
  scope get a skip note on the record; the campaign always completes.
- Budget, do not hang: each graph gets a wall-clock budget (default ten
  seconds); when it runs out the profile is flagged incomplete, every
  check on that graph is skipped, and no verdict is drawn from the
  partial numbers.
- Determinism: given the same config and seed, two runs render byte
  identical JSON once timing fields are omitted, and the worker count
  never changes the bytes (records are keyed by input index and the
  worker count is deliberately left out of the config echo).

The counterexample search for the conjectured bound takes the bound
formula as a parameter, so a deliberately corrupted formula can prove
the detector fires.
*/

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    check_theorem_c, evaluate_all, theorem1_slack, BoundEntry, BoundError, BoundId,
    TheoremCOutcome, TheoremCReport,
};
use crate::gen::GeneratorSpec;
use crate::graph::Graph;
use crate::graph6::{encode_graph6, parse_graph6, parse_graph6_file};
use crate::invariants::{profile_budgeted, InvariantProfile};
use crate::machinery::{run_lemma_suite, SuiteReport};
use crate::rational::Rat;

#[derive(Debug, Error)]
pub enum CampaignError {
    #[error("at least one source is required")]
    NoSources,
    #[error("at least one check is required")]
    NoChecks,
    #[error("jobs must be at least 1")]
    BadJobs,
    #[error("unknown check '{name}'")]
    UnknownCheck { name: String },
    #[error("unknown report format '{name}'")]
    UnknownFormat { name: String },
    #[error("source '{spec}' is unreadable: {reason}")]
    BadSource { spec: String, reason: String },
    #[error("source '{spec}' yields {got} graphs; exactly one is required here")]
    NotSingle { spec: String, got: usize },
    #[error("worker pool construction failed: {0}")]
    Pool(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

// ---------------------------------------------------------------- checks

/// The campaign check vocabulary. Seven tokens select bound rows, the
/// rest select the dichotomy, the sharpness probe, and the lemma suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckId {
    Theorem1,
    Dirac,
    Dirac2,
    TheoremC,
    TheoremD,
    TheoremE,
    TheoremF,
    Conjecture1,
    Sharpness,
    LemmaSuite,
}

impl CheckId {
    pub const ALL: [CheckId; 10] = [
        CheckId::Theorem1,
        CheckId::Dirac,
        CheckId::Dirac2,
        CheckId::TheoremC,
        CheckId::TheoremD,
        CheckId::TheoremE,
        CheckId::TheoremF,
        CheckId::Conjecture1,
        CheckId::Sharpness,
        CheckId::LemmaSuite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::Theorem1 => "theorem1",
            CheckId::Dirac => "dirac",
            CheckId::Dirac2 => "dirac2",
            CheckId::TheoremC => "theoremC",
            CheckId::TheoremD => "theoremD",
            CheckId::TheoremE => "theoremE",
            CheckId::TheoremF => "theoremF",
            CheckId::Conjecture1 => "conjecture1",
            CheckId::Sharpness => "sharpness",
            CheckId::LemmaSuite => "lemma_suite",
        }
    }

    pub fn parse(name: &str) -> Result<CheckId, CampaignError> {
        CheckId::ALL
            .into_iter()
            .find(|c| c.name() == name)
            .ok_or_else(|| CampaignError::UnknownCheck { name: name.to_string() })
    }

    /// The bound row this check selects, when it is a bound check.
    pub fn bound(self) -> Option<BoundId> {
        match self {
            CheckId::Theorem1 => Some(BoundId::Theorem1),
            CheckId::Dirac => Some(BoundId::Dirac),
            CheckId::Dirac2 => Some(BoundId::Dirac2),
            CheckId::TheoremD => Some(BoundId::TheoremD),
            CheckId::TheoremE => Some(BoundId::TheoremE),
            CheckId::TheoremF => Some(BoundId::TheoremF),
            CheckId::Conjecture1 => Some(BoundId::Conjecture1),
            _ => None,
        }
    }
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ReportFormat {
    pub fn name(self) -> &'static str {
        match self {
            ReportFormat::Json => "json",
            ReportFormat::Csv => "csv",
        }
    }

    pub fn parse(name: &str) -> Result<ReportFormat, CampaignError> {
        match name {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(CampaignError::UnknownFormat { name: other.to_string() }),
        }
    }
}

// ---------------------------------------------------------------- config

#[derive(Clone, Debug)]
pub struct CampaignConfig {
    /// Generator specs, graph6 file paths, or bare graph6 records, tried
    /// in that order.
    pub sources: Vec<String>,
    pub checks: Vec<CheckId>,
    /// Worker count. Never affects report bytes.
    pub jobs: usize,
    /// Default seed for `gnp:` sources that omit their own.
    pub seed: u64,
    pub format: ReportFormat,
    /// Where the CLI writes the rendered report; `None` means stdout.
    pub output: Option<PathBuf>,
    /// Per-graph wall-clock budget; `None` disables budgeting.
    pub time_budget: Option<Duration>,
    /// Leave timing fields out of the report (the byte-comparison mode).
    pub omit_timing: bool,
}

impl CampaignConfig {
    pub fn new(sources: Vec<String>, checks: Vec<CheckId>) -> Self {
        CampaignConfig {
            sources,
            checks,
            jobs: 1,
            seed: 0,
            format: ReportFormat::Json,
            output: None,
            time_budget: Some(Duration::from_secs(10)),
            omit_timing: false,
        }
    }

    fn validate(&self) -> Result<(), CampaignError> {
        if self.sources.is_empty() {
            return Err(CampaignError::NoSources);
        }
        if self.checks.is_empty() {
            return Err(CampaignError::NoChecks);
        }
        if self.jobs == 0 {
            return Err(CampaignError::BadJobs);
        }
        Ok(())
    }

    fn wants(&self, check: CheckId) -> bool {
        self.checks.contains(&check)
    }
}

// ---------------------------------------------------------------- report

#[derive(Clone, Debug, Serialize)]
pub struct SkipNote {
    pub check: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Violation {
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphRecord {
    /// Position in the expanded input stream; records stay in this order
    /// regardless of the worker count.
    pub index: usize,
    /// The source text this graph came from.
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub profile: Option<InvariantProfile>,
    /// Rows for the requested bound checks, in canonical bound order.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub bounds: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_c: Option<TheoremCReport>,
    /// Whether the main bound is tight here; `None` when inapplicable.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sharp: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lemma_suite: Option<SuiteReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<SkipNote>,
    /// Asserted statements that failed on this graph: bug signals.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub violations: Vec<Violation>,
    /// Failures reported without a verdict: the conjectured bound
    /// anywhere, and the main bound in the degenerate regime κ ≤ 1.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub findings: Vec<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SummaryViolation {
    pub index: usize,
    pub source: String,
    pub check: String,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignSummary {
    pub graphs: usize,
    pub errors: usize,
    pub skips: usize,
    pub violations: Vec<SummaryViolation>,
    /// Record indices where the main bound is tight.
    pub sharp_instances: Vec<usize>,
    /// Record indices with reported-only findings.
    pub findings: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub total_runtime_ms: Option<u128>,
}

/// The config fields that determine report content. The worker count and
/// delivery knobs are left out so runs that differ only in those render
/// the same bytes.
#[derive(Clone, Debug, Serialize)]
pub struct ConfigEcho {
    pub sources: Vec<String>,
    pub checks: Vec<CheckId>,
    pub seed: u64,
    pub format: &'static str,
    pub time_budget_secs: Option<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub config_echo: ConfigEcho,
    pub records: Vec<GraphRecord>,
    pub summary: CampaignSummary,
}

impl CampaignReport {
    /// True when some proved statement failed somewhere: the exit-code-1
    /// signal. Conjecture findings never count.
    pub fn has_violations(&self) -> bool {
        !self.summary.violations.is_empty()
    }
}

// --------------------------------------------------------------- sources

/// A source expands to graphs or to one error; either way it stays in
/// the record stream.
struct WorkItem {
    source: String,
    payload: Result<Graph, String>,
}

/// Grafts the campaign seed onto `gnp:` sources that omit their own, so
/// `--seed` picks the random corpus.
fn effective_source(text: &str, seed: u64) -> String {
    if text.starts_with("gnp:") && !text.contains("seed=") {
        format!("{text},seed={seed}")
    } else {
        text.to_string()
    }
}

/// Source resolution order: generator spec, then a readable file of
/// graph6 records, then a bare graph6 literal. Generator syntax always
/// contains ':', which never appears in graph6, so the cases cannot
/// collide; a file whose name happens to parse as a spec resolves as the
/// spec.
fn resolve_source(text: &str, seed: u64) -> Result<Vec<Graph>, String> {
    let effective = effective_source(text, seed);
    let spec_err = match GeneratorSpec::parse(&effective) {
        Ok(spec) => return spec.instantiate(None).map_err(|e| e.to_string()),
        Err(e) => e,
    };
    let path = Path::new(text);
    if path.is_file() {
        let content = fs::read_to_string(path).map_err(|e| e.to_string())?;
        return parse_graph6_file(&content).map_err(|(line, e)| format!("record {line}: {e}"));
    }
    if text.contains(':') {
        // generator syntax that failed to parse; surface that error
        return Err(spec_err.to_string());
    }
    parse_graph6(text).map(|g| vec![g]).map_err(|e| e.to_string())
}

fn expand_sources(config: &CampaignConfig) -> Vec<WorkItem> {
    let mut items = Vec::new();
    for source in &config.sources {
        match resolve_source(source, config.seed) {
            Ok(graphs) => items.extend(graphs.into_iter().map(|g| WorkItem {
                source: source.clone(),
                payload: Ok(g),
            })),
            Err(reason) => {
                items.push(WorkItem { source: source.clone(), payload: Err(reason) })
            }
        }
    }
    items
}

// ------------------------------------------------------------ processing

fn empty_record(index: usize, source: &str) -> GraphRecord {
    GraphRecord {
        index,
        source: source.to_string(),
        graph6: None,
        error: None,
        profile: None,
        bounds: Vec::new(),
        theorem_c: None,
        sharp: None,
        lemma_suite: None,
        skipped: Vec::new(),
        violations: Vec::new(),
        findings: Vec::new(),
        elapsed_ms: None,
    }
}

fn process_item(index: usize, item: &WorkItem, config: &CampaignConfig) -> GraphRecord {
    let mut rec = empty_record(index, &item.source);
    let g = match &item.payload {
        Ok(g) => g,
        Err(reason) => {
            rec.error = Some(reason.clone());
            return rec;
        }
    };
    let started = Instant::now();
    let deadline = config.time_budget.map(|b| started + b);
    rec.graph6 = Some(encode_graph6(g));

    let profile = profile_budgeted(g, deadline);
    if !profile.complete {
        for &check in &config.checks {
            rec.skipped.push(SkipNote {
                check: check.name().to_string(),
                reason: "time budget exhausted; profile numbers are lower bounds".to_string(),
            });
        }
        rec.profile = Some(profile);
        rec.elapsed_ms = (!config.omit_timing).then(|| started.elapsed().as_millis());
        return rec;
    }

    let requested: Vec<BoundId> =
        config.checks.iter().filter_map(|c| c.bound()).collect();
    if !requested.is_empty() {
        let entries = evaluate_all(&profile);
        for e in entries {
            if !requested.contains(&e.bound) {
                continue;
            }
            if e.holds == Some(false) {
                let detail = format!(
                    "c = {} < {}",
                    profile.circumference,
                    e.value.as_ref().expect("failing rows carry a value")
                );
                let note = Violation { check: e.bound.name().to_string(), detail };
                if e.asserted {
                    rec.violations.push(note);
                } else {
                    rec.findings.push(note);
                }
            }
            rec.bounds.push(e);
        }
    }

    if config.wants(CheckId::TheoremC) && profile.kappa >= 3 {
        match check_theorem_c(g, &profile) {
            Ok(report) => {
                if report.outcome == TheoremCOutcome::Neither {
                    rec.violations.push(Violation {
                        check: CheckId::TheoremC.name().to_string(),
                        detail: format!(
                            "c = {} < 3*min_degree - 3 = {} and some longest cycle fails to dominate",
                            profile.circumference,
                            3 * profile.min_degree as i64 - 3
                        ),
                    });
                }
                rec.theorem_c = Some(report);
            }
            Err(e) => rec.skipped.push(SkipNote {
                check: CheckId::TheoremC.name().to_string(),
                reason: e.to_string(),
            }),
        }
    }

    if config.wants(CheckId::Sharpness) {
        rec.sharp = theorem1_slack(&profile).map(|s| s.is_zero());
    }

    if config.wants(CheckId::LemmaSuite) {
        match run_lemma_suite(g) {
            Ok(suite) => {
                for ls in &suite.lemmas {
                    if ls.violations > 0 {
                        let detail = match &ls.sample {
                            Some(case) => format!(
                                "{} violating case(s); first: {} with lhs {} rhs {}",
                                ls.violations, case.context, case.lhs, case.rhs
                            ),
                            None => format!("{} violating case(s)", ls.violations),
                        };
                        rec.violations.push(Violation {
                            check: format!("lemma:{}", ls.lemma.name()),
                            detail,
                        });
                    }
                }
                rec.lemma_suite = Some(suite);
            }
            Err(e) => rec.skipped.push(SkipNote {
                check: CheckId::LemmaSuite.name().to_string(),
                reason: e.to_string(),
            }),
        }
    }

    rec.profile = Some(profile);
    rec.elapsed_ms = (!config.omit_timing).then(|| started.elapsed().as_millis());
    rec
}

fn build_pool(jobs: usize) -> Result<rayon::ThreadPool, CampaignError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CampaignError::Pool(e.to_string()))
}

/// Runs the campaign. Only config problems fail the run; per-graph
/// trouble lands in the records.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignReport, CampaignError> {
    config.validate()?;
    let started = Instant::now();
    let items = expand_sources(config);
    let pool = build_pool(config.jobs)?;
    let records: Vec<GraphRecord> = pool.install(|| {
        items
            .par_iter()
            .enumerate()
            .map(|(index, item)| process_item(index, item, config))
            .collect()
    });

    let mut summary = CampaignSummary {
        graphs: 0,
        errors: 0,
        skips: 0,
        violations: Vec::new(),
        sharp_instances: Vec::new(),
        findings: Vec::new(),
        total_runtime_ms: None,
    };
    for rec in &records {
        if rec.error.is_some() {
            summary.errors += 1;
        } else {
            summary.graphs += 1;
        }
        summary.skips += rec.skipped.len();
        for v in &rec.violations {
            summary.violations.push(SummaryViolation {
                index: rec.index,
                source: rec.source.clone(),
                check: v.check.clone(),
                detail: v.detail.clone(),
            });
        }
        if rec.sharp == Some(true) {
            summary.sharp_instances.push(rec.index);
        }
        if !rec.findings.is_empty() {
            summary.findings.push(rec.index);
        }
    }
    summary.total_runtime_ms = (!config.omit_timing).then(|| started.elapsed().as_millis());

    Ok(CampaignReport {
        config_echo: ConfigEcho {
            sources: config.sources.clone(),
            checks: config.checks.clone(),
            seed: config.seed,
            format: config.format.name(),
            time_budget_secs: config.time_budget.map(|d| d.as_secs()),
        },
        records,
        summary,
    })
}

// ------------------------------------------------------------- rendering

pub fn render_report(report: &CampaignReport, format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        ReportFormat::Csv => render_csv(report),
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_row(out: &mut String, fields: &[String]) {
    let escaped: Vec<String> = fields.iter().map(|f| csv_field(f)).collect();
    out.push_str(&escaped.join(","));
    out.push('\n');
}

/// One row per (graph, check): wide enough for spreadsheet triage, while
/// JSON stays the canonical format.
fn render_csv(report: &CampaignReport) -> String {
    let mut out = String::new();
    let header = [
        "index",
        "source",
        "graph6",
        "n",
        "min_degree",
        "kappa",
        "circumference",
        "cbar",
        "pbar",
        "check",
        "applicable",
        "value",
        "holds",
        "slack",
        "detail",
    ];
    out.push_str(&header.join(","));
    out.push('\n');
    let blank = String::new();
    for rec in &report.records {
        let show = |v: Option<String>| v.unwrap_or_default();
        let base = [
            rec.index.to_string(),
            rec.source.clone(),
            show(rec.graph6.clone()),
            show(rec.profile.as_ref().map(|p| p.n.to_string())),
            show(rec.profile.as_ref().map(|p| p.min_degree.to_string())),
            show(rec.profile.as_ref().map(|p| p.kappa.to_string())),
            show(rec.profile.as_ref().map(|p| p.circumference.to_string())),
            show(rec.profile.as_ref().and_then(|p| p.cbar).map(|v| v.to_string())),
            show(rec.profile.as_ref().map(|p| p.pbar.to_string())),
        ];
        if let Some(error) = &rec.error {
            let mut row = base.to_vec();
            row.extend([
                "error".to_string(),
                "false".to_string(),
                blank.clone(),
                blank.clone(),
                blank.clone(),
                error.clone(),
            ]);
            csv_row(&mut out, &row);
            continue;
        }
        for &check in &report.config_echo.checks {
            let mut row = base.to_vec();
            let skip = rec.skipped.iter().find(|s| s.check == check.name());
            let (applicable, value, holds, slack, detail);
            if let Some(note) = skip {
                (applicable, value, holds, slack) =
                    (false, blank.clone(), blank.clone(), blank.clone());
                detail = note.reason.clone();
            } else if let Some(bound) = check.bound() {
                let entry = rec.bounds.iter().find(|e| e.bound == bound);
                match entry {
                    Some(e) => {
                        applicable = e.applicable;
                        value = e.value.as_ref().map(|v| v.to_string()).unwrap_or_default();
                        holds = e.holds.map(|h| h.to_string()).unwrap_or_default();
                        slack = e.slack.as_ref().map(|s| s.to_string()).unwrap_or_default();
                        detail = blank.clone();
                    }
                    None => {
                        (applicable, value, holds, slack) =
                            (false, blank.clone(), blank.clone(), blank.clone());
                        detail = blank.clone();
                    }
                }
            } else {
                match check {
                    CheckId::TheoremC => match &rec.theorem_c {
                        Some(r) => {
                            applicable = true;
                            value = format!("{:?}", r.outcome).to_lowercase();
                            holds = (r.outcome != TheoremCOutcome::Neither).to_string();
                            slack = blank.clone();
                            detail = format!("{} longest cycle(s)", r.longest_cycle_count);
                        }
                        None => {
                            (applicable, value, holds, slack) =
                                (false, blank.clone(), blank.clone(), blank.clone());
                            detail = "requires a 3-connected graph".to_string();
                        }
                    },
                    CheckId::Sharpness => {
                        applicable = rec.sharp.is_some();
                        value = rec.sharp.map(|s| s.to_string()).unwrap_or_default();
                        holds = blank.clone();
                        slack = blank.clone();
                        detail = blank.clone();
                    }
                    _ => match &rec.lemma_suite {
                        Some(suite) => {
                            applicable = suite.instances > 0;
                            value = suite.total_violations.to_string();
                            holds = (suite.total_violations == 0).to_string();
                            slack = blank.clone();
                            detail = suite.skipped.clone().unwrap_or_default();
                        }
                        None => {
                            (applicable, value, holds, slack) =
                                (false, blank.clone(), blank.clone(), blank.clone());
                            detail = blank.clone();
                        }
                    },
                }
            }
            row.extend([check.name().to_string(), applicable.to_string(), value, holds, slack, detail]);
            csv_row(&mut out, &row);
        }
    }
    out
}

// ------------------------------------------------------- counterexamples

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureFinding {
    pub index: usize,
    pub source: String,
    pub graph6: String,
    /// Full profile, including the longest-cycle witness.
    pub profile: InvariantProfile,
    pub bound: Rat,
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchOutcome {
    /// Graphs fully profiled and tested.
    pub instances: usize,
    /// Graphs whose budget ran out before the profile finished.
    pub skipped: usize,
    pub errors: Vec<String>,
    /// Failures with κ ≥ 2, where the conjecture genuinely lives.
    /// Emptiness is the expected (but never asserted) outcome.
    pub findings: Vec<ConjectureFinding>,
    /// Failures with κ ≤ 1. The proved bound with the same structure
    /// already fails in this regime, so these say nothing new about the
    /// conjecture; they are kept for completeness.
    pub degenerate: Vec<ConjectureFinding>,
}

/// Sweeps the sources for graphs whose measured circumference falls below
/// the conjectured bound. An empty findings list is the expected outcome.
pub fn search_counterexamples(config: &CampaignConfig) -> Result<SearchOutcome, CampaignError> {
    search_counterexamples_with(config, crate::bounds::bound_conjecture1)
}

/// Same sweep with the bound formula supplied by the caller, taking
/// (p̄, κ, δ). Feeding a corrupted formula proves the detector is live.
pub fn search_counterexamples_with<F>(
    config: &CampaignConfig,
    bound: F,
) -> Result<SearchOutcome, CampaignError>
where
    F: Fn(i64, i64, i64) -> Option<Rat> + Sync,
{
    config.validate()?;
    let items = expand_sources(config);
    let pool = build_pool(config.jobs)?;
    enum Probe {
        Errored(String),
        Skipped,
        Clean,
        Finding(ConjectureFinding),
    }
    let probes: Vec<Probe> = pool.install(|| {
        items
            .par_iter()
            .enumerate()
            .map(|(index, item)| {
                let g = match &item.payload {
                    Ok(g) => g,
                    Err(reason) => {
                        return Probe::Errored(format!("{}: {}", item.source, reason))
                    }
                };
                let deadline = config.time_budget.map(|b| Instant::now() + b);
                let profile = profile_budgeted(g, deadline);
                if !profile.complete {
                    return Probe::Skipped;
                }
                let value = bound(profile.pbar, profile.kappa as i64, profile.min_degree as i64);
                match value {
                    Some(b) if Rat::from_int(profile.circumference as i64) < b => {
                        Probe::Finding(ConjectureFinding {
                            index,
                            source: item.source.clone(),
                            graph6: encode_graph6(g),
                            profile,
                            bound: b,
                        })
                    }
                    _ => Probe::Clean,
                }
            })
            .collect()
    });

    let mut outcome = SearchOutcome {
        instances: 0,
        skipped: 0,
        errors: Vec::new(),
        findings: Vec::new(),
        degenerate: Vec::new(),
    };
    for probe in probes {
        match probe {
            Probe::Errored(msg) => outcome.errors.push(msg),
            Probe::Skipped => outcome.skipped += 1,
            Probe::Clean => outcome.instances += 1,
            Probe::Finding(f) => {
                outcome.instances += 1;
                if f.profile.kappa >= 2 {
                    outcome.findings.push(f);
                } else {
                    outcome.degenerate.push(f);
                }
            }
        }
    }
    Ok(outcome)
}

// ------------------------------------------------------------- solve one

#[derive(Clone, Debug, Serialize)]
pub struct SolveOutput {
    pub source: String,
    pub graph6: String,
    pub profile: InvariantProfile,
    pub bounds: Vec<BoundEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem_c: Option<TheoremCReport>,
}

/// Profiles a single graph and evaluates the full bound table.
pub fn solve_one(
    source: &str,
    seed: u64,
    time_budget: Option<Duration>,
) -> Result<SolveOutput, CampaignError> {
    let graphs = resolve_source(source, seed).map_err(|reason| CampaignError::BadSource {
        spec: source.to_string(),
        reason,
    })?;
    if graphs.len() != 1 {
        return Err(CampaignError::NotSingle {
            spec: source.to_string(),
            got: graphs.len(),
        });
    }
    let g = &graphs[0];
    let deadline = time_budget.map(|b| Instant::now() + b);
    let profile = profile_budgeted(g, deadline);
    let bounds = evaluate_all(&profile);
    let theorem_c = if profile.complete && profile.kappa >= 3 {
        match check_theorem_c(g, &profile) {
            Ok(r) => Some(r),
            Err(BoundError::Invariant(_)) => None,
            Err(BoundError::NotThreeConnected { .. }) => unreachable!("guarded by kappa"),
        }
    } else {
        None
    };
    Ok(SolveOutput {
        source: source.to_string(),
        graph6: encode_graph6(g),
        profile,
        bounds,
        theorem_c,
    })
}

/// Human-readable table for the single-graph mode.
pub fn render_solve_text(out: &SolveOutput) -> String {
    let p = &out.profile;
    let mut s = String::new();
    let _ = writeln!(s, "source: {}", out.source);
    let _ = writeln!(s, "graph6: {}", out.graph6);
    let _ = writeln!(
        s,
        "n = {}   min_degree = {}   kappa = {}   circumference = {}{}",
        p.n,
        p.min_degree,
        p.kappa,
        p.circumference,
        if p.complete { "" } else { "   (incomplete: budget ran out)" }
    );
    let cbar = p.cbar.map(|v| v.to_string()).unwrap_or_else(|| "-".to_string());
    let _ = writeln!(
        s,
        "cbar = {}   pbar = {}   residual_empty = {}",
        cbar, p.pbar, p.residual_empty
    );
    let _ = writeln!(s, "longest cycle: {:?}", p.cycle.vertices());
    let _ = writeln!(s, "bounds:");
    for e in &out.bounds {
        let tag = if !e.bound.proved() {
            "  (conjecture)"
        } else if !e.asserted {
            "  (reported only at kappa <= 1)"
        } else {
            ""
        };
        if !e.applicable {
            let _ = writeln!(s, "  {:<12} inapplicable{tag}", e.bound.name());
            continue;
        }
        let value = e.value.as_ref().expect("applicable row");
        let slack = e.slack.as_ref().expect("applicable row");
        let verdict = if e.holds == Some(true) { "holds" } else { "FAILS" };
        let _ = writeln!(
            s,
            "  {:<12} {:<8} {}  slack {}{tag}",
            e.bound.name(),
            value.to_string(),
            verdict,
            slack
        );
    }
    if let Some(r) = &out.theorem_c {
        let label = match r.outcome {
            TheoremCOutcome::Both => "both disjuncts hold",
            TheoremCOutcome::FirstOnly => "first disjunct only (c >= 3*min_degree - 3)",
            TheoremCOutcome::SecondOnly => "second disjunct only (all longest cycles dominate)",
            TheoremCOutcome::Neither => "NEITHER DISJUNCT HOLDS",
        };
        let _ = writeln!(
            s,
            "dichotomy: {} over {} longest cycle(s)",
            label, r.longest_cycle_count
        );
    }
    s
}
