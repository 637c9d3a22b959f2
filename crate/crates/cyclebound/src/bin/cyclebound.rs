/*!
Campaign runner for the circumference bounds library.

Three modes: `solve` profiles one graph and prints the bound table,
`verify` runs a batch campaign and emits a JSON or CSV report, and
`generate` instantiates a generator spec into a graph6 file.

Exit codes: 0 = ran clean, 1 = an asserted statement failed somewhere
(an implementation-bug signal), 2 = configuration error. Reported-only
findings never affect the exit code.
*/

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};

use cyclebound::bounds::{violations, TheoremCOutcome};
use cyclebound::campaign::{
    render_report, render_solve_text, run_campaign, solve_one, CampaignConfig, CampaignError,
    CheckId, ReportFormat,
};
use cyclebound::gen::GeneratorSpec;
use cyclebound::graph6::encode_graph6_file;

#[derive(Parser)]
#[command(name = "cyclebound", version, about = "Circumference bound verification campaigns")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Profile a single graph and print its bound table.
    Solve {
        /// Generator spec, graph6 file, or bare graph6 record.
        source: String,
        /// Seed for gnp: sources that omit their own.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Per-graph wall-clock budget in seconds (0 = none).
        #[arg(long, default_value_t = 10)]
        time_budget: u64,
    },
    /// Run a verification campaign over many graphs.
    Verify {
        /// Graph sources (generator specs, graph6 files, bare records).
        /// Space-separated or repeated; no comma splitting, since
        /// generator specs contain commas.
        #[arg(long, required = true, num_args = 1..)]
        sources: Vec<String>,
        /// Checks to run: theorem1, dirac, dirac2, theoremC, theoremD,
        /// theoremE, theoremF, conjecture1, sharpness, lemma_suite.
        #[arg(long, required = true, num_args = 1.., value_delimiter = ',')]
        checks: Vec<String>,
        /// Worker threads (never changes report bytes).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Seed for gnp: sources that omit their own.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report format: json or csv.
        #[arg(long, default_value = "json")]
        format: String,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Per-graph wall-clock budget in seconds (0 = none).
        #[arg(long, default_value_t = 10)]
        time_budget: u64,
        /// Leave timing fields out of the report (byte-comparison mode).
        #[arg(long)]
        omit_timing: bool,
    },
    /// Instantiate a generator spec and write the graphs as graph6.
    Generate {
        /// Generator spec, e.g. kappa_family:k=2,d=3 or enum:n=6.
        spec: String,
        /// How many graphs to draw (gnp: consecutive seeds).
        #[arg(long)]
        count: Option<usize>,
        /// Destination graph6 file.
        #[arg(long)]
        output: PathBuf,
    },
}

fn budget(secs: u64) -> Option<Duration> {
    (secs > 0).then(|| Duration::from_secs(secs))
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.cmd {
        Cmd::Solve { source, seed, time_budget } => {
            let out = solve_one(&source, seed, budget(time_budget))?;
            print!("{}", render_solve_text(&out));
            let dichotomy_broken = out
                .theorem_c
                .as_ref()
                .is_some_and(|r| r.outcome == TheoremCOutcome::Neither);
            let clean = violations(&out.bounds).is_empty() && !dichotomy_broken;
            Ok(if clean { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Verify {
            sources,
            checks,
            jobs,
            seed,
            format,
            output,
            time_budget,
            omit_timing,
        } => {
            let checks = checks
                .iter()
                .map(|c| CheckId::parse(c))
                .collect::<Result<Vec<_>, _>>()?;
            let mut config = CampaignConfig::new(sources, checks);
            config.jobs = jobs;
            config.seed = seed;
            config.format = ReportFormat::parse(&format)?;
            config.output = output;
            config.time_budget = budget(time_budget);
            config.omit_timing = omit_timing;

            let report = run_campaign(&config)?;
            let rendered = render_report(&report, config.format);
            match &config.output {
                Some(path) => fs::write(path, rendered).map_err(CampaignError::Io)?,
                None => print!("{rendered}"),
            }
            let s = &report.summary;
            eprintln!(
                "{} graphs, {} errors, {} skips, {} violations, {} records with findings",
                s.graphs,
                s.errors,
                s.skips,
                s.violations.len(),
                s.findings.len()
            );
            Ok(if report.has_violations() { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Cmd::Generate { spec, count, output } => {
            let parsed = GeneratorSpec::parse(&spec)?;
            let graphs = parsed.instantiate(count)?;
            fs::write(&output, encode_graph6_file(&graphs))?;
            eprintln!("wrote {} graph(s) to {}", graphs.len(), output.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
