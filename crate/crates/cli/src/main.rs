mod cas;
mod checks;
mod json;
mod render;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use coxpres_core::collineation::Params;
use coxpres_core::groebner::DEFAULT_PAIR_BUDGET;

use crate::checks::{CheckId, Outcome};

#[derive(Parser, Debug)]
#[command(name = "coxpres", version, about = "Cox rings of spaces of complete rank-two collineations X(2, c, d)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print generators, relations and grading of the Cox ring
    Present(Common),
    /// Run the verification checks
    Verify(VerifyArgs),
    /// Print the effective and movable cones
    Cones(Common),
    /// Print the GIT fan of the weight matrix with witness points
    Gitfan(Common),
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    c: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Gröbner pair budget
    #[arg(long, env = "COXPRES_BUDGET", default_value_t = DEFAULT_PAIR_BUDGET, value_parser = parse_budget)]
    budget: usize,
    /// Write output to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    common: Common,
    /// Comma-separated check ids (default: all)
    #[arg(long, value_delimiter = ',', value_enum)]
    checks: Option<Vec<CheckId>>,
    /// Treat checks skipped for budget reasons as failures
    #[arg(long)]
    strict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    CasExport,
}

enum Failure {
    Usage(anyhow::Error),
    Checks,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn parse_budget(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("budget must be positive".into()),
        Ok(b) => Ok(b),
        Err(e) => Err(e.to_string()),
    }
}

fn params(common: &Common) -> anyhow::Result<Params> {
    Ok(Params::new(common.c, common.d)?)
}

fn emit(common: &Common, text: &str) -> anyhow::Result<()> {
    match &common.out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Present(common) => {
            let p = params(&common)?;
            let text = match common.format {
                Format::Text => render::presentation_text(&p)?,
                Format::Json => json::to_string(&json::PresentationJson::build(&p)?)?,
                Format::CasExport => cas::singular_script(&p, common.budget)?,
            };
            emit(&common, &text)?;
        }
        Command::Cones(common) => {
            let p = params(&common)?;
            if !p.is_general() {
                return Err(Failure::Usage(anyhow::anyhow!(
                    "the effective/movable cone description holds only for c, d > 2 (got c = {}, d = {})",
                    p.c,
                    p.d
                )));
            }
            let cones = json::ConesJson::build(&p)?;
            let text = match common.format {
                Format::Json => json::to_string(&cones)?,
                _ => render::cones_text(&cones),
            };
            emit(&common, &text)?;
        }
        Command::Gitfan(common) => {
            let p = params(&common)?;
            let fan = json::GitFanJson::build(&p)?;
            let text = match common.format {
                Format::Json => json::to_string(&fan)?,
                _ => render::gitfan_text(&fan),
            };
            emit(&common, &text)?;
        }
        Command::Verify(args) => {
            let p = params(&args.common)?;
            let report = checks::run(&p, args.checks.as_deref(), args.common.budget);
            let text = match args.common.format {
                Format::Json => json::to_string(&report)?,
                _ => render::report_text(&report),
            };
            emit(&args.common, &text)?;
            let failed = report.records.iter().any(|r| match r.status {
                Outcome::Fail => true,
                Outcome::Skipped => args.strict && r.budget_exceeded,
                Outcome::Pass => false,
            });
            if failed {
                return Err(Failure::Checks);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
