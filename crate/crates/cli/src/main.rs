//! Batch suite runner for the exact supermultiplet verification engine.
//!
//! Exit codes: 0 all checks pass, 1 at least one check failed, 2 invalid
//! configuration or usage.

use clap::{Args, Parser, Subcommand, ValueEnum};
use pform_core::suite::{self, RunReport, SuiteId, SuiteSpec};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "pform",
    about = "Exact verification suites for two-/one-form supermultiplet algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and write its report.
    Verify(VerifyArgs),
    /// List suites and the checks they contain.
    List,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run.
    #[arg(long, value_name = "ID")]
    suite: String,

    /// Symplectic rank for the rigid two-form model.
    #[arg(long = "N", default_value_t = 1)]
    n: u8,

    /// Jet truncation (maximum derivative order).
    #[arg(long = "jet-order", default_value_t = 4)]
    jet_order: usize,

    /// Maximum depth of gauge-charge towers.
    #[arg(long = "tower-depth", default_value_t = 4)]
    tower_depth: usize,

    /// Worker pool size.
    #[arg(long, default_value_t = 1)]
    jobs: usize,

    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Report output path (stdout when omitted).
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

fn markdown_from(report: &RunReport) -> String {
    // Markdown is derived from the JSON body; the JSON stays authoritative.
    let mut out = String::new();
    out.push_str(&format!(
        "# Verification report: {}\n\n",
        report.config.suite.id()
    ));
    out.push_str(&format!(
        "- checks: {} passed / {} total{}\n",
        report.passed,
        report.total_checks,
        if report.failed > 0 {
            format!(" ({} FAILED)", report.failed)
        } else {
            String::new()
        }
    ));
    out.push_str(&format!(
        "- representation fingerprint: `{}`\n",
        report.representation_fingerprint
    ));
    out.push_str(&format!("- orientation: {}\n\n", report.orientation_note));
    out.push_str("| check | status | summary |\n|---|---|---|\n");
    for e in &report.entries {
        let status = if e.pass {
            "pass"
        } else if e.informational {
            "info"
        } else {
            "FAIL"
        };
        out.push_str(&format!("| {} | {} | {} |\n", e.id, status, e.summary));
    }
    out
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for (suite, checks) in suite::list_suites() {
                println!("{suite}");
                for c in checks {
                    println!("  {c}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let suite_id = SuiteId::from_id(&args.suite)
                .map_err(|e| format!("configuration error: {e}"))?;
            let spec = SuiteSpec {
                suite: suite_id,
                n: args.n,
                jet_order: args.jet_order,
                tower_depth: args.tower_depth,
                jobs: args.jobs,
            };
            spec.validate()
                .map_err(|e| format!("configuration error: {e}"))?;
            let report = suite::run_suite(&spec)
                .map_err(|e| format!("configuration error: {e}"))?;
            let rendered = match args.format {
                Format::Json => {
                    serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
                }
                Format::Markdown => markdown_from(&report),
            };
            match &args.out {
                Some(path) => {
                    let mut f = std::fs::File::create(path)
                        .map_err(|e| format!("i/o error writing {}: {e}", path.display()))?;
                    f.write_all(rendered.as_bytes())
                        .map_err(|e| format!("i/o error writing {}: {e}", path.display()))?;
                    eprintln!(
                        "{}: {} / {} checks passed",
                        report.config.suite.id(),
                        report.passed,
                        report.total_checks
                    );
                }
                None => {
                    print!("{rendered}");
                }
            }
            if report.all_passed() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}
