use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use flexionlab::report::{listing_json, listing_text, render_text};
use flexionlab::Config;

#[derive(Parser)]
#[command(name = "flexionlab", version, about = "Exact random-point verification of flexion-calculus identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run identity suites and report.
    Verify {
        /// Suite name, or `all`; repeat or comma-separate for several.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<String>,
        #[arg(long, default_value = "polar")]
        unit: String,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
        /// Per-suite length override, e.g. `dilator=3`.
        #[arg(long, value_parser = parse_suite_length)]
        suite_length: Vec<(String, usize)>,
        /// Sample words per length (per split shape for shuffle checks).
        #[arg(long, default_value_t = 4)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads; defaults to all available.
        #[arg(long)]
        jobs: Option<usize>,
        /// Redraws of a sample word that hits a pole.
        #[arg(long, default_value_t = 8)]
        retry_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Include wall times (reports are then no longer reproducible byte for byte).
        #[arg(long)]
        timings: bool,
    },
    /// List registered suites.
    List {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        report: Format,
    },
}

fn parse_suite_length(s: &str) -> Result<(String, usize), String> {
    let (name, len) = s.split_once('=').ok_or("expected NAME=LENGTH")?;
    let len = len.parse().map_err(|e| format!("bad length `{len}`: {e}"))?;
    Ok((name.to_string(), len))
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::List { report } => {
            match report {
                Format::Text => print!("{}", listing_text()),
                Format::Json => println!("{}", listing_json()),
            }
            ExitCode::SUCCESS
        }
        Command::Verify {
            suite,
            unit,
            max_length,
            suite_length,
            samples,
            seed,
            jobs,
            retry_cap,
            report,
            out,
            timings,
        } => {
            let config = Config {
                unit,
                suites: suite,
                max_length,
                samples,
                seed,
                jobs: jobs.unwrap_or(0),
                retry_cap,
                suite_lengths: suite_length.into_iter().collect::<BTreeMap<_, _>>(),
                timings,
            };
            let result = match flexionlab::run(&config) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let text = match report {
                Format::Text => render_text(&result),
                Format::Json => result.to_json() + "\n",
            };
            match out {
                Some(path) => {
                    if let Err(e) = std::fs::write(&path, text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                    if report == Format::Json {
                        eprint!("{}", summary(&result));
                    }
                }
                None => print!("{text}"),
            }
            if result.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
    }
}

fn summary(r: &flexionlab::RunReport) -> String {
    let mut s = String::new();
    for suite in &r.suites {
        s += &format!(
            "{} {} {}/{}\n",
            if suite.passed { "PASS" } else { "FAIL" },
            suite.suite,
            suite.totals.identities_passed,
            suite.totals.identities
        );
    }
    s
}
