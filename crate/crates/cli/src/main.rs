use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use stardecomp::BRUTE_FORCE_MAX_EDGES;
use stardecomp_cli::check::{check, render_json, render_text};
use stardecomp_cli::corpus::Source;
use stardecomp_cli::hunt::{run_hunt, write_hunt, HuntFilters};
use stardecomp_cli::oracle::{default_decider, oracle_compare, write_report};
use stardecomp_cli::survey::run_survey;
use stardecomp_cli::Options;

/// Exact double-star decompositions of cubic and regular graphs.
#[derive(Parser)]
#[command(name = "stardecomp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Vertex degree r of the regular graphs and of the star centers.
    #[arg(long, global = true, default_value_t = 3)]
    r: usize,
    /// Print or write certificates for positive answers.
    #[arg(long, global = true)]
    emit_cert: bool,
    /// Output file (stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Default seed for `random:` generator specs.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Decide a single graph6 string.
    Check {
        graph6: String,
        /// Emit a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Write one JSONL record per graph of a corpus.
    Survey {
        /// graph6 file or `random:n=<N>,count=<C>,seed=<S>`.
        source: String,
    },
    /// Report non-decomposable cubic graphs that pass the filters.
    Hunt {
        /// graph6 file or `random:n=<N>,count=<C>,seed=<S>`.
        source: String,
        #[arg(long)]
        triangle_free: bool,
        #[arg(long)]
        bipartite: bool,
        #[arg(long)]
        min_connectivity: Option<usize>,
        #[arg(long)]
        order_mod_8: bool,
        #[arg(long = "alpha-equals-3n8")]
        alpha_equals_3n8: bool,
    },
    /// Cross-check the decision procedure against edge backtracking.
    OracleCompare {
        source: String,
        #[arg(long, default_value_t = BRUTE_FORCE_MAX_EDGES)]
        max_edges: usize,
    },
}

fn output(path: &Option<PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            Box::new(BufWriter::new(File::create(p)?))
        }
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let opts = Options {
        r: cli.common.r,
        limits: Options::limits_from_env()?,
        emit_cert: cli.common.emit_cert,
        jobs: cli.common.jobs,
        seed: cli.common.seed,
    };
    if opts.r < 3 {
        anyhow::bail!("--r must be at least 3");
    }
    let mut out = output(&cli.common.out)?;
    let code = match cli.command {
        Command::Check { graph6, json } => match check(&graph6, &opts) {
            Ok(report) => {
                let text = if json {
                    render_json(&report, opts.emit_cert) + "\n"
                } else {
                    render_text(&report, opts.emit_cert)
                };
                out.write_all(text.as_bytes())?;
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Command::Survey { source } => {
            let lines = Source::parse(&source, opts.seed)?.load()?;
            let cert_dir = cli.common.out.as_ref().and_then(|p| p.parent()).map(|p| {
                if p.as_os_str().is_empty() {
                    PathBuf::from(".")
                } else {
                    p.to_path_buf()
                }
            });
            let summary = run_survey(&lines, &opts, cert_dir, &mut out)?;
            eprintln!("survey: {summary}");
            0
        }
        Command::Hunt {
            source,
            triangle_free,
            bipartite,
            min_connectivity,
            order_mod_8,
            alpha_equals_3n8,
        } => {
            let lines = Source::parse(&source, opts.seed)?.load()?;
            let filters = HuntFilters {
                triangle_free,
                bipartite,
                min_connectivity,
                order_mod_8,
                alpha_equals_3n8,
            };
            let report = run_hunt(&lines, &filters, &opts, default_decider(opts.limits))?;
            write_hunt(&report, &mut out)?;
            report.exit_code()
        }
        Command::OracleCompare { source, max_edges } => {
            let lines = Source::parse(&source, opts.seed)?.load()?;
            let report = oracle_compare(&lines, max_edges, &opts, default_decider(opts.limits))?;
            write_report(&report, &mut out)?;
            report.exit_code()
        }
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
