//! `rnpoly`: compute `R_n`, enumerate non-separable degree sequences, build
//! realizations and run the verification suite.
//!
//! Exit codes: 0 ok, 1 failed check or internal fault, 2 usage error,
//! 3 inadmissible degree sequence.

mod render;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rnpoly::poly::RSequence;
use rnpoly::verify::{run_suite_with, CheckKind, Verifier};
use rnpoly::{partitions, poly, DegreeSequence, Error};

#[derive(Parser, Debug)]
#[command(
    name = "rnpoly",
    version,
    about = "Entropy-flow polynomials R_n and non-separable degree sequences"
)]
struct Cli {
    /// Output format; `dot` is only valid for `realize`.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print R_n (or X_n^2 + R_n with --tilde).
    Compute {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        tilde: bool,
    },
    /// List or count DNSG(n).
    Dnsg(DnsgArgs),
    /// Print the partition number p(k).
    Partitions {
        #[arg(long)]
        k: i64,
    },
    /// Print d_ns for an even degree sum.
    Dns {
        #[arg(long)]
        sum: u64,
    },
    /// Build a certified non-separable realization of a degree sequence.
    Realize {
        /// Comma-separated degrees, e.g. `3,3,2`.
        #[arg(long)]
        seq: String,
    },
    /// Run the verification suite for n = 3..=max-n.
    Verify {
        #[arg(long)]
        max_n: u32,
        /// Comma-separated subset of support,count,recursion,coeff,realize,strict,witness.
        #[arg(long, value_delimiter = ',', value_parser = parse_check)]
        checks: Vec<CheckKind>,
        /// Refuse R_n when p(2n), a bound on its term count, exceeds this.
        #[arg(long, default_value_t = poly::DEFAULT_TERM_BUDGET)]
        term_budget: u64,
    },
}

#[derive(Args, Debug)]
struct DnsgArgs {
    #[arg(long)]
    n: u32,
    /// Print the sequences (default).
    #[arg(long, conflicts_with = "count")]
    list: bool,
    /// Print |DNSG(n)| and d_ns(2n).
    #[arg(long)]
    count: bool,
}

fn parse_check(s: &str) -> Result<CheckKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure carrying its exit code.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Inadmissible(String),
    Internal(String),
    /// output was produced but some check failed
    ChecksFailed,
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Inadmissible(_) => 3,
            Failure::Internal(_) | Failure::ChecksFailed => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::Parse(_) => Failure::Usage(e.to_string()),
            Error::Inadmissible { .. } => Failure::Inadmissible(e.to_string()),
            Error::ArithmeticFault(_) | Error::ResourceExhausted(_) => {
                Failure::Internal(e.to_string())
            }
        }
    }
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Realize { .. }) {
        return Err(Failure::Usage(
            "--format dot is only valid for realize".into(),
        ));
    }
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Compute { n, tilde } => {
            let p = if *tilde {
                poly::compute_r_tilde(*n)?
            } else {
                poly::compute_r(*n)?
            };
            render::polynomial(&p, fmt)
        }
        Command::Dnsg(args) => {
            let seqs = partitions::enumerate_dnsg(args.n)?;
            if args.count {
                let dns = partitions::dns_count(2 * u64::from(args.n))?;
                render::dnsg_count(args.n, seqs.len(), &dns, fmt)
            } else {
                render::sequences(&seqs, fmt)
            }
        }
        Command::Partitions { k } => {
            let p = partitions::partition_count(*k)?;
            render::scalar("k", &k.to_string(), "p", &p.to_string(), fmt)
        }
        Command::Dns { sum } => {
            let d = partitions::dns_count(*sum)?;
            render::scalar(
                "degree_sum",
                &sum.to_string(),
                "dns_count",
                &d.to_string(),
                fmt,
            )
        }
        Command::Realize { seq } => {
            let d: DegreeSequence = seq.parse()?;
            let r = rnpoly::graph::realize_nonseparable(&d)?;
            if !r.certified {
                return Err(Failure::Internal(format!(
                    "realization of {d} failed re-verification"
                )));
            }
            render::graph(&d, &r.graph, fmt)
        }
        Command::Verify {
            max_n,
            checks,
            term_budget,
        } => {
            let checks = if checks.is_empty() {
                CheckKind::DEFAULT.to_vec()
            } else {
                checks.clone()
            };
            let reports = run_suite_with(
                Verifier::with_sequence(RSequence::with_term_budget(*term_budget)),
                *max_n,
                &checks,
            )?;
            let ok = reports.iter().all(|r| r.passed());
            return Ok((render::reports(&reports, fmt), ok));
        }
    };
    Ok((out, true))
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", path.display()))),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| Failure::Internal(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let result = run(&cli).and_then(|(text, ok)| {
        emit(&cli, &text)?;
        if ok {
            Ok(())
        } else {
            Err(Failure::ChecksFailed)
        }
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Usage(m) | Failure::Inadmissible(m) | Failure::Internal(m) => {
                    eprintln!("error: {m}")
                }
                Failure::ChecksFailed => eprintln!("error: verification failed"),
            }
            ExitCode::from(f.code())
        }
    }
}
