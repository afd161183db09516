//! `negmom`: bounded and negative moments, path counts, and identity
//! verification grids from the command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage error or
//! ill-defined input.

mod commands;
mod report;
mod spec_expr;

use std::ops::RangeInclusive;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::report::Format;
use crate::spec_expr::SpecExpression;

/// Inclusive range `a..b`, or a single value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Span(pub RangeInclusive<u32>);

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| format!("{t:?} is not a nonnegative integer"));
        match s.split_once("..") {
            Some((a, b)) => {
                let (a, b) = (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?);
                if a > b {
                    return Err(format!("empty range {s}"));
                }
                Ok(Span(a..=b))
            }
            None => {
                let v = num(s)?;
                Ok(Span(v..=v))
            }
        }
    }
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.start() == self.0.end() {
            write!(f, "{}", self.0.start())
        } else {
            write!(f, "{}..{}", self.0.start(), self.0.end())
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "negmom",
    version,
    about = "Negative moments of orthogonal polynomials and their reciprocity identities"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Weights {
    /// `b` weights: zero, one, neg-one, symbolic, custom:[..], or a whole
    /// spec (b-special:<ell>, v-inverse, dyck-v).
    #[arg(long = "b", value_name = "EXPR")]
    pub b: Option<SpecExpression>,
    /// `λ` weights: zero, one, neg-one, symbolic, custom:[..], or bsq for
    /// `λ_i = b_{i-1} b_i`.
    #[arg(long = "lambda", value_name = "EXPR")]
    pub lambda: Option<SpecExpression>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of `μ^{≤k}_{n,r,s}`, or `μ^{≤k}_{-n,r,s}` with --negative.
    Moment {
        #[arg(long, default_value = "0")]
        n: Span,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        r: u32,
        #[arg(long, default_value_t = 0)]
        s: u32,
        #[command(flatten)]
        weights: Weights,
        #[arg(long)]
        negative: bool,
    },
    /// Run an identity over a parameter grid, one certificate per tuple.
    Verify {
        /// Identity name; `negmom list` prints them all.
        identity: String,
        #[arg(long)]
        n: Option<Span>,
        #[arg(long)]
        k: Option<Span>,
        #[arg(long)]
        m: Option<Span>,
        #[arg(long)]
        r: Option<Span>,
        #[arg(long)]
        s: Option<Span>,
        /// Plane-partition mode.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        #[command(flatten)]
        weights: Weights,
    },
    /// Counts, listings or weights of the combinatorial families.
    Sequence {
        #[arg(value_enum)]
        family: Family,
        /// Length (Schröder: number of unit steps); for rpp the staircase offset.
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, default_value_t = 2)]
        ell: u32,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, value_enum, default_value = "up")]
        pattern: Pattern,
        #[arg(long, value_enum, default_value = "plain")]
        variant: Variant,
        #[arg(long, value_enum, default_value = "count")]
        emit: Emit,
        #[command(flatten)]
        weights: Weights,
    },
    /// Known identity names with a one-line description.
    List,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    SymbolicVa,
    Q,
    QUnbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Alt,
    Pv,
    Schroeder,
    Motzkin,
    Rpp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Pattern {
    Up,
    Down,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Variant {
    Plain,
    Modified,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Count,
    List,
    Weights,
}

/// Usage errors and ill-defined input; exit code 2.
pub enum Failure {
    Usage(String),
}

fn init_pool() -> Result<(), Failure> {
    if let Ok(v) = std::env::var("NEGMOM_THREADS") {
        let n: usize = v.parse().map_err(|_| Failure::Usage(format!("NEGMOM_THREADS={v:?} is not a count")))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global().map_err(|e| Failure::Usage(e.to_string()))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = std::time::Instant::now();
    let result = init_pool().and_then(|()| match cli.command {
        Command::Moment { n, k, r, s, weights, negative } => commands::moment(&n, k, r, s, &weights, negative),
        Command::Verify { identity, n, k, m, r, s, mode, weights } => {
            commands::verify(&identity, commands::GridArgs { n, k, m, r, s, mode }, &weights)
        }
        Command::Sequence { family, n, k, m, ell, r, s, pattern, variant, emit, weights } => {
            commands::sequence(commands::SequenceArgs { family, n, k, m, ell, r, s, pattern, variant, emit }, &weights)
        }
        Command::List => Ok((commands::list(), true)),
    });
    match result {
        Ok((report, ok)) => {
            report.emit(cli.format, start.elapsed());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
