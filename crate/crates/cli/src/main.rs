//! `garside`: command-line access to presentations, reversing, Yang–Baxter
//! solutions and brace checks.
//!
//! Exit codes: 0 success, 1 a check or property failed, 2 bad input,
//! 3 a length or step budget was exceeded.

mod commands;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;
use thiserror::Error;

use garside::DEFAULT_STEP_BUDGET;

#[derive(Debug, Parser)]
#[command(name = "garside", version, about = "Word reversing, lcms and braces for Garside monoids")]
struct Cli {
    #[command(flatten)]
    config: Config,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Config {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Word length bound: oracle words for `check`, the swept universe for `brace`.
    #[arg(long = "max-len", default_value_t = 4, value_parser = positive, global = true)]
    pub max_len: usize,
    /// Reversing step budget.
    #[arg(long, env = "GARSIDE_STEPS", default_value_t = DEFAULT_STEP_BUDGET, value_parser = positive, global = true)]
    pub steps: usize,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a presentation: shape, complement table and cube condition.
    Check { presentation: PathBuf },
    /// Least common multiple of two positive words, computed by reversing.
    Lcm {
        presentation: PathBuf,
        a: String,
        b: String,
        /// Use right divisibility (common left multiples) instead.
        #[arg(long)]
        right: bool,
        /// Write the reversing diagram as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Reverse a signed word such as `x1^-1 x2`.
    Reverse {
        presentation: PathBuf,
        word: String,
        /// Left reversing (`x y^-1` patterns) instead of right reversing.
        #[arg(long)]
        left: bool,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Inspect a set-theoretic Yang–Baxter solution given as JSON.
    Solution(commands::SolutionArgs),
    /// Check M-brace and partial brace properties of a presentation.
    Brace(commands::BraceArgs),
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be at least 1".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Failed(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Input(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

/// What a command produced; `passed == false` maps to exit code 1.
pub struct Report {
    pub text: String,
    pub json: Value,
    pub passed: bool,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let c = &cli.config;
    match cli.command {
        Command::Check { presentation } => commands::check(c, &presentation),
        Command::Lcm {
            presentation,
            a,
            b,
            right,
            dot,
        } => commands::lcm(c, &presentation, &a, &b, right, dot.as_deref()),
        Command::Reverse {
            presentation,
            word,
            left,
            dot,
        } => commands::reverse(c, &presentation, &word, left, dot.as_deref()),
        Command::Solution(args) => commands::solution(c, &args),
        Command::Brace(args) => commands::brace(c, &args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = cli.config.clone();
    match run(cli) {
        Ok(report) => {
            let mut body = match config.format {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("json values serialize"),
            };
            if !body.ends_with('\n') {
                body.push('\n');
            }
            match &config.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, body) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{body}"),
            }
            ExitCode::from(if report.passed { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
