use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use smzv_cli::{cmd_conjecture, cmd_eval, cmd_report, cmd_verify, render, Config, Format, Method, Output};

/// Schur multiple zeta values of checkerboard style.
#[derive(Parser, Debug)]
#[command(name = "smzv", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Args, Debug)]
struct Opts {
    /// Print JSON
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Print CSV
    #[arg(long, global = true)]
    csv: bool,
    /// Working precision in decimal digits
    #[arg(long, global = true, env = "SMZV_PRECISION", default_value_t = smzv_cli::DEFAULT_DIGITS)]
    digits: u32,
    /// Exact cutoff M (all variables below M)
    #[arg(long, global = true, env = "SMZV_CUTOFF")]
    cutoff: Option<u64>,
    /// Middle numeric cutoff; sums are also taken at M/2 and 2M
    #[arg(long, global = true, default_value_t = smzv_cli::DEFAULT_NUMERIC_CUTOFF)]
    numeric_cutoff: u64,
    /// Write the output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a shape expression
    Eval {
        expr: String,
        #[arg(long, value_enum, default_value_t = Method::Numeric)]
        method: Method,
    },
    /// Run a named identity suite
    Verify {
        #[arg(required_unless_present = "suite_flag")]
        suite: Option<String>,
        #[arg(long = "suite", conflicts_with = "suite")]
        suite_flag: Option<String>,
    },
    /// Check one of the gluing conjectures W8, W16, W24, W32
    Conjecture {
        case: String,
        /// Relative tolerance for Pass (default 1e-6 for W8, 1e-2 otherwise)
        #[arg(long)]
        rel_tol: Option<f64>,
    },
    /// Table of the worked example values
    Report {
        /// Run every suite as well
        #[arg(long)]
        all: bool,
    },
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let o = &cli.opts;
    let cfg = Config {
        digits: o.digits,
        cutoff: o.cutoff,
        numeric_cutoff: o.numeric_cutoff,
    };
    let format = if o.json {
        Format::Json
    } else if o.csv {
        Format::Csv
    } else {
        Format::Text
    };
    let out = match cli.command {
        Command::Eval { expr, method } => Output::Eval(cmd_eval(&expr, method, &cfg)?),
        Command::Verify { suite, suite_flag } => {
            let name = suite.or(suite_flag).unwrap_or_default();
            Output::Verify(cmd_verify(&name, &cfg)?)
        }
        Command::Conjecture { case, rel_tol } => Output::Conjecture(cmd_conjecture(&case, rel_tol, &cfg)?),
        Command::Report { all } => Output::Report(cmd_report(all, &cfg)?),
    };
    let text = render(&out, format)?;
    match &o.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(out.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
