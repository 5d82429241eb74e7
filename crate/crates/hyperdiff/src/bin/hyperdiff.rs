use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperdiff::cli::{exit_code, parse_binding_args, run_job, Command, Format, JobSpec};
use hyperdiff::Result;

#[derive(Parser)]
#[command(name = "hyperdiff", version, about = "Differential reduction, Mellin-Barnes closure and eps-expansion of pFq functions")]
struct Cli {
    /// Output format: jsonl or text.
    #[arg(long, global = true, env = "HYPERDIFF_FORMAT", default_value = "jsonl")]
    format: String,
    /// Also write the output to this file.
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Orders {
    /// Eps order K.
    #[arg(long, short = 'k', default_value_t = hyperdiff::cli::job::DEFAULT_ORDER)]
    order: usize,
    /// Series order N used for verification.
    #[arg(long, short = 'n', default_value_t = hyperdiff::cli::job::DEFAULT_TERMS)]
    terms: usize,
    /// Skip the automatic oracle check.
    #[arg(long)]
    no_verify: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduce a shifted function onto the theta-derivatives of a basis function.
    Reduce {
        expr: String,
        #[arg(long)]
        basis: Option<String>,
        #[command(flatten)]
        orders: Orders,
    },
    /// Size of the nontrivial basis of a function.
    CountBasis { expr: String },
    /// Close an MB integrand into hypergeometric functions; `--symbol value` binds symbols.
    Mb {
        expr: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        bindings: Vec<String>,
    },
    /// Number of master integrals of an MB integrand; `--symbol value` binds symbols.
    CountMasters {
        expr: String,
        #[arg(trailing_var_arg = true, allow_hyphen_values = true)]
        bindings: Vec<String>,
    },
    /// Expand a function in eps into polylogarithms.
    Expand {
        expr: String,
        #[command(flatten)]
        orders: Orders,
    },
    /// Rational-parametrization conditions for a function or a parameter family.
    CheckParametrization {
        expr: String,
        #[command(flatten)]
        orders: Orders,
    },
    /// Re-check a saved record file, or run the built-in suite.
    Verify {
        file: Option<String>,
        #[arg(long)]
        suite: bool,
        #[arg(long, short = 'n', default_value_t = hyperdiff::cli::job::DEFAULT_TERMS)]
        terms: usize,
    },
}

fn with_orders(mut j: JobSpec, o: Orders) -> JobSpec {
    j.order = o.order;
    j.terms = o.terms;
    j.verify = !o.no_verify;
    j
}

/// Global options written after trailing bindings.
fn split_globals(args: Vec<String>, cli_format: &mut String, out: &mut Option<std::path::PathBuf>) -> Vec<String> {
    let mut rest = Vec::new();
    let mut it = args.into_iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--format" => *cli_format = it.next().unwrap_or_default(),
            "--out" => *out = it.next().map(Into::into),
            _ if a.starts_with("--format=") => *cli_format = a["--format=".len()..].to_string(),
            _ if a.starts_with("--out=") => *out = Some(a["--out=".len()..].into()),
            _ => rest.push(a),
        }
    }
    rest
}

fn job(cmd: Cmd) -> Result<JobSpec> {
    Ok(match cmd {
        Cmd::Reduce { expr, basis, orders } => JobSpec { basis, ..with_orders(JobSpec::new(Command::Reduce, &expr), orders) },
        Cmd::CountBasis { expr } => JobSpec::new(Command::CountBasis, &expr),
        Cmd::Mb { expr, bindings } => JobSpec { bindings: parse_binding_args(&bindings)?, ..JobSpec::new(Command::Mb, &expr) },
        Cmd::CountMasters { expr, bindings } => JobSpec { bindings: parse_binding_args(&bindings)?, ..JobSpec::new(Command::CountMasters, &expr) },
        Cmd::Expand { expr, orders } => with_orders(JobSpec::new(Command::Expand, &expr), orders),
        Cmd::CheckParametrization { expr, orders } => with_orders(JobSpec::new(Command::CheckParametrization, &expr), orders),
        Cmd::Verify { file, suite, terms } => JobSpec { suite, terms, ..JobSpec::new(Command::Verify, file.as_deref().unwrap_or_default()) },
    })
}

fn run(mut cli: Cli) -> Result<i32> {
    if let Cmd::Mb { bindings, .. } | Cmd::CountMasters { bindings, .. } = &mut cli.command {
        *bindings = split_globals(std::mem::take(bindings), &mut cli.format, &mut cli.out);
    }
    let format: Format = cli.format.parse()?;
    let outcome = run_job(&job(cli.command)?)?;
    let text = outcome.render(format);
    print!("{text}");
    if let Some(path) = &cli.out {
        std::fs::write(path, &text).map_err(|e| hyperdiff::Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(outcome.exit_code)
}

fn main() -> ExitCode {
    let code = run(Cli::parse()).unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit_code(&e)
    });
    ExitCode::from(code as u8)
}
