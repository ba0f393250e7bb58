use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use evenzeta_cli::examples::{self, ExampleSet};
use evenzeta_cli::render::{render, Format};
use evenzeta_cli::suites::{self, Bounds, Suite};
use evenzeta_cli::{build_identity, CliError, CliResult, IdentityKindArg, IdentityRequest, WeightInput};

/// Exact weighted sum formulas for Bernoulli numbers and (multiple) zeta
/// values at even arguments.
#[derive(Debug, Parser)]
#[command(name = "evenzeta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate one identity
    Identity(IdentityArgs),
    /// Run exact verification grids; exit 1 on any failure
    Verify(VerifyArgs),
    /// Compare generated identities with the bundled reference identities
    Examples(ExamplesArgs),
}

#[derive(Debug, Args)]
struct IdentityArgs {
    #[arg(long, value_enum)]
    kind: IdentityKindArg,
    /// Depth n of the sum
    #[arg(long)]
    n: usize,
    /// Exponent vector m1,m2,... for the weight k1^m1 .. kn^mn
    #[arg(long, value_delimiter = ',', conflicts_with = "poly", required_unless_present = "poly")]
    m: Option<Vec<u32>>,
    /// Weight polynomial in x1..xn, e.g. "x1^2 + x2^2"
    #[arg(long)]
    poly: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Write the document to FILE instead of standard output
    #[arg(long, value_name = "FILE")]
    out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value = "all")]
    suite: Suite,
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    #[arg(long, default_value_t = 10)]
    max_k: u64,
}

#[derive(Debug, Args)]
struct ExamplesArgs {
    #[arg(long, value_enum)]
    section: ExampleSet,
}

fn identity(args: IdentityArgs) -> CliResult<ExitCode> {
    let weight = match (args.m, args.poly) {
        (Some(m), None) => WeightInput::Mvec(m),
        (None, Some(p)) => WeightInput::Poly(p),
        _ => return Err(CliError::Usage("give exactly one of --m and --poly".into())),
    };
    let doc = build_identity(&IdentityRequest {
        kind: args.kind,
        n: args.n,
        weight,
    })?;
    let text = render(&doc, args.format)?;
    match args.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> CliResult<ExitCode> {
    let bounds = Bounds::new(args.max_n, args.max_k)?;
    let report = suites::run(args.suite, bounds);
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if report.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_examples(args: ExamplesArgs) -> CliResult<ExitCode> {
    let (text, ok) = examples::report(args.section)?;
    print!("{text}");
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Identity(a) => identity(a),
        Command::Verify(a) => verify(a),
        Command::Examples(a) => run_examples(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
