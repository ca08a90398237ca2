//! Command-line front end: cohomology tables for the two Virasoro envelopes,
//! current conformal algebras over finite-dimensional coefficient algebras,
//! and the invariant self-test suites.
//!
//! Exit codes: 0 on success, 1 on an internal consistency or check failure,
//! 2 on usage errors.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use conformal_hochschild::cohomology::Method;
use conformal_hochschild::current::{current_cohomology_table, theorem_check, FiniteAlgebra};
use conformal_hochschild::selftest::{run_suite, Suite};
use conformal_hochschild::{Calculator, CohomologyReport, Family};

#[derive(Parser)]
#[command(
    name = "conformal-hochschild",
    version,
    about = "Hochschild cohomology of associative conformal algebras with trivial coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// The N=3 universal envelope of the Virasoro conformal algebra
    U3 {
        #[command(subcommand)]
        command: FamilyCommand,
    },
    /// The Weyl conformal algebra (N=2 envelope)
    U2 {
        #[command(subcommand)]
        command: FamilyCommand,
    },
    /// Current conformal algebra over a finite-dimensional algebra
    Current(CurrentArgs),
    /// Run the invariant suites
    Selftest {
        /// Which suite to run
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Compute the per-(n, d) cohomology table
    Cohomology(CohomologyArgs),
}

#[derive(Args)]
struct CohomologyArgs {
    /// Largest homological degree
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    /// Largest index degree; vanishing claims are windowed by this cap
    #[arg(long = "deg-max")]
    deg_max: Option<u32>,
    /// Differential pipeline
    #[arg(long, value_enum, default_value_t = MethodArg::Both)]
    method: MethodArg,
    /// Expand bar vertices with two or more v(0) components during path
    /// enumeration instead of skipping them
    #[arg(long = "no-prune-zeros")]
    no_prune_zeros: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CurrentArgs {
    /// builtin:mat:k, builtin:truncpoly:N, or a path to a structure-constant
    /// JSON document
    #[arg(long)]
    algebra: String,
    /// Largest homological degree
    #[arg(long = "n-max", default_value_t = 3)]
    n_max: usize,
    /// Largest polynomial degree
    #[arg(long = "deg-max", default_value_t = 3)]
    deg_max: u32,
    /// Also run the comparison against the ordinary cohomology of the
    /// augmented algebra and fail on mismatch
    #[arg(long)]
    check_theorem: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long = "out", value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write the report to a file instead of standard output
    #[arg(long = "output-file")]
    output_file: Option<std::path::PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Closed,
    Paths,
    Both,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Closed => Method::Closed,
            MethodArg::Paths => Method::Paths,
            MethodArg::Both => Method::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Rewrite,
    Morse,
    Derivation,
    Kernels,
    Current,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Rewrite => Suite::Rewrite,
            SuiteArg::Morse => Suite::Morse,
            SuiteArg::Derivation => Suite::Derivation,
            SuiteArg::Kernels => Suite::Kernels,
            SuiteArg::Current => Suite::Current,
        }
    }
}

fn emit(report: &CohomologyReport, output: &OutputArgs) -> Result<(), String> {
    let text = match output.format {
        Format::Table => report.to_table(),
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match &output.output_file {
        None => {
            print!("{text}");
            std::io::stdout().flush().map_err(|e| e.to_string())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

fn family_cohomology(family: Family, args: &CohomologyArgs) -> Result<(), String> {
    let n_max = args.n_max.unwrap_or(match family {
        Family::U3 => 5,
        Family::U2 => 4,
    });
    let deg_max = args.deg_max.unwrap_or(12);
    if n_max < 1 || deg_max < 1 {
        return Err("caps must be at least 1".into());
    }
    let mut calc = Calculator::new(family, args.method.into(), !args.no_prune_zeros);
    let report = calc.cohomology_table(n_max, deg_max).map_err(|e| e.to_string())?;
    emit(&report, &args.output)
}

fn current_cohomology(args: &CurrentArgs) -> Result<(), String> {
    if args.n_max < 1 || args.deg_max < 1 {
        return Err("caps must be at least 1".into());
    }
    let algebra = FiniteAlgebra::load(&args.algebra).map_err(|e| e.to_string())?;
    let report = current_cohomology_table(&algebra, args.n_max, args.deg_max);
    emit(&report, &args.output)?;
    if args.check_theorem {
        let theorem = theorem_check(&algebra, args.n_max, args.deg_max);
        print!("{}", theorem.to_table());
        if !theorem.passed() {
            return Err("current-algebra comparison failed".into());
        }
    }
    Ok(())
}

fn selftest(suite: SuiteArg) -> Result<(), String> {
    let results = run_suite(suite.into());
    let mut failed = 0;
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{r}");
        if !r.passed {
            failed += 1;
        }
    }
    let _ = writeln!(text, "{} checks, {failed} failed", results.len());
    print!("{text}");
    if failed > 0 {
        Err(format!("{failed} checks failed"))
    } else {
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::U3 { command: FamilyCommand::Cohomology(args) } => {
            family_cohomology(Family::U3, args)
        }
        Command::U2 { command: FamilyCommand::Cohomology(args) } => {
            family_cohomology(Family::U2, args)
        }
        Command::Current(args) => current_cohomology(args),
        Command::Selftest { suite } => selftest(*suite),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
