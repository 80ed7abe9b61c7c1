use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};

use fuss_catalan::partition::{enumerate_family, histogram, Family};
use fuss_catalan::render::{render_enumeration, render_triangle, OutputFormat};
use fuss_catalan::triangle::{build, Method, TriangleParams};
use fuss_catalan::verify::{self, Scope};

/// Exact Fuss-Catalan triangles and their combinatorial cross-checks.
#[derive(Parser)]
#[command(name = "fuss-catalan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print T^p(n,k) for n = 0..=n-max with a row-sum column.
    Triangle {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Convolution)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Run property checks; exits 1 if any fails.
    Verify {
        #[arg(long, value_enum, default_value_t = ScopeArg::All)]
        scope: ScopeArg,
        #[arg(long, default_value_t = verify::DEFAULT_P_MAX, value_parser = clap::value_parser!(u32).range(1..))]
        p_max: u32,
        /// Defaults: 30 for triangles, 6 for paths and partitions.
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// List every object of a family with its box count.
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
    /// Time the three constructions after checking they agree.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        p: u32,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        repetitions: u32,
        /// `table` or `csv`.
        #[arg(long, value_enum, default_value_t = FormatArg::Table)]
        format: FormatArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Convolution,
    Alternating,
    ClosedForm,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Convolution => Method::Convolution,
            MethodArg::Alternating => Method::Alternating,
            MethodArg::ClosedForm => Method::ClosedForm,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Table => OutputFormat::Table,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ScopeArg {
    All,
    Triangles,
    Paths,
    Partitions,
    Sequences,
}

impl From<ScopeArg> for Scope {
    fn from(s: ScopeArg) -> Self {
        match s {
            ScopeArg::All => Scope::All,
            ScopeArg::Triangles => Scope::Triangles,
            ScopeArg::Paths => Scope::Paths,
            ScopeArg::Partitions => Scope::Partitions,
            ScopeArg::Sequences => Scope::Sequences,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Partitions,
    Matchings,
    DoublePartitions,
    MatchingDoubles,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Partitions => Family::Partitions,
            FamilyArg::Matchings => Family::Matchings,
            FamilyArg::DoublePartitions => Family::DoublePartitions,
            FamilyArg::MatchingDoubles => Family::MatchingDoubles,
        }
    }
}

const EXIT_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Triangle {
            p,
            n_max,
            method,
            format,
        } => cmd_triangle(p, n_max, method.into(), format.into()),
        Command::Verify {
            scope,
            p_max,
            n_max,
        } => cmd_verify(scope.into(), p_max, n_max),
        Command::Enumerate { family, n, format } => cmd_enumerate(family.into(), n, format.into()),
        Command::Bench {
            p,
            n_max,
            repetitions,
            format,
        } => cmd_bench(p, n_max, repetitions, format),
    }
}

fn cmd_triangle(p: u32, n_max: usize, method: Method, format: OutputFormat) -> ExitCode {
    let params = match TriangleParams::new(p, n_max) {
        Ok(params) => params,
        Err(e) => return usage_error(e),
    };
    match build(params, method) {
        Ok(t) => {
            print!("{}", render_triangle(&t, format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_FAILED)
        }
    }
}

fn cmd_verify(scope: Scope, p_max: u32, n_max: Option<usize>) -> ExitCode {
    let results = match verify::run(scope, p_max, n_max) {
        Ok(r) => r,
        Err(fuss_catalan::Error::InvalidParams(msg)) => return usage_error(msg),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_FAILED);
        }
    };
    for r in &results {
        println!("{r}");
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    println!("{} checks, {} failed", results.len(), failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}

fn cmd_enumerate(family: Family, n: usize, format: OutputFormat) -> ExitCode {
    let diagrams = match enumerate_family(family, n) {
        Ok(d) => d,
        Err(e) => return usage_error(e),
    };
    let hist = histogram(&diagrams);
    print!(
        "{}",
        render_enumeration(family, n, &diagrams, &hist, format)
    );
    ExitCode::SUCCESS
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort();
    samples[samples.len() / 2]
}

fn cmd_bench(p: u32, n_max: usize, repetitions: u32, format: FormatArg) -> ExitCode {
    let params = match TriangleParams::new(p, n_max) {
        Ok(params) => params,
        Err(e) => return usage_error(e),
    };
    if matches!(format, FormatArg::Json) {
        return usage_error("bench supports --format table or csv");
    }
    let mut timings = Vec::new();
    let mut reference = None;
    for method in Method::ALL {
        let mut samples = Vec::with_capacity(repetitions as usize);
        let mut last = None;
        for _ in 0..repetitions {
            let start = Instant::now();
            let t = match build(params, method) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: {method}: {e}");
                    return ExitCode::from(EXIT_FAILED);
                }
            };
            samples.push(start.elapsed());
            last = Some(t);
        }
        let t = last.expect("at least one repetition");
        match &reference {
            None => reference = Some(t),
            Some(r) if !r.same_cells(&t) => {
                eprintln!(
                    "error: {method} disagrees with {}; refusing to report timings",
                    r.method()
                );
                return ExitCode::from(EXIT_FAILED);
            }
            Some(_) => {}
        }
        timings.push((method, median(samples)));
    }
    match format {
        FormatArg::Csv => {
            println!("method,p,n_max,repetitions,median_seconds");
            for (method, d) in &timings {
                println!("{method},{p},{n_max},{repetitions},{:.9}", d.as_secs_f64());
            }
        }
        _ => {
            println!("p={p} n_max={n_max} repetitions={repetitions} (outputs agree)");
            for (method, d) in &timings {
                println!("{:<12} {:>14.6} ms", method.as_str(), d.as_secs_f64() * 1e3);
            }
        }
    }
    ExitCode::SUCCESS
}
