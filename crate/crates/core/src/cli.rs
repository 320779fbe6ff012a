//! The `windmill` command line.
//!
//! Exit codes: `0` when the run is clean, the statement holds, or no axiom
//! is violated; `1` when a check comes out false; `2` for usage and input
//! errors.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::axioms::{check_suite, dyadic_counterexample, AxiomName};
use crate::engine::{default_max_steps, halving_start, run, OddSplit, PointSet, Stop};
use crate::formula::wm_eval;
use crate::io::{emit_points, emit_svg, emit_trace, gen_points, parse_points, parse_points_raw, to_json};
use crate::kernel::{Point, Sign};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "windmill", version, about = "Exact windmill runs, witness checks and axiom sampling")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the windmill and write its trace as JSON.
    Run(RunArgs),
    /// Decide the windmill statement for a point set and print the witness.
    VerifyWm(VerifyArgs),
    /// Sample the axiom systems over the rational plane.
    CheckAxioms(AxiomArgs),
    /// Write a seeded point set in general position.
    Gen(GenArgs),
    /// Print the self-checking dyadic-plane certificate.
    Dyadic(OutArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Points file, one `{"x":"p/q","y":"p/q"}` object per line.
    #[arg(long, value_name = "FILE")]
    points: Option<PathBuf>,
    /// Generated input, e.g. `n=6,seed=7` or `n=6,seed=7,bound=50`.
    #[arg(long, value_name = "SPEC")]
    gen: Option<GenSpec>,
}

#[derive(Debug, Args)]
struct OutArgs {
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StartMode {
    /// Halving line through a hull vertex (odd sets: smaller side South).
    Halving,
    /// Odd sets: the smaller side is South.
    HalvingI,
    /// Odd sets: the larger side is South.
    HalvingIi,
    /// Use --pivot, --other and --south.
    Explicit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SouthArg {
    Positive,
    Negative,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[command(flatten)]
    input: Input,
    #[arg(long, value_enum, default_value = "halving")]
    start: StartMode,
    /// Opening pivot (1-based), for `--start explicit`.
    #[arg(long, required_if_eq("start", "explicit"))]
    pivot: Option<usize>,
    /// Opening partner (1-based), for `--start explicit`.
    #[arg(long, required_if_eq("start", "explicit"))]
    other: Option<usize>,
    /// Orientation sign of the opening South side, for `--start explicit`.
    #[arg(long, value_enum, required_if_eq("start", "explicit"))]
    south: Option<SouthArg>,
    /// Step limit; defaults to n(n-1)+1.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: Option<u64>,
    #[command(flatten)]
    out: OutArgs,
    /// Also draw the run as SVG.
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args)]
struct AxiomArgs {
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Restrict to these axioms (repeatable); all axioms and the
    /// betweenness-definition check otherwise.
    #[arg(long)]
    axiom: Vec<AxiomName>,
    #[command(flatten)]
    out: OutArgs,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Coordinates are drawn from [0, bound]; defaults to max(100, n).
    #[arg(long)]
    bound: Option<u64>,
    #[command(flatten)]
    out: OutArgs,
}

/// `n=..,seed=..[,bound=..]`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct GenSpec {
    n: usize,
    seed: u64,
    bound: u64,
}

fn default_bound(n: usize) -> u64 {
    (n as u64).max(100)
}

impl FromStr for GenSpec {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let (mut n, mut seed, mut bound) = (None, None, None);
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got `{part}`"))?;
            let number = |v: &str| v.trim().parse::<u64>().map_err(|e| format!("{key}: {e}"));
            match key.trim() {
                "n" => n = Some(number(value)? as usize),
                "seed" => seed = Some(number(value)?),
                "bound" => bound = Some(number(value)?),
                other => return Err(format!("unknown key `{other}` (expected n, seed, bound)")),
            }
        }
        let n = n.ok_or("missing n")?;
        Ok(GenSpec { n, seed: seed.unwrap_or(0), bound: bound.unwrap_or_else(|| default_bound(n)) })
    }
}

/// An operational failure, reported with exit code 2.
#[derive(Debug)]
struct InputError(String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write_out(out: &OutArgs, text: &str, stdout: &mut dyn Write) -> Result<(), InputError> {
    match &out.out {
        Some(path) => std::fs::write(path, text).map_err(|e| InputError(format!("{}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(InputError::from),
    }
}

fn load_set(input: &Input) -> Result<PointSet, InputError> {
    match (&input.points, &input.gen) {
        (Some(path), _) => Ok(parse_points(&read(path)?)?),
        (None, Some(g)) => Ok(gen_points(g.n, g.seed, g.bound)?),
        (None, None) => Err(InputError("no input given".into())),
    }
}

fn load_raw(input: &Input) -> Result<Vec<Point>, InputError> {
    match (&input.points, &input.gen) {
        (Some(path), _) => Ok(parse_points_raw(&read(path)?)?.into_iter().map(|l| l.point).collect()),
        (None, Some(g)) => Ok(gen_points(g.n, g.seed, g.bound)?.into_points()),
        (None, None) => Err(InputError("no input given".into())),
    }
}

fn opening(args: &RunArgs, set: &PointSet) -> Result<Stop, InputError> {
    let n = set.len();
    let one_based = |v: Option<usize>, name: &str| match v {
        Some(i) if (1..=n).contains(&i) => Ok(i - 1),
        Some(i) => Err(InputError(format!("--{name} {i} is not in 1..={n}"))),
        None => Err(InputError(format!("--{name} is required"))),
    };
    Ok(match args.start {
        StartMode::Halving | StartMode::HalvingI => halving_start(set, OddSplit::SouthSmaller)?,
        StartMode::HalvingIi => halving_start(set, OddSplit::SouthLarger)?,
        StartMode::Explicit => {
            let south = match args.south {
                Some(SouthArg::Positive) => Sign::Positive,
                Some(SouthArg::Negative) => Sign::Negative,
                None => return Err(InputError("--south is required".into())),
            };
            Stop::new(one_based(args.pivot, "pivot")?, one_based(args.other, "other")?, south)?
        }
    })
}

fn cmd_run(args: &RunArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, InputError> {
    let set = load_set(&args.input)?;
    let start = opening(args, &set)?;
    let max_steps = args.max_steps.map_or(default_max_steps(set.len()), |m| m as usize);
    let trace = run(&set, &start, max_steps)?;
    write_out(&args.out, &emit_trace(&trace, &set), stdout)?;
    if let Some(path) = &args.svg {
        std::fs::write(path, emit_svg(&trace, &set)).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    }
    let report = crate::engine::analyze(&trace, set.len());
    let _ = writeln!(
        stderr,
        "n={} steps={} closed={} coverage={} violations={}",
        set.len(),
        trace.steps(),
        trace.is_closed(),
        report.coverage,
        report.violations.len()
    );
    for v in &report.violations {
        let _ = writeln!(stderr, "  {v}");
    }
    Ok(if report.ok() { EXIT_OK } else { EXIT_FALSE })
}

fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, InputError> {
    let points = load_raw(&args.input)?;
    let verdict = wm_eval(&points)?;
    write_out(&args.out, &to_json(&verdict), stdout)?;
    let _ = writeln!(stderr, "holds={} mode={}", verdict.holds, serde_json::to_string(&verdict.mode)?);
    Ok(if verdict.holds { EXIT_OK } else { EXIT_FALSE })
}

fn cmd_axioms(args: &AxiomArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, InputError> {
    let selection = (!args.axiom.is_empty()).then_some(args.axiom.as_slice());
    let report = check_suite(args.seed, args.trials as usize, selection)?;
    write_out(&args.out, &to_json(&report), stdout)?;
    for c in &report.checks {
        let _ = writeln!(stderr, "{:<5} trials={} engaged={} violations={}", c.check, c.trials, c.engaged, c.violations.len());
    }
    Ok(if report.ok() { EXIT_OK } else { EXIT_FALSE })
}

fn cmd_gen(args: &GenArgs, stdout: &mut dyn Write) -> Result<i32, InputError> {
    let set = gen_points(args.n, args.seed, args.bound.unwrap_or_else(|| default_bound(args.n)))?;
    write_out(&args.out, &emit_points(set.points()), stdout)?;
    Ok(EXIT_OK)
}

fn cmd_dyadic(args: &OutArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, InputError> {
    let cert = dyadic_counterexample();
    write_out(args, &to_json(&cert), stdout)?;
    let ok = cert.verify();
    let _ = writeln!(stderr, "verified={ok}");
    Ok(if ok { EXIT_OK } else { EXIT_FALSE })
}

/// Parse `args` (program name first) and run, writing to the given
/// streams. Returns the process exit code.
pub fn cli_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let result = match &cli.command {
        Command::Run(a) => cmd_run(a, stdout, stderr),
        Command::VerifyWm(a) => cmd_verify(a, stdout, stderr),
        Command::CheckAxioms(a) => cmd_axioms(a, stdout, stderr),
        Command::Gen(a) => cmd_gen(a, stdout),
        Command::Dyadic(a) => cmd_dyadic(a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary: process arguments and standard streams.
pub fn cli<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    cli_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
