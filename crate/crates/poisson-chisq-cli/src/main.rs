//! Command line front end: estimation intervals, coverage curves as CSV,
//! summary tables, and SVG coverage plots.

mod render;
mod svg;

use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use poisson_chisq::{GridSpec, Method, Probability};

/// Success is 0; usage errors exit with 2 (clap's convention), I/O errors
/// with 1.
pub enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(err) => write!(f, "{err}"),
        }
    }
}

impl From<poisson_chisq::Error> for CliError {
    fn from(err: poisson_chisq::Error) -> Self {
        CliError::Usage(err.to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "poisson-chisq",
    version,
    about = "Chi-square estimation intervals for a Poisson mean, with exact coverage probabilities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimation interval(s) for an observed count
    Interval(IntervalArgs),
    /// Coverage probability curve over a lambda grid, as CSV
    Coverage(CoverageArgs),
    /// Mean/min/max coverage summary table for all six methods
    Summary(SummaryArgs),
    /// Coverage curve rendered as an SVG line plot
    Plot(PlotArgs),
}

/// A concrete method, or `all` six at once.
#[derive(Clone, Copy, Debug)]
pub enum MethodChoice {
    All,
    One(Method),
}

impl MethodChoice {
    pub fn methods(self) -> Vec<Method> {
        match self {
            MethodChoice::All => Method::ALL.to_vec(),
            MethodChoice::One(method) => vec![method],
        }
    }
}

impl FromStr for MethodChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "all" {
            return Ok(MethodChoice::All);
        }
        Method::from_str(s)
            .map(MethodChoice::One)
            .map_err(|e| e.to_string())
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
    Svg,
}

#[derive(Args)]
struct IntervalArgs {
    /// Interval rule, or "all" for all six
    #[arg(long)]
    method: MethodChoice,
    /// Observed count
    #[arg(long)]
    x: u64,
    /// Two-sided significance level
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    /// Exposure (time/distance/area/volume); rate intervals are reported
    /// when t differs from 1
    #[arg(long, default_value_t = 1.0)]
    t: f64,
    /// Output file (stdout when absent)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct GridArgs {
    /// First grid index i of lambda = i / denominator
    #[arg(long, default_value_t = 1)]
    grid_start: u64,
    /// Last grid index
    #[arg(long, default_value_t = 750)]
    grid_end: u64,
    /// Grid denominator
    #[arg(long, default_value_t = 10)]
    grid_denominator: u64,
}

impl GridArgs {
    fn build(&self) -> Result<GridSpec, CliError> {
        Ok(GridSpec::new(
            self.grid_start,
            self.grid_end,
            self.grid_denominator,
        )?)
    }
}

#[derive(Args)]
struct CoverageArgs {
    /// Interval rule, or "all" for one column per method
    #[arg(long)]
    method: MethodChoice,
    /// Two-sided significance level
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[command(flatten)]
    grid: GridArgs,
    /// Output file (stdout when absent)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct SummaryArgs {
    /// Two-sided significance level
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[command(flatten)]
    grid: GridArgs,
    /// Output file (stdout when absent)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct PlotArgs {
    /// Interval rule, or "all" for one curve per method
    #[arg(long)]
    method: MethodChoice,
    /// Two-sided significance level
    #[arg(long, default_value_t = 0.05)]
    alpha: f64,
    #[command(flatten)]
    grid: GridArgs,
    /// Output file (stdout when absent)
    #[arg(long)]
    output: Option<PathBuf>,
    /// Output format (plots are SVG only)
    #[arg(long, value_enum, default_value = "svg")]
    format: Format,
}

fn parse_alpha(alpha: f64) -> Result<Probability, CliError> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(CliError::Usage(format!(
            "--alpha must lie strictly between 0 and 1, got {alpha}"
        )));
    }
    Ok(Probability::new(alpha).expect("validated above"))
}

fn require_format(actual: Format, required: Format, command: &str) -> Result<(), CliError> {
    let name = |f: Format| match f {
        Format::Text => "text",
        Format::Csv => "csv",
        Format::Svg => "svg",
    };
    if name(actual) != name(required) {
        return Err(CliError::Usage(format!(
            "--format {} is not valid for `{command}` (expected {})",
            name(actual),
            name(required)
        )));
    }
    Ok(())
}

fn emit(output: Option<&PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, content).map_err(CliError::Io),
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(CliError::Io),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Interval(args) => {
            require_format(args.format, Format::Text, "interval")?;
            let alpha = parse_alpha(args.alpha)?;
            if !(args.t > 0.0 && args.t.is_finite()) {
                return Err(CliError::Usage(format!(
                    "--t must be positive and finite, got {}",
                    args.t
                )));
            }
            let text = render::interval_report(&args.method.methods(), args.x, args.t, alpha)?;
            emit(args.output.as_ref(), &text)
        }
        Command::Coverage(args) => {
            require_format(args.format, Format::Csv, "coverage")?;
            let alpha = parse_alpha(args.alpha)?;
            let grid = args.grid.build()?;
            let csv = render::coverage_csv(&args.method.methods(), alpha, &grid)?;
            emit(args.output.as_ref(), &csv)
        }
        Command::Summary(args) => {
            require_format(args.format, Format::Text, "summary")?;
            let alpha = parse_alpha(args.alpha)?;
            let grid = args.grid.build()?;
            let table = render::summary_table(alpha, &grid)?;
            emit(args.output.as_ref(), &table)
        }
        Command::Plot(args) => {
            require_format(args.format, Format::Svg, "plot")?;
            let alpha = parse_alpha(args.alpha)?;
            let grid = args.grid.build()?;
            let document = svg::coverage_plot(&args.method.methods(), alpha, &grid)?;
            emit(args.output.as_ref(), &document)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
