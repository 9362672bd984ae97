//! Command-line front end. [`run`] holds all the logic so it can be driven
//! from tests; the binary only forwards `argv` and the exit code.
//!
//! Exit codes: 0 success, 1 infeasible flow (or internal failure), 2 usage
//! or input error, 3 enumeration guard exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{enumerate_frontier, solve_exact};
use crate::flowcore::rational::{format_rational, parse_rational};
use crate::flowcore::{
    frontier_plot_data, preprocess, validate_flow, Algorithm, Instance, Rational, Solution,
    SolutionDocument, ValidationReport,
};
use crate::fptas::{solve_gk_acyclic_with, solve_gk_with, GkOptions};
use crate::generate::{generate, BudgetMode, GenParams};
use crate::oracle::{check_guard, optimum_from_cloud, point_cloud, DEFAULT_GUARD};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INFEASIBLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "bcmcf",
    version,
    about = "Budget-constrained minimum cost flow"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance and print a solution document.
    Solve(SolveArgs),
    /// Print the extreme points of the cost/fee frontier.
    Frontier(FrontierArgs),
    /// Brute-force optimum by enumerating integral flows.
    Oracle(OracleArgs),
    /// Check a flow against an instance.
    Validate(ValidateArgs),
    /// Generate a random instance.
    Gen(GenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Instance file.
    #[arg(value_name = "INSTANCE", conflicts_with = "input")]
    pub path: Option<PathBuf>,
    #[arg(long, value_name = "INSTANCE")]
    pub input: Option<PathBuf>,
    /// Write to this file instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

impl InputArgs {
    fn instance(&self) -> Result<Instance> {
        let path = self
            .path
            .as_ref()
            .or(self.input.as_ref())
            .ok_or_else(|| Error::InvalidArgument("no instance file given".into()))?;
        Instance::parse(&read(path)?)
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, default_value = "exact")]
    pub algorithm: Algorithm,
    /// Accuracy for gk and gk-acyclic, in (0, 1).
    #[arg(long)]
    pub epsilon: Option<f64>,
    /// Enumeration guard for the oracle.
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    pub guard: u128,
    /// Iteration cap override for gk and gk-acyclic.
    #[arg(long)]
    pub iteration_cap: Option<u64>,
}

#[derive(Debug, Args)]
pub struct FrontierArgs {
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    pub guard: u128,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub io: InputArgs,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    pub guard: u128,
}

#[derive(Debug, Args)]
pub struct ValidateArgs {
    #[command(flatten)]
    pub io: InputArgs,
    /// Solution document, or whitespace-separated flow values in edge order.
    #[arg(long)]
    pub flow: PathBuf,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, short = 'n', default_value_t = 5)]
    pub nodes: usize,
    #[arg(long, short = 'm', default_value_t = 8)]
    pub edges: usize,
    #[arg(long, default_value_t = 3)]
    pub max_capacity: i64,
    #[arg(long, default_value_t = 5)]
    pub max_cost: i64,
    #[arg(long, default_value_t = 5)]
    pub max_fee: i64,
    #[arg(long, default_value = "tight")]
    pub budget_mode: BudgetMode,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Only edges from lower to higher node id.
    #[arg(long)]
    pub acyclic: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

impl GenArgs {
    pub fn params(&self) -> GenParams {
        GenParams {
            nodes: self.nodes,
            edges: self.edges,
            max_capacity: self.max_capacity,
            max_cost: self.max_cost,
            max_fee: self.max_fee,
            budget_mode: self.budget_mode,
            acyclic: self.acyclic,
            seed: self.seed,
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(rendered.as_bytes())
            } else {
                err.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::GuardExceeded { .. } => EXIT_GUARD,
        Error::Internal(_) => EXIT_INFEASIBLE,
        _ => EXIT_USAGE,
    }
}

fn dispatch(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve(a) => {
            let inst = a.io.instance()?;
            let sol = solve(&inst, a)?;
            emit(&a.io.output, out, &render_solution(&sol, a.io.format))?;
            Ok(EXIT_OK)
        }
        Command::Frontier(a) => {
            let inst = a.io.instance()?;
            check_guard(&inst, a.guard)?;
            emit(&a.io.output, out, &cmd_frontier(&inst, a.io.format)?)?;
            Ok(EXIT_OK)
        }
        Command::Oracle(a) => {
            let inst = a.io.instance()?;
            let cloud = point_cloud(&inst, a.guard)?;
            let sol = optimum_from_cloud(&inst, &cloud);
            emit(&a.io.output, out, &render_solution(&sol, a.io.format))?;
            Ok(EXIT_OK)
        }
        Command::Validate(a) => {
            let inst = a.io.instance()?;
            let values = read_flow_values(&read(&a.flow)?)?;
            let report = validate_flow(&inst, &values)?;
            emit(&a.io.output, out, &render_report(&report, a.io.format))?;
            Ok(if report.is_feasible() {
                EXIT_OK
            } else {
                EXIT_INFEASIBLE
            })
        }
        Command::Gen(a) => {
            emit(&a.output, out, &cmd_gen(&a.params())?)?;
            Ok(EXIT_OK)
        }
    }
}

/// Preprocesses, solves the reduced instance and maps the flow back.
pub fn solve(inst: &Instance, args: &SolveArgs) -> Result<Solution> {
    let reduced = preprocess(inst);
    let r = &reduced.instance;
    let epsilon = || {
        args.epsilon.ok_or_else(|| {
            Error::InvalidArgument(format!("--epsilon is required for {}", args.algorithm))
        })
    };
    let mut sol = match args.algorithm {
        Algorithm::Exact => solve_exact(r)?,
        Algorithm::Gk => {
            let opts = GkOptions {
                epsilon: epsilon()?,
                iteration_cap: args.iteration_cap,
            };
            solve_gk_with(r, &opts)?.solution
        }
        Algorithm::GkAcyclic => {
            let opts = GkOptions {
                epsilon: epsilon()?,
                iteration_cap: args.iteration_cap,
            };
            solve_gk_acyclic_with(r, &opts, &mut |_| {})?.solution
        }
        Algorithm::Oracle => optimum_from_cloud(r, &point_cloud(r, args.guard)?),
    };
    sol.flow = reduced.lift_flow(inst, &sol.flow);
    Ok(sol)
}

pub fn render_solution(sol: &Solution, format: Format) -> String {
    let doc = sol.document();
    match format {
        Format::Text => doc.to_text(),
        Format::Structured => doc.to_json() + "\n",
    }
}

#[derive(Serialize)]
struct StructuredFrontier {
    budget: String,
    points: Vec<StructuredPoint>,
}

#[derive(Serialize)]
struct StructuredPoint {
    cost: String,
    fee: String,
}

/// Plot data: a `# budget B` comment, then one `cost fee` line per extreme
/// point in fee order.
pub fn cmd_frontier(inst: &Instance, format: Format) -> Result<String> {
    let points = enumerate_frontier(&preprocess(inst).instance)?;
    Ok(match format {
        Format::Text => format!(
            "# budget {}\n{}",
            inst.budget(),
            frontier_plot_data(&points)
        ),
        Format::Structured => {
            let doc = StructuredFrontier {
                budget: inst.budget().to_string(),
                points: points
                    .iter()
                    .map(|p| StructuredPoint {
                        cost: format_rational(&p.cost),
                        fee: format_rational(&p.fee),
                    })
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
    })
}

pub fn cmd_gen(params: &GenParams) -> Result<String> {
    Ok(generate(params)?.to_text())
}

/// A solution document, or bare rationals separated by whitespace.
pub fn read_flow_values(text: &str) -> Result<Vec<Rational>> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .unwrap_or("");
    if first.starts_with('{') || first.starts_with("algorithm") {
        return Ok(SolutionDocument::parse(text)?.flows);
    }
    let mut values = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_body = line.split('#').next().unwrap_or("");
        for tok in line_body.split_whitespace() {
            values.push(parse_rational(tok).ok_or_else(|| Error::Parse {
                line: idx + 1,
                message: format!("bad rational `{tok}`"),
            })?);
        }
    }
    Ok(values)
}

#[derive(Serialize)]
struct StructuredReport {
    feasible: bool,
    cost: String,
    fee: String,
    flow_value: String,
    budget_excess: Option<String>,
    negative_value: Option<String>,
    capacity_violations: Vec<(usize, String, i64)>,
    conservation_violations: Vec<(usize, String)>,
}

pub fn render_report(r: &ValidationReport, format: Format) -> String {
    let f = format_rational;
    match format {
        Format::Text => {
            let mut s = String::new();
            let verdict = if r.is_feasible() {
                "feasible"
            } else {
                "infeasible"
            };
            let _ = writeln!(s, "{verdict} c={} b={}", f(&r.cost), f(&r.fee));
            if let Some(x) = &r.budget_excess {
                let _ = writeln!(s, "budget_excess {}", f(x));
            }
            if let Some(x) = &r.negative_value {
                let _ = writeln!(s, "negative_value {}", f(x));
            }
            for v in &r.capacity_violations {
                let _ = writeln!(
                    s,
                    "capacity edge {} value {} capacity {}",
                    v.edge + 1,
                    f(&v.value),
                    v.capacity
                );
            }
            for (node, imbalance) in &r.conservation_violations {
                let _ = writeln!(
                    s,
                    "conservation node {} imbalance {}",
                    node + 1,
                    f(imbalance)
                );
            }
            s
        }
        Format::Structured => {
            let doc = StructuredReport {
                feasible: r.is_feasible(),
                cost: f(&r.cost),
                fee: f(&r.fee),
                flow_value: f(&r.flow_value),
                budget_excess: r.budget_excess.as_ref().map(f),
                negative_value: r.negative_value.as_ref().map(f),
                capacity_violations: r
                    .capacity_violations
                    .iter()
                    .map(|v| (v.edge + 1, f(&v.value), v.capacity))
                    .collect(),
                conservation_violations: r
                    .conservation_violations
                    .iter()
                    .map(|(n, x)| (n + 1, f(x)))
                    .collect(),
            };
            serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
        }
    }
}

fn read(path: &Path) -> Result<String> {
    Ok(std::fs::read_to_string(path)?)
}

fn emit(path: &Option<PathBuf>, out: &mut dyn Write, text: &str) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}
