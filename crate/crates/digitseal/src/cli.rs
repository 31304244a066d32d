//! Argument parsing and subcommand dispatch.
//!
//! Exit status: `decide`/`witness` use 0 = a multiple was found, 1 = no
//! multiple exists, 2 = inconclusive; `verify` uses 0 = valid, 1 = invalid;
//! `classify`, `tables` and `export-graph` use 0 = complete, 2 = some answer
//! is inconclusive (or the graph is truncated). Invocation and input errors
//! exit with 64, other failures with 3.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use digitseal_core::classify::{ClassifyOptions, Family, Membership};
use digitseal_core::poly::format_coeff_list;
use digitseal_core::roots::DEFAULT_PRECISION_CAP;
use digitseal_core::search::{
    decide_with, delta_schedule, export_graph, verify_witness, DigitSet, SearchOptions, Traversal, Verdict,
    DEFAULT_NODE_CAP,
};
use digitseal_core::IntPoly;

use crate::input::{digit_string, normalize_monic, parse_digit_list, parse_poly, parse_witness, read_witness_file};
use crate::progress::StderrProgress;
use crate::render;
use crate::sweep::{build_tables, classify_all, SharedCache, TableRequest};
use crate::{CliError, EXIT_FAILURE, EXIT_USAGE};

/// Environment variable overriding the root-isolation precision cap (bits).
pub const PRECISION_CAP_ENV: &str = "DIGITSEAL_PRECISION_CAP";

const POLY_HELP: &str = "Polynomial: human form (x^3-x+1), coefficient list lowest degree first (1,-1,0,1), or @FILE";

#[derive(Debug, Parser)]
#[command(name = "digitseal", version, about = "Decide whether an integer polynomial divides a polynomial with coefficients in a fixed digit set")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether the polynomial has a multiple with coefficients in the digit set.
    Decide(DecideArgs),
    /// Like `decide`, but print only the witness.
    Witness(DecideArgs),
    /// Check that a witness is a multiple with coefficients in the digit set.
    Verify(VerifyArgs),
    /// Split into cyclotomic and noncyclotomic parts and decide membership in L(B) and N(B).
    Classify(ClassifyArgs),
    /// Sweep a polynomial family and print the count tables and set listings.
    Tables(TablesArgs),
    /// Write the explored remainder graph.
    ExportGraph(ExportArgs),
}

#[derive(Debug, Clone, Args)]
#[group(id = "digit_set", multiple = false)]
pub struct DigitArgs {
    /// Digits {-1, 1} (the default).
    #[arg(long)]
    pub littlewood: bool,
    /// Digits {0, 1}.
    #[arg(long)]
    pub newman: bool,
    /// Custom digits, comma separated (e.g. "-1,0,1").
    #[arg(long, value_name = "LIST", allow_hyphen_values = true)]
    pub custom: Option<String>,
}

impl DigitArgs {
    pub fn digit_set(&self) -> Result<DigitSet, CliError> {
        if self.newman {
            Ok(DigitSet::newman())
        } else if let Some(list) = &self.custom {
            parse_digit_list(list)
        } else {
            Ok(DigitSet::littlewood())
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SearchArgs {
    /// First pruning level of the schedule.
    #[arg(long, default_value_t = 0.95, value_name = "DELTA")]
    pub delta_start: f64,
    /// Decrement between pruning levels; the schedule always ends at 0.
    #[arg(long, default_value_t = 0.05, value_name = "STEP")]
    pub delta_step: f64,
    /// Maximum number of graph states explored per run.
    #[arg(long, default_value_t = DEFAULT_NODE_CAP, value_name = "N")]
    pub node_cap: u64,
    /// Maximum witness degree explored.
    #[arg(long, value_name = "N")]
    pub depth_cap: Option<u32>,
    /// Drop the bounds of roots that may lie on the unit circle (sound for found witnesses only).
    #[arg(long)]
    pub exclude_unimodular: bool,
    /// Breadth-first traversal (shortest witnesses first).
    #[arg(long)]
    pub bfs: bool,
    /// Suppress progress lines on standard error.
    #[arg(long, short)]
    pub quiet: bool,
}

impl SearchArgs {
    pub fn options(&self) -> Result<SearchOptions, CliError> {
        if !(0.0..1.0).contains(&self.delta_start) || !(self.delta_step > 0.0) {
            return Err(CliError::Usage("need 0 <= --delta-start < 1 and --delta-step > 0".into()));
        }
        let opts = SearchOptions {
            delta_schedule: delta_schedule(self.delta_start, self.delta_step),
            node_cap: self.node_cap,
            depth_cap: self.depth_cap,
            exclude_unimodular: self.exclude_unimodular,
            traversal: if self.bfs { Traversal::Bfs } else { Traversal::Dfs },
            precision_cap: precision_cap()?,
        };
        opts.validate()?;
        Ok(opts)
    }
}

fn precision_cap() -> Result<u32, CliError> {
    match std::env::var(PRECISION_CAP_ENV) {
        Err(_) => Ok(DEFAULT_PRECISION_CAP),
        Ok(s) => match s.trim().parse::<u32>() {
            Ok(bits) if bits >= 64 => Ok(bits),
            _ => Err(CliError::Usage(format!("{PRECISION_CAP_ENV} must be an integer >= 64, got `{s}`"))),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

impl Format {
    fn require(self, allowed: &[Format]) -> Result<Format, CliError> {
        if allowed.contains(&self) {
            Ok(self)
        } else {
            let names: Vec<_> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
            Err(CliError::Usage(format!("this subcommand supports --format {}", names.join("|"))))
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct DecideArgs {
    #[arg(help = POLY_HELP, allow_hyphen_values = true)]
    pub poly: String,
    #[command(flatten)]
    pub digits: DigitArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[group(id = "witness_source", required = true, multiple = false, args = ["witness", "witness_file"])]
pub struct VerifyArgs {
    #[arg(help = POLY_HELP, allow_hyphen_values = true)]
    pub poly: String,
    /// Witness as a sign string (leading coefficient first) or a polynomial.
    #[arg(long, allow_hyphen_values = true)]
    pub witness: Option<String>,
    /// File holding the witness in either format.
    #[arg(long)]
    pub witness_file: Option<PathBuf>,
    #[command(flatten)]
    pub digits: DigitArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Args)]
pub struct ClassifyArgs {
    #[arg(help = POLY_HELP, required = true, allow_hyphen_values = true)]
    pub polys: Vec<String>,
    /// Decide only the Littlewood question.
    #[arg(long)]
    pub littlewood: bool,
    /// Decide only the Newman question.
    #[arg(long)]
    pub newman: bool,
    /// Also compute the Mahler measure.
    #[arg(long)]
    pub mahler: bool,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, default_value_t = default_workers())]
    pub workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Borwein,
    Newman,
}

#[derive(Debug, Clone, Args)]
pub struct TablesArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Borwein)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    pub min_degree: usize,
    #[arg(long)]
    pub max_degree: usize,
    /// Also list members without a nonnegative real root and without a
    /// Newman multiple whose Mahler measure is below this value.
    #[arg(long)]
    pub mahler_cutoff: Option<f64>,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, default_value_t = default_workers())]
    pub workers: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Directory for counts.csv, partition.csv, listing_*.csv and tables.json.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ExportArgs {
    #[arg(help = POLY_HELP, allow_hyphen_values = true)]
    pub poly: String,
    #[command(flatten)]
    pub digits: DigitArgs,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, value_enum, default_value_t = Format::Dot)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Parses `args` (including the program name), runs the subcommand and
/// returns the exit status. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Decide(a) => cmd_decide(&a, false, out),
        Command::Witness(a) => cmd_decide(&a, true, out),
        Command::Verify(a) => cmd_verify(&a, out),
        Command::Classify(a) => cmd_classify(&a, out),
        Command::Tables(a) => cmd_tables(&a, out, err),
        Command::ExportGraph(a) => cmd_export(&a, out),
    }
}

/// Reads `@FILE` arguments; other text is parsed directly.
fn read_poly(arg: &str) -> Result<IntPoly, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_string(), e))?;
            parse_poly(&text)
        }
        None => parse_poly(arg),
    }
}

fn emit(text: &str, dest: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match dest {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(path.display().to_string(), e)),
        None => out.write_all(text.as_bytes()).map_err(|e| CliError::Io("standard output".into(), e)),
    }
}

fn json_text(v: &serde_json::Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn cmd_decide(a: &DecideArgs, witness_only: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = a.format.require(&[Format::Text, Format::Json])?;
    let (p, negated) = normalize_monic(read_poly(&a.poly)?)?;
    let digits = a.digits.digit_set()?;
    let opts = a.search.options()?;
    let verdict = if a.search.quiet {
        decide_with(&p, &digits, &opts, &mut ())?
    } else {
        decide_with(&p, &digits, &opts, &mut StderrProgress)?
    };
    let text = match (format, witness_only, &verdict) {
        (Format::Json, _, _) => json_text(&render::verdict_json(&p, &digits, negated, &verdict))?,
        (_, true, Verdict::Found { witness, .. }) => {
            format!("{witness}\n{}\n{}\n", format_coeff_list(witness), digit_string(witness))
        }
        (_, true, v) => {
            // No witness to print: the verdict goes to the report instead.
            render::verdict_text(&p, &digits, negated, v)
        }
        _ => render::verdict_text(&p, &digits, negated, &verdict),
    };
    emit(&text, a.out.as_deref(), out)?;
    Ok(verdict.exit_code())
}

fn cmd_verify(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = a.format.require(&[Format::Text, Format::Json])?;
    let p = read_poly(&a.poly)?;
    if p.is_zero() || p.deg() == 0 {
        return Err(CliError::Usage("the divisor must have degree at least 1".into()));
    }
    let q = match (&a.witness, &a.witness_file) {
        (Some(w), _) => parse_witness(w)?,
        (None, Some(path)) => read_witness_file(path)?,
        (None, None) => unreachable!("clap requires one witness source"),
    };
    let digits = a.digits.digit_set()?;
    let valid = verify_witness(&p, &q, &digits);
    let text = match format {
        Format::Json => json_text(&serde_json::json!({
            "poly": p.to_string(),
            "coeffs": render::coeffs_json(&p),
            "witness": render::poly_json(&q),
            "digits": digits.digits(),
            "valid": valid,
        }))?,
        _ => format!(
            "divisor: {p}\nwitness degree: {}\ndigits: {:?}\n{}\n",
            q.deg(),
            digits.digits(),
            if valid { "valid" } else { "invalid" }
        ),
    };
    emit(&text, None, out)?;
    Ok(if valid { 0 } else { 1 })
}

fn classify_options(search: &SearchArgs, l: bool, n: bool, mahler: bool) -> Result<ClassifyOptions, CliError> {
    Ok(ClassifyOptions {
        search: search.options()?,
        littlewood: l || !n,
        newman: n || !l,
        mahler,
        ..ClassifyOptions::default()
    })
}

fn cmd_classify(a: &ClassifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = a.format.require(&[Format::Text, Format::Json, Format::Csv])?;
    let opts = classify_options(&a.search, a.littlewood, a.newman, a.mahler)?;
    let polys = a.polys.iter().map(|s| read_poly(s)).collect::<Result<Vec<_>, _>>()?;
    if let Some(z) = polys.iter().find(|p| p.is_zero() || p.constant_term().bits() == 0) {
        return Err(CliError::Usage(format!("{z}: classification needs a nonzero constant term")));
    }
    let records = classify_all(polys, &opts, &SharedCache::new(), a.workers)?;
    let text = match format {
        Format::Json => json_text(&serde_json::Value::Array(records.iter().map(render::record_json).collect()))?,
        Format::Csv => render::records_csv(&records)?,
        _ => records.iter().map(render::record_text).collect::<Vec<_>>().join("\n"),
    };
    emit(&text, a.out.as_deref(), out)?;
    let unknown = |m: Option<Membership>| matches!(m, Some(Membership::Unknown(_)));
    Ok(if records.iter().any(|r| unknown(r.l()) || unknown(r.n())) { 2 } else { 0 })
}

fn cmd_tables(a: &TablesArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    let format = a.format.require(&[Format::Text, Format::Json, Format::Csv])?;
    if a.mahler_cutoff.is_some_and(|c| !(c > 1.0)) {
        return Err(CliError::Usage("--mahler-cutoff must exceed 1".into()));
    }
    let family = match a.family {
        FamilyArg::Borwein => Family::Borwein,
        FamilyArg::Newman => Family::Newman,
    };
    let req = TableRequest {
        family,
        min_degree: a.min_degree,
        max_degree: a.max_degree,
        workers: a.workers,
        mahler_cutoff: a.mahler_cutoff,
        options: classify_options(&a.search, true, true, false)?,
    };
    let report = build_tables(&req)?;
    if let Some(dir) = &a.out {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io(dir.display().to_string(), e))?;
        let write = |name: &str, text: String| {
            let path = dir.join(name);
            std::fs::write(&path, text).map_err(|e| CliError::Io(path.display().to_string(), e))
        };
        write("counts.csv", render::counts_csv(&report)?)?;
        if !report.partition.is_empty() {
            write("partition.csv", render::partition_csv(&report)?)?;
        }
        for l in &report.listings {
            write(&format!("listing_{}.csv", l.name), render::listing_csv(l)?)?;
        }
        write("tables.json", json_text(&render::tables_json(&report))?)?;
    }
    let text = match format {
        Format::Json => json_text(&render::tables_json(&report))?,
        Format::Csv => render::counts_csv(&report)?,
        _ => render::tables_text(&report),
    };
    emit(&text, None, out)?;
    if report.is_exact() {
        Ok(0)
    } else {
        let _ = writeln!(err, "warning: {} members are inconclusive; the counts are not exact", report.undecided.len());
        Ok(2)
    }
}

fn cmd_export(a: &ExportArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let format = a.format.require(&[Format::Dot, Format::Json])?;
    let (p, _) = normalize_monic(read_poly(&a.poly)?)?;
    let digits = a.digits.digit_set()?;
    let opts = a.search.options()?;
    let graph = export_graph(&p, &digits, &opts)?;
    let text = match format {
        Format::Json => json_text(&render::graph_json(&graph, &digits))?,
        _ => render::graph_dot(&graph),
    };
    emit(&text, a.out.as_deref(), out)?;
    Ok(if graph.truncated || graph.precision_tainted { 2 } else { 0 })
}

/// Entry point used by the binary.
pub fn main_exit_code() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    if code == EXIT_FAILURE || code == EXIT_USAGE {
        let _ = std::io::stderr().flush();
    }
    code
}
