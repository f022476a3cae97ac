//! The `qsr` command line front end.
//!
//! Every run writes exactly one JSON report (see `schema/report.schema.json`)
//! to standard output, followed by a newline. Diagnostics go to standard
//! error. Exit codes: 0 success, 1 the graph does not have the property
//! asked about, 2 usage or input error, 3 order budget exceeded.

use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::canon::canonical_form;
use crate::catalog::build_named;
use crate::enumerate::{
    brute_force_enumerate, certify, enumerate_with, sidecar_path, write_census, EnumError,
    EnumOptions, EnumReport, EnumSpec,
};
use crate::graph::{read_graph6_lines, Graph};
use crate::qsr::{analyze, check, sqsr_bounds, t_profile, QsrError, QsrParams};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "qsr", version, about = "Quasi-strongly regular graph toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check graph6 graphs against declared parameters.
    Verify(VerifyArgs),
    /// Report the parameters and per-vertex t-profiles of graph6 graphs.
    Analyze(AnalyzeArgs),
    /// Isomorph-free census for a parameter set.
    Enumerate(EnumerateArgs),
    /// Admissible orders for the (k-1, k-2, k-3) family.
    Bounds(BoundsArgs),
    /// Print a named reference graph.
    Catalog(CatalogArgs),
}

#[derive(Debug, Clone, Args)]
pub struct ParamArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long, default_value_t = 0)]
    pub a: usize,
    /// Comma-separated non-adjacent common-neighbour counts, e.g. `3,2,1`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub c: Vec<usize>,
    /// Require `a` to differ from every c-value.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// graph6 file, one graph per line; `-` reads standard input.
    #[arg(default_value = "-")]
    pub input: String,
    #[command(flatten)]
    pub params: ParamArgs,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(default_value = "-")]
    pub input: String,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Every listed c-value must be realised.
    #[arg(long)]
    pub proper: bool,
    /// Use the brute-force oracle (n <= 8).
    #[arg(long)]
    pub oracle: bool,
    /// Write the census here, with metadata in `<out>.meta.json`.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = "QSR_JOBS")]
    pub jobs: Option<usize>,
    /// Allow n above the order budget.
    #[arg(long)]
    pub override_budget: bool,
    /// Do not fix vertex 0 and its neighbourhood.
    #[arg(long)]
    pub no_rooted_start: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub k: usize,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    #[arg(long)]
    pub name: String,
    /// Also write the graph6 line to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// The document printed on standard output.
#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub version: &'static str,
    /// `ok`, `false` or `error`.
    pub status: &'static str,
    pub input: Value,
    pub result: Value,
    pub error: Option<String>,
}

struct Outcome {
    code: i32,
    result: Value,
    error: Option<String>,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome { code: EXIT_OK, result, error: None }
    }

    fn fail(code: i32, result: Value, error: impl Into<String>) -> Self {
        Outcome { code, result, error: Some(error.into()) }
    }

    fn usage(error: impl Into<String>) -> Self {
        Outcome::fail(EXIT_USAGE, Value::Null, error)
    }
}

/// Parses `args`, runs the command and writes the report to `stdout`.
/// Returns the exit code.
pub fn run_with<I, T>(args: I, stdin: &mut dyn BufRead, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let _ = write!(stderr, "{e}");
            let report = Report {
                command: "qsr",
                version: VERSION,
                status: "error",
                input: Value::Null,
                result: Value::Null,
                error: Some(e.kind().to_string()),
            };
            emit(stdout, &report);
            return EXIT_USAGE;
        }
    };
    let (command, input, outcome) = match &cli.command {
        Command::Verify(a) => ("verify", json!({ "path": a.input, "params": params_json(&a.params) }), verify(a, stdin)),
        Command::Analyze(a) => ("analyze", json!({ "path": a.input }), analyze_cmd(a, stdin)),
        Command::Enumerate(a) => ("enumerate", enumerate_input(a), enumerate_cmd(a)),
        Command::Bounds(a) => ("bounds", json!({ "k": a.k }), bounds(a)),
        Command::Catalog(a) => ("catalog", json!({ "name": a.name, "out": a.out }), catalog(a)),
    };
    if let Some(msg) = &outcome.error {
        let _ = writeln!(stderr, "qsr {command}: {msg}");
    }
    let status = match outcome.code {
        EXIT_OK => "ok",
        EXIT_FALSE => "false",
        _ => "error",
    };
    let report = Report { command, version: VERSION, status, input, result: outcome.result, error: outcome.error };
    emit(stdout, &report);
    outcome.code
}

/// Entry point for the binary.
pub fn run() -> i32 {
    let stdin = io::stdin();
    let mut lock = stdin.lock();
    run_with(std::env::args_os(), &mut lock, &mut io::stdout().lock(), &mut io::stderr().lock())
}

fn emit(out: &mut dyn Write, report: &Report) {
    let line = serde_json::to_string(report).expect("reports serialize");
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

fn params_json(p: &ParamArgs) -> Value {
    json!({ "n": p.n, "k": p.k, "a": p.a, "c": p.c, "strict": p.strict })
}

fn read_graphs(path: &str, stdin: &mut dyn BufRead) -> Result<Vec<Graph>, String> {
    let graphs = if path == "-" {
        read_graph6_lines(stdin)
    } else {
        let file = File::open(path).map_err(|e| format!("{path}: {e}"))?;
        read_graph6_lines(BufReader::new(file))
    };
    let graphs = graphs.map_err(|e| format!("{path}: {e}"))?;
    if graphs.is_empty() {
        return Err(format!("{path}: no graphs"));
    }
    Ok(graphs)
}

fn verify(args: &VerifyArgs, stdin: &mut dyn BufRead) -> Outcome {
    let p = &args.params;
    let mut c = p.c.clone();
    c.sort_unstable_by(|x, y| y.cmp(x));
    let params = match QsrParams::new(p.n, p.k, p.a, c) {
        Ok(params) => params,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let graphs = match read_graphs(&args.input, stdin) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(e),
    };
    let mut checked = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        match check(g, &params, p.strict) {
            Ok(sig) => checked.push(json!({
                "index": index,
                "graph6": g.to_graph6(),
                "holds": true,
                "signature": sig,
            })),
            Err(m) => {
                let reason = m.to_string();
                checked.push(json!({
                    "index": index,
                    "graph6": g.to_graph6(),
                    "holds": false,
                    "reason": reason,
                }));
                let result = json!({ "holds": false, "graphs": checked });
                return Outcome::fail(EXIT_FALSE, result, format!("graph {index}: {reason}"));
            }
        }
    }
    Outcome::ok(json!({ "holds": true, "graphs": checked }))
}

fn analyze_one(g: &Graph) -> Result<Value, QsrError> {
    let sig = analyze(g)?;
    let profiles = (0..g.order())
        .map(|u| t_profile(g, u, &sig.c_values))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(json!({
        "graph6": g.to_graph6(),
        "canonical": canonical_form(g),
        "signature": sig,
        "t_profiles": profiles,
    }))
}

fn analyze_cmd(args: &AnalyzeArgs, stdin: &mut dyn BufRead) -> Outcome {
    let graphs = match read_graphs(&args.input, stdin) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(e),
    };
    let mut done = Vec::new();
    for (index, g) in graphs.iter().enumerate() {
        match analyze_one(g) {
            Ok(v) => done.push(v),
            Err(e) => {
                let result = json!({ "graphs": done });
                return Outcome::fail(EXIT_FALSE, result, format!("graph {index}: {e}"));
            }
        }
    }
    Outcome::ok(json!({ "graphs": done }))
}

fn enumerate_input(a: &EnumerateArgs) -> Value {
    json!({
        "params": params_json(&a.params),
        "proper": a.proper,
        "oracle": a.oracle,
        "out": a.out,
        "jobs": a.jobs,
        "override_budget": a.override_budget,
        "rooted_start": !a.no_rooted_start,
    })
}

fn enumerate_cmd(args: &EnumerateArgs) -> Outcome {
    let p = &args.params;
    let spec = match EnumSpec::new(p.n, p.k, p.a, p.c.iter().copied(), args.proper, p.strict) {
        Ok(s) => s,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let report = if args.oracle {
        brute_force_enumerate(&spec)
    } else {
        let opts = EnumOptions {
            rooted_start: !args.no_rooted_start,
            jobs: args.jobs,
            override_budget: args.override_budget,
            ..EnumOptions::default()
        };
        enumerate_with(&spec, &opts)
    };
    let report: EnumReport = match report {
        Ok(r) => r,
        Err(e @ EnumError::BudgetExceeded { .. }) => return Outcome::fail(EXIT_BUDGET, Value::Null, e.to_string()),
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let certified = certify(&report);
    let mut result = json!({
        "spec": report.spec,
        "count": report.classes.len(),
        "classes": report.classes,
        "nodes_explored": report.nodes_explored,
        "complete": report.complete,
        "elapsed_seconds": report.elapsed_secs,
        "method": report.method,
        "certified": certified.is_ok(),
    });
    if let Some(out) = &args.out {
        if let Err(e) = write_census(&report, out) {
            return Outcome::usage(e.to_string());
        }
        result["census"] = json!(out);
        result["sidecar"] = json!(sidecar_path(out));
    }
    match certified {
        Ok(()) => Outcome::ok(result),
        Err(failure) => {
            let msg = format!("census failed certification: {failure:?}");
            result["certify_failure"] = json!(failure);
            Outcome::fail(EXIT_FALSE, result, msg)
        }
    }
}

fn bounds(args: &BoundsArgs) -> Outcome {
    match sqsr_bounds(args.k) {
        Ok(b) => Outcome::ok(json!(b)),
        Err(e) => Outcome::usage(e.to_string()),
    }
}

fn catalog(args: &CatalogArgs) -> Outcome {
    let g = match build_named(&args.name) {
        Ok(g) => g,
        Err(e) => return Outcome::usage(e.to_string()),
    };
    let line = g.to_graph6();
    if let Some(out) = &args.out {
        if let Err(e) = std::fs::write(out, format!("{line}\n")) {
            return Outcome::usage(format!("{}: {e}", out.display()));
        }
    }
    Outcome::ok(json!({
        "name": args.name,
        "n": g.order(),
        "edges": g.edge_count(),
        "graph6": line,
    }))
}
