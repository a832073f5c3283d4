//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a verification flag is false, 2 for
//! invalid parameters, budget refusals and I/O errors.

use std::ffi::OsString;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Family, Graph, VertexAnnotations};
use crate::isoperimetric::{full_profile, profile_csv, DEFAULT_SUBSET_BUDGET};
use crate::layouts::{algorithm_a, algorithm_b, CutLayout, StarParams};
use crate::oracle::{brute_force_min_wirelength, DEFAULT_PERMUTATION_BUDGET};
use crate::report::{
    default_sweep, report_algorithm_a, report_algorithm_b, rows_to_csv, rows_to_json, verdicts_to_json, Budgets,
    ReportRow,
};

#[derive(Debug, Parser)]
#[command(name = "embedlab", version, about = "Build graphs, lay out embeddings and verify their wirelength")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a graph and export it.
    Build(BuildArgs),
    /// Run a layout algorithm and print its report row.
    Embed(EmbedArgs),
    /// Run a layout algorithm and check every cut; nonzero exit on any failed flag.
    Verify(EmbedArgs),
    /// Brute-force minimum wirelength between two graphs.
    Oracle(OracleArgs),
    /// The standard sweep, or an isoperimetric profile with --family.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

/// Family parameters shared by the commands.
#[derive(Debug, Clone, Default, Args)]
pub struct Params {
    /// Cube dimension.
    #[arg(long)]
    pub s: Option<usize>,
    /// Vertex count (circulant, cycle, path, complete).
    #[arg(long)]
    pub n: Option<usize>,
    /// Circulant jumps are 1..=j.
    #[arg(long)]
    pub j: Option<usize>,
    /// Outer cycle length of a star of cycle.
    #[arg(long)]
    pub k: Option<usize>,
    /// Central cycle length of a star of cycle.
    #[arg(long)]
    pub m: Option<usize>,
    /// Number of ladders in a cycle of ladders.
    #[arg(long)]
    pub l: Option<usize>,
    /// Ladder length.
    #[arg(long)]
    pub r: Option<usize>,
}

#[derive(Debug, Clone, Args)]
pub struct Output {
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// Family name (`col`, `fq`, `circulant`, ...) or a full designator (`col:4,3`).
    #[arg(long)]
    pub family: String,
    #[command(flatten)]
    pub params: Params,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    #[arg(long, value_enum)]
    pub algorithm: Algorithm,
    #[command(flatten)]
    pub params: Params,
    /// Subset budget for exhaustive optimality checks.
    #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
    pub budget: u128,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long)]
    pub guest: String,
    #[arg(long)]
    pub host: String,
    /// Permutation budget.
    #[arg(long, default_value_t = DEFAULT_PERMUTATION_BUDGET)]
    pub budget: u128,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Print the isoperimetric profile of this family instead of the sweep.
    #[arg(long)]
    pub family: Option<String>,
    #[command(flatten)]
    pub params: Params,
    /// Subset budget for exhaustive optimality checks.
    #[arg(long, default_value_t = DEFAULT_SUBSET_BUDGET)]
    pub budget: u128,
    #[command(flatten)]
    pub output: Output,
}

/// Text produced by a command and whether its checks passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    /// Diagnostic for a failed verification.
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, failure: None }
    }
}

fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize> {
    value.ok_or_else(|| Error::InvalidParameters(format!("{family} needs --{flag}")))
}

/// Resolves `--family` against the numeric flags. A full designator such as
/// `col:4,3` is used as is.
pub fn resolve_family(name: &str, p: &Params) -> Result<Family> {
    if let Ok(family) = Family::from_str(name) {
        return Ok(family);
    }
    let name = name.trim().to_ascii_lowercase();
    Ok(match name.as_str() {
        "path" | "p" => Family::Path { vertices: need(p.n, "n", &name)? },
        "cycle" | "c" => Family::Cycle { vertices: need(p.n, "n", &name)? },
        "complete" | "k" => Family::Complete { vertices: need(p.n, "n", &name)? },
        "hypercube" | "q" => Family::Hypercube { dim: need(p.s, "s", &name)? },
        "folded-hypercube" | "fq" => Family::FoldedHypercube { dim: need(p.s, "s", &name)? },
        "circulant" | "circ" => Family::Circulant {
            order: need(p.n, "n", &name)?,
            jumps: (1..=need(p.j, "j", &name)?).collect(),
        },
        "ladder" | "l" => Family::Ladder { length: need(p.r, "r", &name)? },
        "cycle-of-ladders" | "col" => Family::CycleOfLadders {
            ladders: need(p.l, "l", &name)?,
            length: need(p.r, "r", &name)?,
        },
        "star-of-cycle" | "star" => Family::StarOfCycle {
            outer: need(p.k, "k", &name)?,
            central: need(p.m, "m", &name)?,
        },
        _ => return Err(Error::Parse(format!("unknown graph family {name:?}"))),
    })
}

fn build_family(family: &Family) -> Result<Graph> {
    family
        .build()
        .unwrap_or_else(|| Err(Error::InvalidParameters(format!("family {family} does not determine a graph"))))
}

fn star_params(p: &Params) -> Result<StarParams> {
    let family = "algorithm B";
    Ok(StarParams { n: need(p.n, "n", family)?, j: need(p.j, "j", family)?, k: need(p.k, "k", family)?, m: need(p.m, "m", family)? })
}

fn unsupported(command: &str, format: Format) -> Error {
    Error::InvalidParameters(format!("{command} does not support --format {format:?}").to_lowercase())
}

fn rows_output(rows: &[ReportRow], format: Format, command: &str) -> Result<String> {
    match format {
        Format::Csv => Ok(rows_to_csv(rows)),
        Format::Json => Ok(rows_to_json(rows) + "\n"),
        Format::Dot => Err(unsupported(command, format)),
    }
}

fn run_build(args: &BuildArgs) -> Result<Outcome> {
    let graph = build_family(&resolve_family(&args.family, &args.params)?)?;
    Ok(Outcome::ok(match args.output.format.unwrap_or(Format::Json) {
        Format::Json => graph.to_json() + "\n",
        Format::Csv => graph.to_edge_csv(),
        Format::Dot => graph.to_dot(VertexAnnotations::Coordinates),
    }))
}

fn embed_row(args: &EmbedArgs) -> Result<(ReportRow, Box<dyn CutLayout>)> {
    let budgets = Budgets { subsets: args.budget, ..Budgets::default() };
    Ok(match args.algorithm {
        Algorithm::A => {
            let s = need(args.params.s, "s", "algorithm A")?;
            (report_algorithm_a(s, budgets)?, Box::new(algorithm_a(s)?))
        }
        Algorithm::B => {
            let params = star_params(&args.params)?;
            (report_algorithm_b(params, budgets)?, Box::new(algorithm_b(params)?))
        }
    })
}

fn run_embed(args: &EmbedArgs) -> Result<Outcome> {
    let (row, layout) = embed_row(args)?;
    let format = args.output.format.unwrap_or(Format::Csv);
    if format != Format::Json {
        return rows_output(&[row], format, "embed").map(Outcome::ok);
    }
    #[derive(Serialize)]
    struct EmbedJson {
        embedding: serde_json::Value,
        report: ReportRow,
    }
    let embedding = serde_json::from_str(&layout.embedding().to_json()).expect("embedding json parses");
    let value = serde_json::to_value(EmbedJson { embedding, report: row }).expect("embed output serializes");
    Ok(Outcome::ok(serde_json::to_string_pretty(&value).expect("json value serializes") + "\n"))
}

fn run_verify(args: &EmbedArgs) -> Result<Outcome> {
    let (row, layout) = embed_row(args)?;
    let stdout = match args.output.format.unwrap_or(Format::Csv) {
        Format::Json => verdicts_to_json(&layout.verify(args.budget)?) + "\n",
        format => rows_output(std::slice::from_ref(&row), format, "verify")?,
    };
    let failed = row.failed_flags();
    let failure = (!failed.is_empty()).then(|| {
        let mut message = format!("{} {}: failed {}", row.algorithm, row.parameters, failed.join(", "));
        if !row.failures.is_empty() {
            message += &format!(" (cuts: {})", row.failures);
        }
        if failed.contains(&"formula_agrees") {
            message += &format!(" (measured {}, formula {})", row.wl_distance, row.wl_formula);
        }
        message
    });
    Ok(Outcome { stdout, failure })
}

fn run_oracle(args: &OracleArgs) -> Result<Outcome> {
    let guest = build_family(&Family::from_str(&args.guest)?)?;
    let host = build_family(&Family::from_str(&args.host)?)?;
    let result = brute_force_min_wirelength(&guest, &host, args.budget)?;
    Ok(Outcome::ok(match args.output.format.unwrap_or(Format::Json) {
        Format::Json => result.to_json() + "\n",
        Format::Csv => {
            let map = result.witness_map.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(" ");
            format!(
                "guest,host,minimum_wirelength,searched,pruned,witness_map\n{},{},{},{},{},{}\n",
                guest.family(),
                host.family(),
                result.minimum_wirelength,
                result.searched,
                result.pruned,
                map
            )
        }
        format => return Err(unsupported("oracle", format)),
    }))
}

fn run_report(args: &ReportArgs) -> Result<Outcome> {
    let format = args.output.format.unwrap_or(Format::Csv);
    let Some(family) = &args.family else {
        let rows = default_sweep(Budgets { subsets: args.budget, ..Budgets::default() })?;
        return rows_output(&rows, format, "report").map(Outcome::ok);
    };
    let graph = build_family(&resolve_family(family, &args.params)?)?;
    let profile = full_profile(&graph, args.budget)?;
    Ok(Outcome::ok(match format {
        Format::Csv => profile_csv(&profile),
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                #[serde(flatten)]
                profile: &'a crate::isoperimetric::IsoperimetricProfile,
                certificate: String,
            }
            let rows: Vec<Row> = profile.iter().map(|(p, c)| Row { profile: p, certificate: c.to_string() }).collect();
            let value = serde_json::to_value(rows).expect("profile serializes");
            serde_json::to_string_pretty(&value).expect("json value serializes") + "\n"
        }
        Format::Dot => return Err(unsupported("report", format)),
    }))
}

fn output_of(command: &Command) -> &Output {
    match command {
        Command::Build(a) => &a.output,
        Command::Embed(a) | Command::Verify(a) => &a.output,
        Command::Oracle(a) => &a.output,
        Command::Report(a) => &a.output,
    }
}

/// Runs a parsed command without touching stdout.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Build(a) => run_build(a),
        Command::Embed(a) => run_embed(a),
        Command::Verify(a) => run_verify(a),
        Command::Oracle(a) => run_oracle(a),
        Command::Report(a) => run_report(a),
    }
}

/// Parses `args`, runs the command, writes its output and returns the exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let outcome = match execute(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &output_of(&cli.command).out {
        Some(path) => std::fs::write(path, &outcome.stdout),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(outcome.stdout.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match outcome.failure {
        Some(message) => {
            eprintln!("verification failed: {message}");
            ExitCode::from(1)
        }
        None => ExitCode::SUCCESS,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<Outcome> {
        execute(&Cli::try_parse_from(std::iter::once("embedlab").chain(args.iter().copied())).unwrap())
    }

    #[test]
    fn family_resolution() {
        let p = Params { l: Some(4), r: Some(3), ..Params::default() };
        assert_eq!(resolve_family("col", &p).unwrap(), Family::CycleOfLadders { ladders: 4, length: 3 });
        assert_eq!(resolve_family("col:2,1", &p).unwrap(), Family::CycleOfLadders { ladders: 2, length: 1 });
        assert!(resolve_family("col", &Params::default()).is_err());
        let c = Params { n: Some(8), j: Some(2), ..Params::default() };
        assert_eq!(resolve_family("circulant", &c).unwrap(), Family::Circulant { order: 8, jumps: vec![1, 2] });
    }

    #[test]
    fn build_dot() {
        let out = exec(&["build", "--family", "col", "--l", "4", "--r", "3", "--format", "dot"]).unwrap();
        assert_eq!(out.stdout.matches("[coord=").count(), 32);
        assert_eq!(out.stdout.matches(" -- ").count(), 44);
    }

    #[test]
    fn embed_csv_row() {
        let out = exec(&["embed", "--algorithm", "A", "--s", "5", "--format", "csv"]).unwrap();
        let lines: Vec<&str> = out.stdout.lines().collect();
        assert_eq!(lines.len(), 2);
        assert!(lines[1].starts_with("A,s=5,320,320,320,320,"));
    }

    #[test]
    fn verify_flags_formula_disagreement() {
        let ok = exec(&["verify", "--algorithm", "a", "--s", "3"]).unwrap();
        assert_eq!(ok.failure, None);
        let bad = exec(&["verify", "--algorithm", "B", "--n", "20", "--j", "2", "--k", "4", "--m", "4"]).unwrap();
        assert!(bad.failure.unwrap().contains("formula_agrees"));
    }

    #[test]
    fn oracle_and_refusal() {
        let out = exec(&["oracle", "--guest", "fq3", "--host", "col:4,0"]).unwrap();
        assert!(out.stdout.contains("\"minimum_wirelength\":32"));
        let refused = exec(&["oracle", "--guest", "c8", "--host", "c8", "--budget", "100"]);
        assert!(matches!(refused, Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn bad_parameters_are_errors() {
        assert!(exec(&["embed", "--algorithm", "B", "--n", "16", "--j", "1", "--k", "3", "--m", "4"]).is_err());
        assert!(exec(&["embed", "--algorithm", "A"]).is_err());
        assert!(exec(&["oracle", "--guest", "fq3", "--host", "c8", "--format", "dot"]).is_err());
    }
}
