//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage, 2 parse (malformed or unreadable input
//! file), 3 domain (a violated precondition of the underlying operation, or
//! a failed verification).

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::chain::{complete_chain, CobwebChain, LevelSequence};
use crate::counting::{
    compositions, fubini, multinomial, relations_of_type, relations_total, stirling2,
    surjection_count, CompositionType,
};
use crate::error::Error;
use crate::ferrers;
use crate::matrix::BoolMatrix;
use crate::oracle::{self, GradedConstraint};
use crate::verify;

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_DOMAIN: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cobweb",
    version,
    about = "Cobweb posets, Ferrers dimension and exact counts"
)]
struct Cli {
    /// Emit a single JSON document on standard output.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build and inspect cobweb chains.
    #[command(subcommand)]
    Cobweb(CobwebCommand),
    /// Ferrers analysis of a matrix file.
    #[command(subcommand)]
    Ferrers(FerrersCommand),
    /// Evaluate a counting formula.
    #[command(subcommand)]
    Count(CountCommand),
    /// Stream enumerated objects.
    #[command(subcommand)]
    Enumerate(EnumerateCommand),
    /// Check every counting formula against its enumeration oracles.
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_MAX_N)]
        max_n: usize,
    },
}

#[derive(Debug, Args)]
struct ChainSource {
    /// Comma-separated level sizes, e.g. `2,3,1`.
    #[arg(long)]
    levels: Option<String>,
    /// Use all-ones blocks.
    #[arg(long)]
    complete: bool,
    /// File with the k-1 blocks in matrix text format, separated by blank lines.
    #[arg(long, value_name = "FILE")]
    blocks: Option<PathBuf>,
    /// Chain file (levels and blocks).
    #[arg(long, value_name = "FILE")]
    chain: Option<PathBuf>,
    /// Remove an arc, given as `BLOCK:ROW:COL` (0-based). Repeatable.
    #[arg(long, value_name = "B:R:C")]
    delete: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum CobwebCommand {
    /// Write the chain in chain file format.
    Build(ChainSource),
    /// Zeta matrix (reflexive order).
    Zeta(ChainSource),
    /// Strict order matrix.
    Strict(ChainSource),
    /// Hasse adjacency matrix.
    Adjacency(ChainSource),
    /// Block-diagonal biadjacency matrix.
    Biadjacency(ChainSource),
    /// Graphviz DOT export.
    Dot(ChainSource),
    /// Completeness and cobweb (Ferrers blocks) classification.
    Info(ChainSource),
}

#[derive(Debug, Subcommand)]
enum FerrersCommand {
    /// Ferrers dimension 1 test with a forbidden-submatrix witness.
    Check { file: PathBuf },
    /// Brute-force Ferrers dimension (at most 12 cells).
    Dim {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_d: usize,
    },
    /// Fewest arcs to add for Ferrers dimension 1 (at most 20 cells).
    Complete { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum CountCommand {
    /// Complete cobwebs of a given type: n! / (f_1! ... f_k!).
    CobwebType { n: usize, parts: String },
    /// Complete k-level cobwebs: k! S(n,k).
    CobwebK { n: usize, k: usize },
    /// All complete cobwebs on n points (ordered Bell number).
    CobwebTotal { n: usize },
    /// Non-empty relations of a type: 2^(f_1 ... f_k) - 1.
    RelationsType { parts: String },
    /// Sum of relations-type over all compositions of n.
    RelationsTotal { n: usize },
    /// Stirling number of the second kind.
    Stirling2 { n: usize, k: usize },
    /// Experimental: graded relation chains of a type.
    GradedType {
        parts: String,
        #[arg(long, default_value = "all-blocks")]
        constraint: String,
    },
    /// Experimental: graded relation chains over all types of n.
    GradedTotal {
        n: usize,
        #[arg(long, default_value = "all-blocks")]
        constraint: String,
    },
}

#[derive(Debug, Subcommand)]
enum EnumerateCommand {
    /// Ordered set partitions of {0..n-1}.
    OrderedPartitions {
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Ordered set partitions with prescribed block sizes.
    TypedPartitions { n: usize, parts: String },
    /// Compositions of n in lexicographic order.
    Compositions {
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Graded relation chains of a type, in chain file format.
    GradedChains {
        parts: String,
        #[arg(long, default_value = "all-blocks")]
        constraint: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

/// Outcome of one invocation.
#[derive(Debug, Clone, Serialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub message: Option<String>,
    #[serde(skip)]
    pub text: String,
    #[serde(skip)]
    pub exit_code: u8,
    #[serde(skip)]
    pub json: bool,
}

impl CommandResult {
    /// Content for standard output.
    pub fn stdout(&self) -> String {
        if self.json {
            let mut s = serde_json::to_string_pretty(self).expect("result serializes");
            s.push('\n');
            s
        } else {
            self.text.clone()
        }
    }

    /// Content for standard error, if any.
    pub fn stderr(&self) -> Option<String> {
        match (self.status, self.json) {
            (Status::Error, false) => self.message.as_ref().map(|m| format!("error: {m}")),
            _ => None,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
    payload: Value,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_PARSE,
            _ => EXIT_DOMAIN,
        };
        Failure {
            code,
            message: e.to_string(),
            payload: Value::Null,
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
        payload: Value::Null,
    }
}

struct Output {
    payload: Value,
    text: String,
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let json = argv.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return CommandResult {
                    status: Status::Ok,
                    payload: Value::Null,
                    message: None,
                    text: rendered,
                    exit_code: EXIT_OK,
                    json: false,
                };
            }
            let message = rendered.trim_end();
            let message = message.strip_prefix("error: ").unwrap_or(message);
            return fail(usage(message.to_string()), json);
        }
    };
    match dispatch(&cli.command) {
        Ok(out) => CommandResult {
            status: Status::Ok,
            payload: out.payload,
            message: None,
            text: out.text,
            exit_code: EXIT_OK,
            json: cli.json,
        },
        Err(f) => fail(f, cli.json),
    }
}

fn fail(f: Failure, json: bool) -> CommandResult {
    CommandResult {
        status: Status::Error,
        payload: f.payload,
        message: Some(f.message),
        text: String::new(),
        exit_code: f.code,
        json,
    }
}

fn dispatch(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Cobweb(c) => cobweb(c),
        Command::Ferrers(c) => ferrers_cmd(c),
        Command::Count(c) => count(c),
        Command::Enumerate(c) => enumerate(c),
        Command::Verify { max_n } => verify_cmd(*max_n),
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: format!("cannot read {}: {e}", path.display()),
        payload: Value::Null,
    })
}

/// Parse errors inside a file are reported with the file name.
fn in_file(path: &Path) -> impl Fn(Error) -> Failure + '_ {
    move |e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    }
}

/// Inline arguments that fail to parse are usage errors, not file errors.
fn inline<T>(r: crate::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| match e {
        Error::Parse { message, .. } => usage(message),
        other => other.into(),
    })
}

fn matrix_json(m: &BoolMatrix) -> Value {
    let rows: Vec<String> = m.to_text().lines().skip(1).map(str::to_owned).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

fn chain_json(c: &CobwebChain) -> Value {
    json!({
        "levels": c.levels(),
        "blocks": c.blocks().iter().map(matrix_json).collect::<Vec<_>>(),
    })
}

fn matrix_output(m: &BoolMatrix) -> Output {
    Output {
        payload: json!({ "matrix": matrix_json(m) }),
        text: m.to_text(),
    }
}

fn load_chain(src: &ChainSource) -> Result<CobwebChain, Failure> {
    let chain = match (&src.chain, &src.levels) {
        (Some(_), Some(_)) => return Err(usage("--chain cannot be combined with --levels")),
        (Some(path), None) => {
            if src.complete || src.blocks.is_some() {
                return Err(usage(
                    "--chain cannot be combined with --complete or --blocks",
                ));
            }
            CobwebChain::parse_text(&read_file(path)?).map_err(in_file(path))?
        }
        (None, Some(levels)) => {
            let levels = inline(LevelSequence::parse(levels))?;
            match (src.complete, &src.blocks) {
                (true, None) => complete_chain(&levels)?,
                (false, Some(path)) => {
                    CobwebChain::parse_blocks(levels, &read_file(path)?).map_err(in_file(path))?
                }
                (true, Some(_)) => {
                    return Err(usage("use either --complete or --blocks, not both"))
                }
                (false, None) => return Err(usage("--levels needs --complete or --blocks FILE")),
            }
        }
        (None, None) => {
            return Err(usage(
                "give --levels with --complete/--blocks, or --chain FILE",
            ))
        }
    };
    let mut deletions: BTreeMap<usize, BTreeSet<(usize, usize)>> = BTreeMap::new();
    for d in &src.delete {
        let nums: Vec<usize> = d
            .split(':')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<_, _>>()
            .map_err(|_| usage(format!("--delete expects BLOCK:ROW:COL, got `{d}`")))?;
        let [b, r, c] = nums[..] else {
            return Err(usage(format!("--delete expects BLOCK:ROW:COL, got `{d}`")));
        };
        deletions.entry(b).or_default().insert((r, c));
    }
    let mut chain = chain;
    for (b, arcs) in &deletions {
        chain = chain.delete_arcs(*b, arcs)?;
    }
    Ok(chain)
}

fn cobweb(command: &CobwebCommand) -> Result<Output, Failure> {
    match command {
        CobwebCommand::Build(src) => {
            let c = load_chain(src)?;
            Ok(Output {
                payload: json!({ "chain": chain_json(&c) }),
                text: c.to_text(),
            })
        }
        CobwebCommand::Zeta(src) => Ok(matrix_output(&load_chain(src)?.zeta_matrix())),
        CobwebCommand::Strict(src) => Ok(matrix_output(&load_chain(src)?.strict_order_matrix())),
        CobwebCommand::Adjacency(src) => Ok(matrix_output(&load_chain(src)?.adjacency_matrix())),
        CobwebCommand::Biadjacency(src) => Ok(matrix_output(&load_chain(src)?.biadjacency_diag()?)),
        CobwebCommand::Dot(src) => {
            let dot = load_chain(src)?.to_dot();
            Ok(Output {
                payload: json!({ "dot": dot }),
                text: dot,
            })
        }
        CobwebCommand::Info(src) => {
            let c = load_chain(src)?;
            let (complete, cobweb) = (c.is_complete(), c.is_cobweb());
            Ok(Output {
                payload: json!({
                    "levels": c.levels(),
                    "vertices": c.vertex_count(),
                    "is_complete": complete,
                    "is_cobweb": cobweb,
                }),
                text: format!(
                    "levels: {:?}\nvertices: {}\nis_complete: {complete}\nis_cobweb: {cobweb}\n",
                    c.levels().sizes(),
                    c.vertex_count()
                ),
            })
        }
    }
}

fn load_matrix(path: &Path) -> Result<BoolMatrix, Failure> {
    BoolMatrix::parse_text(&read_file(path)?).map_err(in_file(path))
}

fn report_text(report: &ferrers::FerrersReport) -> String {
    let mut s = format!("is_dim1: {}\n", report.is_dim1);
    if let Some(w) = report.witness {
        let _ = writeln!(s, "witness: rows {},{} cols {},{}", w.r1, w.r2, w.c1, w.c2);
    }
    s
}

fn ferrers_cmd(command: &FerrersCommand) -> Result<Output, Failure> {
    match command {
        FerrersCommand::Check { file } => {
            let report = ferrers::is_ferrers_dim1(&load_matrix(file)?);
            Ok(Output {
                payload: json!({ "report": report }),
                text: report_text(&report),
            })
        }
        FerrersCommand::Dim { file, max_d } => {
            let m = load_matrix(file)?;
            let mut report = ferrers::is_ferrers_dim1(&m);
            report.dimension = ferrers::ferrers_dimension(&m, *max_d)?;
            let mut text = report_text(&report);
            match report.dimension {
                Some(d) => {
                    let _ = writeln!(text, "dimension: {d}");
                }
                None => {
                    let _ = writeln!(text, "dimension: greater than {max_d}");
                }
            }
            Ok(Output {
                payload: json!({ "report": report, "max_d": max_d }),
                text,
            })
        }
        FerrersCommand::Complete { file } => {
            let m = load_matrix(file)?;
            let mut report = ferrers::is_ferrers_dim1(&m);
            let completion = ferrers::min_completion_to_ferrers(&m)?;
            report.completion_arcs = Some(completion.arcs.clone());
            let mut text = report_text(&report);
            let arcs: Vec<String> = completion
                .arcs
                .iter()
                .map(|(r, c)| format!("({r},{c})"))
                .collect();
            let _ = writeln!(text, "count: {}", completion.count);
            let _ = writeln!(text, "arcs: {}", arcs.join(" "));
            text.push_str(&completion.completed.to_text());
            Ok(Output {
                payload: json!({
                    "report": report,
                    "count": completion.count,
                    "completed": matrix_json(&completion.completed),
                }),
                text,
            })
        }
    }
}

fn count_output(formula: &str, inputs: Value, value: crate::BigCount) -> Output {
    let value = value.to_string();
    Output {
        text: format!("{value}\n"),
        payload: json!({ "formula": formula, "inputs": inputs, "value": value }),
    }
}

fn parse_constraint(name: &str) -> Result<GradedConstraint, Failure> {
    name.parse().map_err(|e: Error| usage(e.to_string()))
}

fn count(command: &CountCommand) -> Result<Output, Failure> {
    Ok(match command {
        CountCommand::CobwebType { n, parts } => {
            let t = inline(CompositionType::parse(parts))?;
            let v = multinomial(*n, &t)?;
            count_output("cobweb-type", json!({ "n": n, "type": t }), v)
        }
        CountCommand::CobwebK { n, k } => count_output(
            "cobweb-k",
            json!({ "n": n, "k": k }),
            surjection_count(*n, *k),
        ),
        CountCommand::CobwebTotal { n } => {
            count_output("cobweb-total", json!({ "n": n }), fubini(*n))
        }
        CountCommand::RelationsType { parts } => {
            let t = inline(CompositionType::parse(parts))?;
            let v = relations_of_type(&t)?;
            count_output("relations-type", json!({ "type": t }), v)
        }
        CountCommand::RelationsTotal { n } => {
            count_output("relations-total", json!({ "n": n }), relations_total(*n)?)
        }
        CountCommand::Stirling2 { n, k } => {
            count_output("stirling2", json!({ "n": n, "k": k }), stirling2(*n, *k))
        }
        CountCommand::GradedType { parts, constraint } => {
            let t = inline(CompositionType::parse(parts))?;
            let c = parse_constraint(constraint)?;
            let v = oracle::enum_graded_chains(&t, c)?;
            let mut out = count_output("graded-type", json!({ "type": t, "constraint": c }), v);
            out.payload["experimental"] = json!(true);
            out
        }
        CountCommand::GradedTotal { n, constraint } => {
            let c = parse_constraint(constraint)?;
            let v = oracle::enum_graded_total(*n, c)?;
            let mut out = count_output("graded-total", json!({ "n": n, "constraint": c }), v);
            out.payload["experimental"] = json!(true);
            out
        }
    })
}

fn enumerate(command: &EnumerateCommand) -> Result<Output, Failure> {
    let mut text = String::new();
    let mut items = Vec::new();
    let object = match command {
        EnumerateCommand::OrderedPartitions { n, k } => {
            oracle::for_each_ordered_partition(*n, *k, |p| {
                let _ = writeln!(text, "{p}");
                items.push(json!(p));
            })?;
            "ordered-partitions"
        }
        EnumerateCommand::TypedPartitions { n, parts } => {
            let t = inline(CompositionType::parse(parts))?;
            oracle::for_each_partition_of_type(*n, &t, |p| {
                let _ = writeln!(text, "{p}");
                items.push(json!(p));
            })?;
            "typed-partitions"
        }
        EnumerateCommand::Compositions { n, k } => {
            for c in compositions(*n, *k)? {
                let parts: Vec<String> = c.parts().iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "{}", parts.join(","));
                items.push(json!(c));
            }
            "compositions"
        }
        EnumerateCommand::GradedChains { parts, constraint } => {
            let t = inline(CompositionType::parse(parts))?;
            let c = parse_constraint(constraint)?;
            oracle::for_each_graded_chain(&t, c, |chain| {
                if !items.is_empty() {
                    text.push_str("--\n");
                }
                text.push_str(&chain.to_text());
                items.push(chain_json(chain));
            })?;
            "graded-chains"
        }
    };
    Ok(Output {
        payload: json!({ "object": object, "count": items.len(), "items": items }),
        text,
    })
}

fn verify_cmd(max_n: usize) -> Result<Output, Failure> {
    let report = verify::run(max_n)?;
    let text = report.to_text();
    let payload = json!({ "report": report });
    if report.all_passed() {
        Ok(Output { payload, text })
    } else {
        Err(Failure {
            code: EXIT_DOMAIN,
            message: format!("{} verification checks failed\n{text}", report.failed),
            payload,
        })
    }
}
