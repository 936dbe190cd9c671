//! The `domchrom` command-line front end.
//!
//! Graphs are read as graph6, one per line, from an inline argument, a file
//! given with `--input`, or standard input (`-` or no input at all). Blank
//! lines are ignored.
//!
//! Exit codes: 0 success, 1 violation or invalid coloring, 2 usage or parse
//! error, 3 budget exhausted.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coloring::{diagnose, Coloring};
use crate::error::Error;
use crate::generate;
use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::harness::{run_corpus, HarnessConfig, SCHEMA_VERSION};
use crate::ops;
use crate::solver::{chi_dd_exact, chi_dd_oracle, Budget};
use crate::structure::CycleSpec;
use crate::witness::{extend_witness, reduce_witness, ExtendKind, ReduceKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "domchrom",
    version,
    about = "Domination colorings of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Csv,
}

#[derive(Debug, Args)]
struct Input {
    /// Inline graph6 string.
    graph: Option<String>,
    /// File of graph6 lines, or `-` for stdin.
    #[arg(short, long, conflicts_with = "graph")]
    input: Option<String>,
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact domination chromatic number with a witness coloring.
    Solve {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Search-node budget per graph (default: $DOMCHROM_BUDGET or 10^7).
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Check whether a coloring is a domination coloring.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        /// Colors in vertex order, e.g. `0,1,0,1`.
        #[arg(long)]
        coloring: String,
    },
    /// Apply a graph operation and print the result with its id map.
    Apply {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum)]
        op: Op,
        /// Vertex, pair `u,v`, subdivision length, or cycle `v0,v1,...`.
        #[arg(long)]
        params: String,
    },
    /// Run a recoloring construction on a base coloring.
    ///
    /// The graph is always G. The base coloring is on G - v, G - e for the
    /// `add-*` kinds, on the contracted graph for `uncontract`, on the
    /// cycle extension for `remove-hub`, and on G otherwise.
    Witness {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        params: String,
        /// Base coloring in vertex order.
        #[arg(long)]
        coloring: String,
    },
    /// Check the theorems over a corpus and print the report.
    Verify {
        /// Corpus file of graph6 lines (`-` for stdin). Without it, all
        /// connected graphs of order 1..=n-max are generated.
        #[arg(short, long)]
        input: Option<String>,
        #[command(flatten)]
        output: Output,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Comma-separated theorem numbers.
        #[arg(long, default_value = "1,2,3,4,5,6")]
        theorems: String,
        /// Subdivision lengths, `lo..hi` inclusive or a single value.
        #[arg(long, default_value = "2..4")]
        k_range: String,
        /// Longest cycle used for cycle extension (default min(n, 6)).
        #[arg(long)]
        cycle_cap: Option<usize>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print every connected labeled graph of order n as graph6.
    Gen {
        n: usize,
        /// Emit orders 1..=n instead of exactly n.
        #[arg(long)]
        up_to: bool,
    },
    /// Brute-force domination chromatic number (order at most 8).
    Oracle {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Op {
    RemoveVertex,
    RemoveEdge,
    ContractEdge,
    ContractVertices,
    Subdivide,
    CycleExtend,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    AddVertex,
    AddEdge,
    ContractEdge,
    ContractVertices,
    CycleExtend,
    RemoveVertex,
    RemoveEdge,
    Uncontract,
    RemoveHub,
}

/// A failure that ends the command with a message and exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::BudgetExhausted => EXIT_BUDGET,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        // A closed downstream pipe is a normal end of output.
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure {
                code: EXIT_OK,
                message: String::new(),
            };
        }
        Failure::usage(e.to_string())
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the CLI against the process's stdin, stdout and stderr.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(
        args,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut stderr.lock(),
    )
}

/// Parses `args` (including the program name) and runs the subcommand.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let result = dispatch(cli.command, stdin, out, err);
    let _ = out.flush();
    match result {
        Ok(code) => code,
        Err(f) => {
            if !f.message.is_empty() {
                let _ = writeln!(err, "domchrom: {}", f.message);
            }
            f.code
        }
    }
}

fn dispatch(
    command: Command,
    stdin: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    match command {
        Command::Solve {
            input,
            output,
            budget,
        } => solve(
            &read_graphs(&input, stdin)?,
            output.format,
            resolve_budget(budget),
            out,
            err,
        ),
        Command::Check {
            input,
            output,
            coloring,
        } => check(&read_one(&input, stdin)?, &coloring, output.format, out),
        Command::Apply {
            input,
            output,
            op,
            params,
        } => apply(&read_one(&input, stdin)?, op, &params, output.format, out),
        Command::Witness {
            input,
            output,
            kind,
            params,
            coloring,
        } => witness(
            &read_one(&input, stdin)?,
            kind,
            &params,
            &coloring,
            output.format,
            out,
        ),
        Command::Verify {
            input,
            output,
            n_max,
            theorems,
            k_range,
            cycle_cap,
            workers,
            budget,
        } => {
            let (graphs, description) = match input {
                Some(path) => (read_source(&path, stdin)?, format!("file {path}")),
                None => (
                    generate::connected_graphs_up_to(1, n_max)?,
                    format!("connected graphs, 1 <= n <= {n_max}"),
                ),
            };
            let (k_min, k_max) = parse_k_range(&k_range)?;
            let config = HarnessConfig {
                k_min,
                k_max,
                cycle_cap,
                workers,
                budget: resolve_budget(budget),
                ..HarnessConfig::default()
            }
            .with_theorems(&parse_theorems(&theorems)?);
            verify(&graphs, &description, config, output.format, out, err)
        }
        Command::Gen { n, up_to } => {
            let lo = if up_to { 1 } else { n };
            for order in lo..=n {
                for g in generate::connected_graphs(order)? {
                    writeln!(out, "{}", to_graph6(&g))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle { input, output } => {
            oracle(&read_graphs(&input, stdin)?, output.format, out)
        }
    }
}

fn resolve_budget(flag: Option<u64>) -> Budget {
    flag.map(Budget::nodes).unwrap_or_else(Budget::from_env)
}

fn read_source(path: &str, stdin: &mut dyn Read) -> std::result::Result<Vec<Graph>, Failure> {
    let mut text = String::new();
    if path == "-" {
        stdin.read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{path}: {e}")))?;
    }
    crate::graph6::parse_lines(&text)
        .map_err(|(line, e)| Failure::usage(format!("line {line}: {e}")))
}

fn read_graphs(input: &Input, stdin: &mut dyn Read) -> std::result::Result<Vec<Graph>, Failure> {
    match (&input.graph, &input.input) {
        (Some(inline), _) => Ok(vec![parse_graph6(inline.trim())?]),
        (None, Some(path)) => read_source(path, stdin),
        (None, None) => read_source("-", stdin),
    }
}

fn read_one(input: &Input, stdin: &mut dyn Read) -> std::result::Result<Graph, Failure> {
    let mut graphs = read_graphs(input, stdin)?;
    match graphs.len() {
        1 => Ok(graphs.pop().expect("one graph")),
        0 => Err(Failure::usage("no graph given")),
        n => Err(Failure::usage(format!("expected one graph, got {n}"))),
    }
}

fn parse_list(s: &str) -> std::result::Result<Vec<usize>, Failure> {
    s.split(|c: char| c == ',' || c == '-' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse().map_err(|_| {
                Failure::usage(format!("expected a non-negative integer, found {t:?}"))
            })
        })
        .collect()
}

fn parse_exact<const N: usize>(s: &str, what: &str) -> std::result::Result<[usize; N], Failure> {
    let values = parse_list(s)?;
    values.try_into().map_err(|v: Vec<usize>| {
        Failure::usage(format!("{what} takes {N} value(s), got {}", v.len()))
    })
}

fn parse_theorems(s: &str) -> std::result::Result<Vec<u8>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<u8>() {
            Ok(n) if (1..=6).contains(&n) => Ok(n),
            _ => Err(Failure::usage(format!(
                "unknown theorem {t:?} (expected 1-6)"
            ))),
        })
        .collect()
}

/// Accepts `lo..hi`, `lo..=hi`, `lo-hi` (all inclusive) or a single value.
fn parse_k_range(s: &str) -> std::result::Result<(usize, usize), Failure> {
    let bad = || Failure::usage(format!("bad k-range {s:?}"));
    let (lo, hi) = if let Some((a, b)) = s.split_once("..") {
        (a, b.trim_start_matches('='))
    } else if let Some((a, b)) = s.split_once('-') {
        (a, b)
    } else {
        (s, s)
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

fn parse_coloring(s: &str) -> std::result::Result<Coloring, Failure> {
    Ok(s.parse::<Coloring>()?)
}

fn emit_json(out: &mut dyn Write, mut value: Value) -> std::io::Result<()> {
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(SCHEMA_VERSION));
    }
    writeln!(out, "{value}")
}

fn solve(
    graphs: &[Graph],
    format: Format,
    budget: Budget,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let started = Instant::now();
    let mut unknown = 0;
    if format == Format::Csv {
        writeln!(out, "graph,n,m,chi_dd,lower,upper,witness,nodes")?;
    }
    for g in graphs {
        let r = chi_dd_exact(g, budget)?;
        let code = to_graph6(g);
        if !r.is_exact() {
            unknown += 1;
        }
        match format {
            Format::Json => emit_json(
                out,
                json!({
                    "graph": code,
                    "n": g.order(),
                    "m": g.size(),
                    "chi_dd": r.chi_dd(),
                    "lower": r.lower,
                    "upper": r.upper,
                    "exact": r.is_exact(),
                    "witness": r.witness,
                    "nodes": r.stats.nodes,
                }),
            )?,
            Format::Text => match r.chi_dd() {
                Some(chi) => writeln!(out, "{code}\tchi_dd={chi}\twitness={}", r.witness)?,
                None => writeln!(
                    out,
                    "{code}\tchi_dd in [{}, {}]\tbudget exhausted\twitness={}",
                    r.lower, r.upper, r.witness
                )?,
            },
            Format::Csv => writeln!(
                out,
                "{code},{},{},{},{},{},\"{}\",{}",
                g.order(),
                g.size(),
                r.chi_dd().map(|c| c.to_string()).unwrap_or_default(),
                r.lower,
                r.upper,
                r.witness,
                r.stats.nodes
            )?,
        }
    }
    writeln!(
        err,
        "solved {} graph(s) in {:?}",
        graphs.len(),
        started.elapsed()
    )?;
    Ok(if unknown > 0 { EXIT_BUDGET } else { EXIT_OK })
}

fn check(g: &Graph, coloring: &str, format: Format, out: &mut dyn Write) -> CmdResult {
    let c = parse_coloring(coloring)?;
    let d = diagnose(g, &c)?;
    let valid = d.is_domination_coloring();
    match format {
        Format::Json => emit_json(
            out,
            json!({
                "graph": to_graph6(g),
                "coloring": c,
                "valid": valid,
                "proper": d.improper_edges.is_empty(),
                "diagnostic": d,
            }),
        )?,
        Format::Text => {
            writeln!(out, "verdict: {valid}")?;
            writeln!(out, "diagnostic: {d}")?;
        }
        Format::Csv => {
            writeln!(
                out,
                "graph,coloring,valid,undominating_vertices,undominated_classes,improper_edges"
            )?;
            let join = |xs: &[usize]| {
                xs.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let edges: Vec<String> = d
                .improper_edges
                .iter()
                .map(|(u, v)| format!("{u}-{v}"))
                .collect();
            writeln!(
                out,
                "{},\"{c}\",{valid},{},{},{}",
                to_graph6(g),
                join(&d.undominating_vertices),
                join(&d.undominated_classes),
                edges.join(" ")
            )?;
        }
    }
    Ok(if valid { EXIT_OK } else { EXIT_VIOLATION })
}

fn apply(g: &Graph, op: Op, params: &str, format: Format, out: &mut dyn Write) -> CmdResult {
    let n = g.order();
    let identity = || -> Vec<Option<usize>> { (0..n).map(Some).collect() };
    let mut superedges = None;
    let mut hub = None;
    let (result, vertex_map) = match op {
        Op::RemoveVertex => {
            let [v] = parse_exact::<1>(params, "remove-vertex")?;
            let t = ops::remove_vertex(g, v)?;
            (t.graph, t.vertex_map)
        }
        Op::RemoveEdge => {
            let [u, v] = parse_exact::<2>(params, "remove-edge")?;
            (ops::remove_edge(g, u, v)?, identity())
        }
        Op::ContractEdge => {
            let [u, v] = parse_exact::<2>(params, "contract-edge")?;
            let t = ops::contract_edge(g, u, v)?;
            (t.graph, t.vertex_map)
        }
        Op::ContractVertices => {
            let [u, v] = parse_exact::<2>(params, "contract-vertices")?;
            let t = ops::contract_vertices(g, u, v)?;
            (t.graph, t.vertex_map)
        }
        Op::Subdivide => {
            let [k] = parse_exact::<1>(params, "subdivide")?;
            let (s, map) = ops::subdivide(g, k)?;
            superedges = Some(map.superedges);
            (s, identity())
        }
        Op::CycleExtend => {
            let cycle = CycleSpec::new(g, parse_list(params)?)?;
            hub = Some(n);
            (ops::cycle_extend(g, &cycle)?, identity())
        }
    };
    let code = to_graph6(&result);
    match format {
        Format::Json => {
            let mut value = json!({
                "graph": code,
                "n": result.order(),
                "m": result.size(),
                "vertex_map": vertex_map,
            });
            if let Some(s) = &superedges {
                value["superedges"] = json!(s);
            }
            if let Some(h) = hub {
                value["hub"] = json!(h);
            }
            emit_json(out, value)?;
        }
        Format::Text => {
            writeln!(out, "{code}")?;
            writeln!(out, "old\tnew")?;
            for (old, new) in vertex_map.iter().enumerate() {
                match new {
                    Some(x) => writeln!(out, "{old}\t{x}")?,
                    None => writeln!(out, "{old}\t-")?,
                }
            }
            if let Some(h) = hub {
                writeln!(out, "hub\t{h}")?;
            }
            if let Some(s) = &superedges {
                writeln!(out, "edge\tpath")?;
                for e in s {
                    let path: Vec<String> = e.path.iter().map(|v| v.to_string()).collect();
                    writeln!(
                        out,
                        "{}-{}\t{}",
                        e.endpoints.0,
                        e.endpoints.1,
                        path.join("-")
                    )?;
                }
            }
        }
        Format::Csv => {
            writeln!(out, "graph,old,new")?;
            for (old, new) in vertex_map.iter().enumerate() {
                let new = new.map(|x| x.to_string()).unwrap_or_default();
                writeln!(out, "{code},{old},{new}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn witness(
    g: &Graph,
    kind: Kind,
    params: &str,
    coloring: &str,
    format: Format,
    out: &mut dyn Write,
) -> CmdResult {
    let base = parse_coloring(coloring)?;
    let pair = |what| parse_exact::<2>(params, what);
    let cycle = || -> std::result::Result<CycleSpec, Failure> {
        Ok(CycleSpec::new(g, parse_list(params)?)?)
    };
    let outcome = match kind {
        Kind::AddVertex => {
            let [vertex] = parse_exact::<1>(params, "add-vertex")?;
            extend_witness(&ExtendKind::AddVertex { vertex }, g, &base)
        }
        Kind::AddEdge => {
            let [u, v] = pair("add-edge")?;
            extend_witness(&ExtendKind::AddEdge { u, v }, g, &base)
        }
        Kind::ContractEdge => {
            let [u, v] = pair("contract-edge")?;
            extend_witness(&ExtendKind::ContractEdge { u, v }, g, &base)
        }
        Kind::ContractVertices => {
            let [u, v] = pair("contract-vertices")?;
            extend_witness(&ExtendKind::ContractVertices { u, v }, g, &base)
        }
        Kind::CycleExtend => extend_witness(&ExtendKind::CycleExtend { cycle: cycle()? }, g, &base),
        Kind::RemoveVertex => {
            let [vertex] = parse_exact::<1>(params, "remove-vertex")?;
            reduce_witness(&ReduceKind::RemoveVertex { vertex }, g, &base)
        }
        Kind::RemoveEdge => {
            let [u, v] = pair("remove-edge")?;
            reduce_witness(&ReduceKind::RemoveEdge { u, v }, g, &base)
        }
        Kind::Uncontract => {
            let [u, v] = pair("uncontract")?;
            reduce_witness(&ReduceKind::Uncontract { u, v }, g, &base)
        }
        Kind::RemoveHub => reduce_witness(&ReduceKind::RemoveHub { cycle: cycle()? }, g, &base),
    };
    let outcome = match outcome {
        Err(Error::BaseNotDomination) => {
            return Err(Failure {
                code: EXIT_VIOLATION,
                message: Error::BaseNotDomination.to_string(),
            })
        }
        other => other?,
    };
    match format {
        Format::Json => emit_json(
            out,
            serde_json::to_value(&outcome).expect("outcome serializes"),
        )?,
        Format::Text => {
            writeln!(out, "status: {:?}", outcome.status)?;
            writeln!(out, "case: {}", outcome.case)?;
            writeln!(out, "coloring: {}", outcome.coloring)?;
            writeln!(
                out,
                "colors: {} (base {}, bound {})",
                outcome.colors_used, outcome.base_colors, outcome.color_bound
            )?;
            if let Some(gap) = &outcome.gap {
                writeln!(out, "gap: {}", gap.diagnostic)?;
                if gap.over_budget {
                    writeln!(out, "gap: color bound exceeded")?;
                }
            }
        }
        Format::Csv => {
            writeln!(
                out,
                "status,case,coloring,colors_used,base_colors,color_bound"
            )?;
            writeln!(
                out,
                "{:?},\"{}\",\"{}\",{},{},{}",
                outcome.status,
                outcome.case,
                outcome.coloring,
                outcome.colors_used,
                outcome.base_colors,
                outcome.color_bound
            )?;
        }
    }
    Ok(if outcome.is_validated() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn verify(
    graphs: &[Graph],
    description: &str,
    config: HarnessConfig,
    format: Format,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let report = run_corpus(graphs, description, config)?;
    writeln!(
        err,
        "verified {} graph(s) in {} ms",
        graphs.len(),
        report.elapsed_ms.unwrap_or(0)
    )?;
    let code = if report.totals.violations > 0 {
        EXIT_VIOLATION
    } else if report.totals.unknowns > 0 {
        EXIT_BUDGET
    } else {
        EXIT_OK
    };
    let report = report.without_timing();
    match format {
        Format::Json => writeln!(out, "{}", report.to_json())?,
        Format::Text => write!(out, "{}", report.to_text())?,
        Format::Csv => write!(out, "{}", report.to_csv())?,
    }
    Ok(code)
}

fn oracle(graphs: &[Graph], format: Format, out: &mut dyn Write) -> CmdResult {
    if format == Format::Csv {
        writeln!(out, "graph,chi_dd")?;
    }
    for g in graphs {
        let chi = chi_dd_oracle(g)?;
        let code = to_graph6(g);
        match format {
            Format::Json => emit_json(out, json!({ "graph": code, "chi_dd": chi }))?,
            Format::Text => writeln!(out, "{code}\tchi_dd={chi}")?,
            Format::Csv => writeln!(out, "{code},{chi}")?,
        }
    }
    Ok(EXIT_OK)
}
