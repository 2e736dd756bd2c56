//! Command-line surface. All commands read the plain-text edge-list format
//! and write to the supplied streams, which keeps the whole surface testable
//! in process; the binary is a thin shim over [`run_command`].
//!
//! Exit codes: 0 success, 1 usage, 2 unreadable or malformed input,
//! 3 analysis precondition not met. Failures print one line to stderr in the
//! form `error[<code>]: <detail>` so scripts can branch on the code.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::critical::{strong_articulation_points, strong_bridges};
use crate::dot::emit_dot;
use crate::edgelist::{parse_edge_list, serialize_edge_list};
use crate::error::Error;
use crate::generate::generate;
use crate::graph::{Arc, Digraph, VertexId};
use crate::oracle;
use crate::report::{compute, render_text};
use crate::resilience::{b_articulation_points, b_bridges_fast, sb_witness, Witness};
use crate::sbcc::strongly_biconnected_components;

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct InputArgs {
    /// Edge-list file to analyze
    file: PathBuf,
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Include the certificate augmentation trace in the report
    #[arg(long)]
    trace: bool,
}

#[derive(Args, Debug)]
struct GenArgs {
    /// Vertex count (at least 3)
    #[arg(long)]
    n: u32,
    /// Arc budget (at least n+2; capped at n*(n-1))
    #[arg(long)]
    m: u64,
    /// PRNG seed; same (n, m, seed) always yields the same graph
    #[arg(long)]
    seed: u64,
}

#[derive(Args, Debug)]
struct DotArgs {
    /// Edge-list file to render
    file: PathBuf,
    /// Style single-failure arcs and vertices
    #[arg(long)]
    highlight: bool,
}

#[derive(Subcommand, Debug)]
enum OracleCommand {
    /// Brute-force b-bridges by per-arc deletion
    #[command(name = "b-bridges")]
    BBridges(InputArgs),
    /// Brute-force b-articulation points by per-vertex deletion
    #[command(name = "b-articulation-points")]
    BArticulationPoints(InputArgs),
    /// Brute-force strong bridges by per-arc deletion
    #[command(name = "strong-bridges")]
    StrongBridges(InputArgs),
    /// Brute-force strong articulation points by per-vertex deletion
    #[command(name = "strong-articulation-points")]
    StrongArticulationPoints(InputArgs),
    /// Components by subset enumeration (12 vertices at most)
    #[command(name = "sbcc")]
    Sbcc(InputArgs),
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report whether the graph is strongly connected and strongly biconnected
    #[command(name = "check")]
    Check(InputArgs),
    /// Arcs whose deletion breaks strong biconnectivity
    #[command(name = "b-bridges")]
    BBridges(InputArgs),
    /// Vertices whose deletion breaks strong biconnectivity
    #[command(name = "b-articulation-points")]
    BArticulationPoints(InputArgs),
    /// Arcs whose deletion breaks strong connectivity
    #[command(name = "strong-bridges")]
    StrongBridges(InputArgs),
    /// Vertices whose deletion breaks strong connectivity
    #[command(name = "strong-articulation-points")]
    StrongArticulationPoints(InputArgs),
    /// Strongly biconnected components (may overlap at single vertices)
    #[command(name = "sbcc")]
    Sbcc(InputArgs),
    /// Full report: every analysis the input qualifies for
    #[command(name = "analyze")]
    Analyze(AnalyzeArgs),
    /// Brute-force reference analyses, for auditing the fast paths
    #[command(name = "oracle", subcommand)]
    Oracle(OracleCommand),
    /// Emit a reproducible random strongly biconnected instance
    #[command(name = "gen")]
    Gen(GenArgs),
    /// Graphviz rendering of the graph
    #[command(name = "dot")]
    Dot(DotArgs),
}

#[derive(Parser, Debug)]
#[command(
    name = "sbgraph",
    version,
    about = "Strong biconnectivity analysis for directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

struct Failure {
    exit: i32,
    message: String,
}

impl Failure {
    fn new(exit: i32, code: &str, detail: impl std::fmt::Display) -> Self {
        Failure { exit, message: format!("error[{code}]: {detail}") }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(3, e.code(), e)
    }
}

/// Parses `argv` and runs the selected command against the given streams.
/// Returns the process exit code instead of exiting, so tests can drive the
/// complete surface in process.
pub fn run_command<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    1
                }
            }
        }
    };
    match dispatch(cli.cmd, out, err) {
        Ok(()) => 0,
        Err(f) => {
            let _ = writeln!(err, "{}", f.message);
            f.exit
        }
    }
}

fn load(path: &Path, err: &mut dyn Write) -> Result<Digraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, "io", format!("{}: {e}", path.display())))?;
    let parsed = parse_edge_list(&text)
        .map_err(|e| Failure::new(2, "parse", format!("{}: {e}", path.display())))?;
    if parsed.duplicates_dropped > 0 {
        let _ = writeln!(
            err,
            "warning: {} duplicate arc line(s) dropped",
            parsed.duplicates_dropped
        );
    }
    Ok(parsed.graph)
}

fn arc_labels(g: &Digraph, arcs: &[Arc]) -> Vec<[u64; 2]> {
    let mut out: Vec<[u64; 2]> = arcs
        .iter()
        .map(|a| [g.label_of(a.tail), g.label_of(a.head)])
        .collect();
    out.sort_unstable();
    out
}

fn vertex_labels(g: &Digraph, vs: &[VertexId]) -> Vec<u64> {
    let mut out: Vec<u64> = vs.iter().map(|&v| g.label_of(v)).collect();
    out.sort_unstable();
    out
}

fn print_arcs(format: Format, arcs: &[[u64; 2]], out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Text => {
            for [t, h] in arcs {
                let _ = writeln!(out, "{t} {h}");
            }
        }
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(arcs).expect("serializable"));
        }
    }
    Ok(())
}

fn print_vertices(format: Format, vs: &[u64], out: &mut dyn Write) -> Result<(), Failure> {
    match format {
        Format::Text => {
            for v in vs {
                let _ = writeln!(out, "{v}");
            }
        }
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(vs).expect("serializable"));
        }
    }
    Ok(())
}

fn describe_witness(g: &Digraph, w: &Witness) -> String {
    match w {
        Witness::NotStronglyConnected { from, to } => format!(
            "vertex {} cannot reach vertex {}",
            g.label_of(*from),
            g.label_of(*to)
        ),
        Witness::UnderlyingNotBiconnected { cut_vertex } => {
            format!("cut vertex {} in the underlying graph", g.label_of(*cut_vertex))
        }
    }
}

#[derive(Serialize)]
struct CheckDocument {
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    strongly_biconnected: bool,
    strongly_connected: bool,
}

fn run_check(args: &InputArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let g = load(&args.file, err)?;
    let witness = sb_witness(&g);
    let sc = !matches!(witness, Some(Witness::NotStronglyConnected { .. }));
    let doc = CheckDocument {
        reason: witness.as_ref().map(|w| describe_witness(&g, w)),
        strongly_biconnected: witness.is_none(),
        strongly_connected: sc,
    };
    match args.format {
        Format::Text => {
            let _ = writeln!(out, "strongly connected: {}", if sc { "yes" } else { "no" });
            let _ = writeln!(
                out,
                "strongly biconnected: {}",
                if witness.is_none() { "yes" } else { "no" }
            );
            if let Some(r) = &doc.reason {
                let _ = writeln!(out, "reason: {r}");
            }
        }
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"));
        }
    }
    Ok(())
}

fn print_components(
    format: Format,
    comps: &[Vec<u64>],
    out: &mut dyn Write,
) -> Result<(), Failure> {
    match format {
        Format::Text => {
            for c in comps {
                let line: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{}", line.join(" "));
            }
        }
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string(comps).expect("serializable"));
        }
    }
    Ok(())
}

fn component_labels(g: &Digraph, comps: &[Vec<VertexId>]) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = comps.iter().map(|c| vertex_labels(g, c)).collect();
    out.sort();
    out
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Check(args) => run_check(&args, out, err),
        Command::BBridges(args) => {
            let g = load(&args.file, err)?;
            let (bridges, _) = b_bridges_fast(&g)?;
            print_arcs(args.format, &arc_labels(&g, &bridges), out)
        }
        Command::BArticulationPoints(args) => {
            let g = load(&args.file, err)?;
            let points = b_articulation_points(&g)?;
            print_vertices(args.format, &vertex_labels(&g, &points), out)
        }
        Command::StrongBridges(args) => {
            let g = load(&args.file, err)?;
            let bridges = strong_bridges(&g)?;
            print_arcs(args.format, &arc_labels(&g, &bridges), out)
        }
        Command::StrongArticulationPoints(args) => {
            let g = load(&args.file, err)?;
            let points = strong_articulation_points(&g)?;
            print_vertices(args.format, &vertex_labels(&g, &points), out)
        }
        Command::Sbcc(args) => {
            let g = load(&args.file, err)?;
            let cover = strongly_biconnected_components(&g)?;
            print_components(args.format, &component_labels(&g, cover.components()), out)
        }
        Command::Analyze(args) => {
            let g = load(&args.input.file, err)?;
            let doc = compute(&g, args.trace);
            match args.input.format {
                Format::Text => {
                    let _ = write!(out, "{}", render_text(&doc));
                }
                Format::Json => {
                    let _ =
                        writeln!(out, "{}", serde_json::to_string(&doc).expect("serializable"));
                }
            }
            Ok(())
        }
        Command::Oracle(sub) => match sub {
            OracleCommand::BBridges(args) => {
                let g = load(&args.file, err)?;
                let bridges = oracle::naive_b_bridges(&g)?;
                print_arcs(args.format, &arc_labels(&g, &bridges), out)
            }
            OracleCommand::BArticulationPoints(args) => {
                let g = load(&args.file, err)?;
                let points = oracle::naive_b_articulation_points(&g)?;
                print_vertices(args.format, &vertex_labels(&g, &points), out)
            }
            OracleCommand::StrongBridges(args) => {
                let g = load(&args.file, err)?;
                let sets = oracle::naive_critical_sets(&g)?;
                print_arcs(args.format, &arc_labels(&g, &sets.strong_bridges), out)
            }
            OracleCommand::StrongArticulationPoints(args) => {
                let g = load(&args.file, err)?;
                let sets = oracle::naive_critical_sets(&g)?;
                print_vertices(args.format, &vertex_labels(&g, &sets.strong_articulation_points), out)
            }
            OracleCommand::Sbcc(args) => {
                let g = load(&args.file, err)?;
                let cover = oracle::naive_sbcc(&g)?;
                print_components(args.format, &component_labels(&g, cover.components()), out)
            }
        },
        Command::Gen(args) => {
            let g = generate(args.n, args.m, args.seed)?;
            let _ = write!(out, "{}", serialize_edge_list(&g));
            Ok(())
        }
        Command::Dot(args) => {
            let g = load(&args.file, err)?;
            let doc = if args.highlight { Some(compute(&g, false)) } else { None };
            let _ = write!(out, "{}", emit_dot(&g, doc.as_ref()));
            Ok(())
        }
    }
}
