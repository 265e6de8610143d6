use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use travgraph::format::{read_graph, serialize, write_graph};
use travgraph::harness::{self, ColorAlgo, ExperimentReport};
use travgraph::{Error, Result};
use travgraph_core::bocps::{bocps_with, BocpsOptions};
use travgraph_core::partition::partition;
use travgraph_core::sequences::{self, ArcSequence, CyclePermutation};
use travgraph_core::traversal::Engine;
use travgraph_core::{generators, Arc, MultiTraversalRelation, VertexId};

#[derive(Parser)]
#[command(name = "travgraph", version, about = "Traversal-relation graph experiments")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Emit one JSON document instead of TSV.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized commands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads; 1 keeps the deterministic sequential search.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Mirror every arc of input files.
    #[arg(long, global = true)]
    undirected: bool,
    /// Lift default size limits.
    #[arg(long, global = true)]
    force: bool,
    /// Include wall-clock columns.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated instance in graph-file format.
    Gen {
        family: Family,
        params: Vec<u32>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Print vertex and arc counts and the graph class.
    Classify { file: PathBuf },
    /// Exhaustive maximal-path search from one start vertex.
    Traverse {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Algo::Obots)]
        algo: Algo,
        #[arg(long, default_value_t = 1)]
        start: u32,
    },
    /// Loop-count to breadth ratio on complete graphs K_3 ..= K_n.
    Euler {
        n_max: u32,
        #[arg(long, value_enum, default_value_t = Algo::Obots)]
        algo: Algo,
    },
    /// Hamiltonian cycle counts from every start vertex.
    Invariant { file: PathBuf },
    /// Layered partition from a seed set.
    Partition {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        seeds: Vec<u32>,
    },
    /// Minimal ratio by cycle-permutation return time.
    Bocps {
        m1: u64,
        m2: u64,
        /// Cap iterations at max(m1, m2) / 2 when that exceeds min(m1, m2).
        #[arg(long)]
        half_max_cap: bool,
    },
    /// Randomized coloring trials, or the exact layout summary.
    Color {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ColorChoice::Bogpc)]
        algo: ColorChoice,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Enumerate layouts of independent classes instead.
        #[arg(long)]
        exact: bool,
        /// Vertex limit for --exact.
        #[arg(long, default_value_t = travgraph_core::coloring::MCIVS_LIMIT)]
        limit: usize,
        /// Stop counting layouts after this many.
        #[arg(long, default_value_t = 1_000_000)]
        max_layouts: u64,
    },
    /// Arc-sequence validators and cycle permutation.
    #[command(subcommand)]
    Sequences(SeqCommand),
}

#[derive(Subcommand)]
enum SeqCommand {
    /// Classify an arc sequence such as `1-2,2-3,3-1`.
    Check { arcs: String },
    /// Rotate a cycle by `index * power` arcs.
    Permute {
        arcs: String,
        #[arg(long)]
        index: usize,
        #[arg(long, default_value_t = 1)]
        power: usize,
    },
    /// Chains of a cycle.
    Chains { arcs: String },
    /// Least power returning a length-n cycle to itself under index m.
    Power { n: usize, m: usize },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Cycle,
    Path,
    Grid,
    Cycleseq,
    Dodecahedron,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Bots,
    Obots,
}

impl From<Algo> for Engine {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Bots => Engine::Bots,
            Algo::Obots => Engine::Obots,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ColorChoice {
    Bogpc,
    Boerc,
}

impl From<ColorChoice> for ColorAlgo {
    fn from(c: ColorChoice) -> Self {
        match c {
            ColorChoice::Bogpc => ColorAlgo::Bogpc,
            ColorChoice::Boerc => ColorAlgo::Boerc,
        }
    }
}

/// Rendered command output.
struct Output {
    tsv: String,
    json: Value,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.global.json;
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            let text = if json { format!("{:#}\n", out.json) } else { out.tsv };
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("travgraph: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn vertex(id: u32) -> Result<VertexId> {
    VertexId::new(id).map_err(|_| Error::Usage(format!("vertex ids start at 1, got {id}")))
}

fn parse_arcs(text: &str) -> Result<ArcSequence> {
    let arcs = text
        .split(',')
        .map(|pair| {
            let (t, h) = pair
                .split_once('-')
                .ok_or_else(|| Error::Usage(format!("`{pair}` is not of the form tail-head")))?;
            let num = |s: &str| {
                s.trim().parse::<u32>().map_err(|_| Error::Usage(format!("`{s}` is not a vertex id"))).and_then(vertex)
            };
            Ok(Arc::new(num(t)?, num(h)?))
        })
        .collect::<Result<_>>()?;
    Ok(ArcSequence(arcs))
}

fn format_arcs(s: &ArcSequence) -> String {
    s.0.iter().map(|a| format!("{}-{}", a.tail, a.head)).collect::<Vec<_>>().join(",")
}

fn generate(family: Family, params: &[u32]) -> Result<MultiTraversalRelation> {
    let want = match family {
        Family::Dodecahedron => 0,
        Family::Grid | Family::Cycleseq => 2,
        _ => 1,
    };
    if params.len() != want {
        return Err(Error::Usage(format!("this family takes {want} parameter(s), got {}", params.len())));
    }
    let g = match family {
        Family::Complete => generators::complete(params[0]),
        Family::Cycle => generators::cycle(params[0]),
        Family::Path => generators::path(params[0]),
        Family::Grid => generators::grid(params[0], params[1]),
        Family::Cycleseq => generators::cycle_sequence(params[0], params[1]),
        Family::Dodecahedron => Ok(generators::dodecahedron()),
    };
    g.map_err(|e| Error::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<Output> {
    let g = &cli.global;
    let load = |file: &PathBuf| read_graph(file, g.undirected);
    match cli.command {
        Command::Gen { family, params, out } => {
            let graph = generate(family, &params)?;
            let json = json!({
                "command": "gen",
                "vertices": graph.vertex_count(),
                "arcs": graph.arc_count(),
                "graph": serialize(&graph),
            });
            let tsv = match out {
                Some(path) => {
                    write_graph(&path, &graph)?;
                    format!("vertices\tarcs\n{}\t{}\n", graph.vertex_count(), graph.arc_count())
                }
                None => serialize(&graph),
            };
            Ok(Output { tsv, json })
        }
        Command::Classify { file } => {
            let graph = load(&file)?;
            let class = graph.classify().to_string();
            let connected = graph.is_connected();
            Ok(Output {
                tsv: format!(
                    "vertices\tarcs\tclass\tconnected\n{}\t{}\t{}\t{}\n",
                    graph.vertex_count(),
                    graph.arc_count(),
                    class,
                    connected
                ),
                json: json!({
                    "command": "classify",
                    "file": file,
                    "vertices": graph.vertex_count(),
                    "arcs": graph.arc_count(),
                    "class": class,
                    "connected": connected,
                }),
            })
        }
        Command::Traverse { file, algo, start } => {
            let graph = load(&file)?;
            let start = vertex(start)?;
            let row = harness::traverse_row(file.display().to_string(), &graph, start, algo.into(), g.threads)?;
            let report = ExperimentReport { rows: vec![row] };
            Ok(Output {
                tsv: report.to_tsv(g.timing),
                json: json!({
                    "command": "traverse",
                    "file": file,
                    "algo": engine_name(algo),
                    "start": start.get(),
                    "threads": g.threads,
                    "report": timed(serde_json::to_value(&report).expect("serializable"), g.timing),
                }),
            })
        }
        Command::Euler { n_max, algo } => {
            let report = harness::euler_report(n_max, g.force, algo.into(), g.threads)?;
            Ok(Output {
                tsv: report.to_tsv(g.timing),
                json: json!({
                    "command": "euler",
                    "n_max": n_max,
                    "algo": engine_name(algo),
                    "report": timed(serde_json::to_value(&report).expect("serializable"), g.timing),
                }),
            })
        }
        Command::Invariant { file } => {
            let graph = load(&file)?;
            let report = harness::invariant_report(&graph)?;
            Ok(Output {
                tsv: report.to_tsv(),
                json: json!({ "command": "invariant", "file": file, "report": report }),
            })
        }
        Command::Partition { file, seeds } => {
            let graph = load(&file)?;
            let seeds = seeds.into_iter().map(vertex).collect::<Result<Vec<_>>>()?;
            let r = partition(&graph, &seeds)?;
            let sizes = r.sizes();
            let stranded: Vec<u32> = r.stranded.iter().map(|v| v.get()).collect();
            let joined = sizes.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
            Ok(Output {
                tsv: format!("regions\tsizes\tstranded\n{}\t{}\t{}\n", r.len(), joined, stranded.len()),
                json: json!({
                    "command": "partition",
                    "file": file,
                    "seeds": seeds.iter().map(|v| v.get()).collect::<Vec<_>>(),
                    "regions": r.regions.iter().map(|reg| reg.iter().map(|v| v.get()).collect::<Vec<_>>()).collect::<Vec<_>>(),
                    "sizes": sizes,
                    "stranded": stranded,
                }),
            })
        }
        Command::Bocps { m1, m2, half_max_cap } => {
            let r = bocps_with(m1, m2, BocpsOptions { half_max_cap }).map_err(|e| match e {
                travgraph_core::Error::InvalidParameter(m) => Error::Usage(m),
                other => other.into(),
            })?;
            let gcd = m1 / r.k1;
            let lcm = m1.checked_mul(r.k2).ok_or(travgraph_core::Error::Overflow)?;
            Ok(Output {
                tsv: format!("k1\tk2\tgcd\tlcm\tloops\n{}\t{}\t{gcd}\t{lcm}\t{}\n", r.k1, r.k2, r.loops),
                json: json!({
                    "command": "bocps", "m1": m1, "m2": m2,
                    "k1": r.k1, "k2": r.k2, "gcd": gcd, "lcm": lcm, "loops": r.loops,
                }),
            })
        }
        Command::Color { file, algo, trials, exact, limit, max_layouts } => {
            let graph = load(&file)?;
            if exact {
                let s = harness::exact_summary(&graph, limit, max_layouts)?;
                return Ok(Output {
                    tsv: s.to_tsv(),
                    json: json!({ "command": "color", "file": file, "exact": true, "summary": s }),
                });
            }
            let t = harness::color_trials(&graph, algo.into(), trials, g.seed)?;
            if t.invalid > 0 {
                return Err(travgraph_core::Error::Invariant(format!("{} runs produced improper colorings", t.invalid)).into());
            }
            Ok(Output {
                tsv: t.to_tsv(),
                json: json!({ "command": "color", "file": file, "exact": false, "trials": t }),
            })
        }
        Command::Sequences(cmd) => sequences_cmd(cmd),
    }
}

fn engine_name(a: Algo) -> &'static str {
    match a {
        Algo::Bots => "bots",
        Algo::Obots => "obots",
    }
}

/// Drops wall-time fields unless timing was requested.
fn timed(mut report: Value, timing: bool) -> Value {
    if !timing {
        if let Some(rows) = report.get_mut("rows").and_then(Value::as_array_mut) {
            for row in rows {
                if let Some(obj) = row.as_object_mut() {
                    obj.remove("wall_time_ms");
                }
            }
        }
    }
    report
}

fn sequences_cmd(cmd: SeqCommand) -> Result<Output> {
    match cmd {
        SeqCommand::Check { arcs } => {
            let s = parse_arcs(&arcs)?;
            let (trail, path, cycle) = (sequences::is_trail(&s), sequences::is_path(&s), sequences::is_cycle(&s));
            let medium: Option<Vec<u32>> =
                sequences::medium_vertices(&s).ok().map(|m| m.iter().map(|v| v.get()).collect());
            let medium_text = medium
                .as_ref()
                .map_or_else(|| "-".to_owned(), |m| m.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
            Ok(Output {
                tsv: format!("trail\tpath\tcycle\tmedium\n{trail}\t{path}\t{cycle}\t{medium_text}\n"),
                json: json!({
                    "command": "sequences check", "arcs": arcs,
                    "trail": trail, "path": path, "cycle": cycle, "medium": medium,
                }),
            })
        }
        SeqCommand::Permute { arcs, index, power } => {
            let s = parse_arcs(&arcs)?;
            let p = sequences::cycle_permute(&s, CyclePermutation { index, power })?;
            let text = format_arcs(&p);
            Ok(Output {
                tsv: format!("{text}\n"),
                json: json!({ "command": "sequences permute", "arcs": arcs, "index": index, "power": power, "result": text }),
            })
        }
        SeqCommand::Chains { arcs } => {
            let s = parse_arcs(&arcs)?;
            let chains: Vec<String> = sequences::chains_of(&s)?.iter().map(format_arcs).collect();
            Ok(Output {
                tsv: chains.iter().map(|c| format!("{c}\n")).collect(),
                json: json!({ "command": "sequences chains", "arcs": arcs, "chains": chains }),
            })
        }
        SeqCommand::Power { n, m } => {
            let p = sequences::minimal_power(n, m).map_err(|e| Error::Usage(e.to_string()))?;
            Ok(Output {
                tsv: format!("n\tm\tpower\n{n}\t{m}\t{p}\n"),
                json: json!({ "command": "sequences power", "n": n, "m": m, "power": p }),
            })
        }
    }
}
