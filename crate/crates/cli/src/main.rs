//! `shallowcc` command line: compute parameters, run verification batteries
//! and the conjecture experiments, and emit generated graphs.
//!
//! Exit status: 0 success, 2 validation or input error, 3 capacity exceeded,
//! 4 a verification check failed.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use shallowcc::constructions::{Family, Provenance};
use shallowcc::graph::{parse_graph, to_edge_list};
use shallowcc::harness::{
    cmd_compute, cmd_conjecture1, cmd_conjecture2, cmd_verify, error_exit_code, parse_key_values,
    provenance_id, CorpusSpec, CoverSource, Instance,
};
use shallowcc::minor::MinorModel;
use shallowcc::report::{write_value_csv, Input, Param, ValueTable};
use shallowcc::{Caps, Format, Graph};

#[derive(Parser)]
#[command(name = "shallowcc", version, about = "Exact clique cover width, shallow-minor parameters and clique separators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute parameters of one graph and emit a JSON report.
    Compute(ComputeArgs),
    /// Check every applicable inequality on a graph or a corpus.
    Verify(VerifyArgs),
    /// Induced-star growth s_t / (t s) over a corpus.
    Conjecture1(Conjecture1Args),
    /// Minimum balanced clique separators against ceil(sqrt(|C|)).
    Conjecture2(Conjecture2Args),
    /// Emit a generated graph as a canonical edge list.
    Construct(ConstructArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    EdgeList,
    Dimacs,
}

#[derive(Args)]
struct Source {
    /// Graph file.
    #[arg(long, conflicts_with = "construct")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "edge-list")]
    format: InputFormat,
    /// Generator family, e.g. obs2, cycle, incomparability.
    #[arg(long)]
    construct: Option<String>,
    /// Generator parameters as key=value pairs separated by commas.
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct Depth {
    /// Minor depth.
    #[arg(long, conflicts_with = "t_range")]
    t: Option<usize>,
    /// Inclusive depth range A..B.
    #[arg(long)]
    t_range: Option<String>,
}

#[derive(Args)]
struct CapArgs {
    /// Most minor models examined per computation.
    #[arg(long)]
    cap_models: Option<u64>,
    /// Wall-clock budget in seconds per minor enumeration (makes results
    /// depend on machine speed).
    #[arg(long)]
    cap_seconds: Option<f64>,
    /// Vertex limit for exact clique cover width.
    #[arg(long)]
    cap_ccw_vertices: Option<usize>,
    /// Evaluate on a single thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct Outputs {
    /// Write the JSON report here instead of stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Also write the CSV table here.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct ComputeArgs {
    #[command(flatten)]
    source: Source,
    /// Parameters to compute, comma separated (default: all).
    #[arg(long, value_delimiter = ',')]
    param: Vec<String>,
    #[command(flatten)]
    depth: Depth,
    #[command(flatten)]
    caps: CapArgs,
    #[command(flatten)]
    out: Outputs,
    /// Record wall time per parameter (reports are then not reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    source: Source,
    /// Corpus spec such as all-labeled:5 or chordal:20:9.
    #[arg(long, conflicts_with_all = ["input", "construct"])]
    corpus: Option<String>,
    #[command(flatten)]
    depth: Depth,
    #[command(flatten)]
    caps: CapArgs,
    #[command(flatten)]
    out: Outputs,
}

#[derive(Args)]
struct Conjecture1Args {
    #[arg(long, default_value = "incomparability:20:9")]
    corpus: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    depth: Depth,
    #[command(flatten)]
    caps: CapArgs,
    #[command(flatten)]
    out: Outputs,
}

#[derive(Args)]
struct Conjecture2Args {
    #[arg(long, default_value = "interval:20:9")]
    corpus: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Instances with K_{p,p} as a t-shallow minor are excluded.
    #[arg(long, default_value_t = 3)]
    p: usize,
    #[arg(long, default_value_t = 1)]
    t: usize,
    /// Cover to measure separators in: beta, ccw or chordal.
    #[arg(long, default_value = "beta")]
    cover: String,
    #[command(flatten)]
    caps: CapArgs,
    #[command(flatten)]
    out: Outputs,
}

#[derive(Args)]
struct ConstructArgs {
    family: String,
    #[arg(long, default_value = "")]
    params: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge-list destination (default stdout).
    #[arg(long)]
    output: Option<PathBuf>,
    /// Provenance sidecar destination (default OUTPUT.provenance.json).
    #[arg(long)]
    provenance: Option<PathBuf>,
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<shallowcc::Error> for Failure {
    fn from(e: shallowcc::Error) -> Self {
        let code = if e.kind() == "capacity" { 3 } else { 2 };
        Failure {
            code,
            error: e.into(),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 2, error }
    }
}

type Outcome = Result<u8, Failure>;

fn caps_from(args: &CapArgs) -> Caps {
    let mut caps = Caps::default();
    if let Some(m) = args.cap_models {
        caps.max_models = m;
    }
    caps.max_seconds = args.cap_seconds;
    if let Some(c) = args.cap_ccw_vertices {
        caps.ccw_vertices = c;
    }
    caps.parallel = !args.sequential;
    caps
}

fn depths(d: &Depth, default: &[usize]) -> Result<Vec<usize>, Failure> {
    if let Some(t) = d.t {
        return Ok(vec![t]);
    }
    let Some(range) = &d.t_range else {
        return Ok(default.to_vec());
    };
    let (a, b) = range
        .split_once("..=")
        .or_else(|| range.split_once(".."))
        .with_context(|| format!("t-range {range} is not A..B"))?;
    let a: usize = a.trim().parse().with_context(|| format!("bad t-range start {a}"))?;
    let b: usize = b.trim().parse().with_context(|| format!("bad t-range end {b}"))?;
    if a > b {
        return Err(anyhow::anyhow!("empty t-range {range}").into());
    }
    Ok((a..=b).collect())
}

struct Loaded {
    input: Input,
    graph_id: String,
    graph: Graph,
}

fn load(source: &Source) -> Result<Loaded, Failure> {
    match (&source.input, &source.construct) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let format = match source.format {
                InputFormat::EdgeList => Format::EdgeList,
                InputFormat::Dimacs => Format::Dimacs,
            };
            let graph = parse_graph(&text, format)?;
            let graph_id = path
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".into());
            Ok(Loaded {
                input: Input::File {
                    path: path.display().to_string(),
                    format: match source.format {
                        InputFormat::EdgeList => "edge-list".into(),
                        InputFormat::Dimacs => "dimacs".into(),
                    },
                },
                graph_id,
                graph,
            })
        }
        (None, Some(name)) => {
            let params = parse_key_values(&source.params)?;
            let family = Family::parse(name, &params, source.seed)?;
            let built = family.build(source.seed)?;
            Ok(Loaded {
                input: Input::Construct {
                    provenance: family.provenance(source.seed),
                },
                graph_id: provenance_id(&family, source.seed),
                graph: built.graph,
            })
        }
        (None, None) => Err(anyhow::anyhow!("give --input PATH or --construct FAMILY").into()),
    }
}

fn emit_json(out: &Outputs, json: &str) -> Result<(), Failure> {
    match &out.json {
        Some(path) => fs::write(path, json).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{json}"),
    }
    Ok(())
}

fn emit_csv(path: Option<&Path>, write: impl FnOnce(&mut Vec<u8>) -> shallowcc::Result<()>) -> Result<(), Failure> {
    if let Some(path) = path {
        let mut buf = Vec::new();
        write(&mut buf)?;
        fs::write(path, buf).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn compute(args: ComputeArgs) -> Outcome {
    let loaded = load(&args.source)?;
    let params: Vec<Param> = if args.param.is_empty() {
        Param::ALL.to_vec()
    } else {
        args.param.iter().map(|p| p.parse()).collect::<Result<_, _>>()?
    };
    let ts = depths(&args.depth, &[1])?;
    let caps = caps_from(&args.caps);
    let report = cmd_compute(loaded.input, &loaded.graph_id, &loaded.graph, &params, &ts, &caps, args.timings);
    emit_json(&args.out, &report.to_json())?;
    emit_csv(args.out.csv.as_deref(), |buf| {
        write_value_csv(
            buf,
            &[ValueTable {
                graph_id: &report.graph_id,
                graph: report.graph,
                results: &report.results,
            }],
        )
    })?;
    for e in &report.errors {
        eprintln!("{}: {}", e.param, e.message);
    }
    Ok(error_exit_code(&report.errors) as u8)
}

fn verify(args: VerifyArgs) -> Outcome {
    let (input, instances) = match &args.corpus {
        Some(spec) => {
            let instances = CorpusSpec::parse(spec)?.instances(args.source.seed)?;
            (
                Input::Corpus {
                    spec: spec.clone(),
                    seed: args.source.seed,
                },
                instances,
            )
        }
        None => {
            let loaded = load(&args.source)?;
            let inst = Instance {
                graph_id: loaded.graph_id,
                seed: args.source.construct.as_ref().map(|_| args.source.seed),
                graph: loaded.graph,
            };
            (loaded.input, vec![inst])
        }
    };
    let ts = depths(&args.depth, &[0, 1])?;
    let report = cmd_verify(input, &instances, &ts, &caps_from(&args.caps));
    emit_json(&args.out, &report.to_json())?;
    emit_csv(args.out.csv.as_deref(), |buf| report.write_csv(buf))?;
    let s = report.summary;
    eprintln!("checks: {} pass, {} fail, {} skipped", s.pass, s.fail, s.skipped);
    Ok(report.exit_code() as u8)
}

fn conjecture1(args: Conjecture1Args) -> Outcome {
    let instances = CorpusSpec::parse(&args.corpus)?.instances(args.seed)?;
    let ts = depths(&args.depth, &[1, 2])?;
    let input = Input::Corpus {
        spec: args.corpus.clone(),
        seed: args.seed,
    };
    let report = cmd_conjecture1(input, &instances, &ts, &caps_from(&args.caps));
    emit_json(&args.out, &report.to_json())?;
    emit_csv(args.out.csv.as_deref(), |buf| report.write_csv(buf))?;
    match &report.summary.max_ratio {
        Some(m) => eprintln!("max s_t/(t s) = {} ({} at t={})", m.value, m.graph_id, m.t),
        None => eprintln!("max s_t/(t s) undefined"),
    }
    Ok(report.exit_code() as u8)
}

fn conjecture2(args: Conjecture2Args) -> Outcome {
    let instances = CorpusSpec::parse(&args.corpus)?.instances(args.seed)?;
    let source: CoverSource = args.cover.parse()?;
    let input = Input::Corpus {
        spec: args.corpus.clone(),
        seed: args.seed,
    };
    let report = cmd_conjecture2(input, &instances, args.p, args.t, source, &caps_from(&args.caps));
    emit_json(&args.out, &report.to_json())?;
    emit_csv(args.out.csv.as_deref(), |buf| report.write_csv(buf))?;
    let s = &report.summary;
    eprintln!(
        "{} rows ({} filtered): {} feasible, {} infeasible, {} above ceil(sqrt(|C|))",
        s.rows, s.filtered, s.feasible, s.infeasible, s.above_sqrt
    );
    Ok(report.exit_code() as u8)
}

#[derive(Serialize)]
struct Sidecar<'a> {
    #[serde(flatten)]
    provenance: &'a Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<&'a [String]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    model: Option<&'a MinorModel>,
}

fn construct(args: ConstructArgs) -> Outcome {
    let params = parse_key_values(&args.params)?;
    let family = Family::parse(&args.family, &params, args.seed)?;
    let built = family.build(args.seed)?;
    let provenance = family.provenance(args.seed);
    let text = to_edge_list(&built.graph);
    let mut sidecar = serde_json::to_string_pretty(&Sidecar {
        provenance: &provenance,
        labels: built.graph.labels(),
        model: built.model.as_ref(),
    })
    .context("serializing provenance")?;
    sidecar.push('\n');
    match &args.output {
        Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    let sidecar_path = args.provenance.clone().or_else(|| {
        args.output.as_ref().map(|p| {
            let mut s = p.clone().into_os_string();
            s.push(".provenance.json");
            PathBuf::from(s)
        })
    });
    if let Some(path) = sidecar_path {
        fs::write(&path, sidecar).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Compute(a) => compute(a),
        Command::Verify(a) => verify(a),
        Command::Conjecture1(a) => conjecture1(a),
        Command::Conjecture2(a) => conjecture2(a),
        Command::Construct(a) => construct(a),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}
