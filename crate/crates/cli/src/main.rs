use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand};
use edgecolor::bench::{run_grid, write_csv, Grid};
use edgecolor::coloring::{read_coloring, verify, write_coloring};
use edgecolor::graph::{generate, parse_graph, write_dimacs, write_edge_list, Format, Graph, GraphError, Model};
use edgecolor::oracle::brute_force_chromatic_index;
use edgecolor::{color, Algo, Mode, PipelineConfig};

const EXIT_INVALID: u8 = 1;
const EXIT_IO: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_INFEASIBLE: u8 = 4;

/// Edge coloring with at most Δ+1 colors.
#[derive(Parser)]
#[command(name = "edgecolor", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Color a graph and write `u v c` lines.
    Color(ColorArgs),
    /// Check a coloring file against a graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
    /// Write a generated graph.
    Gen {
        /// gnm, regular, complete, bipartite, cycle, star or petersen.
        model: String,
        params: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value = "edge-list")]
        format: Format,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Run a benchmark grid and write CSV.
    Bench {
        #[arg(long, default_value = "small")]
        grid: Grid,
        #[arg(long, default_value = "practical")]
        mode: Mode,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Exact chromatic index of a small graph.
    Oracle {
        graph: PathBuf,
        #[arg(long)]
        format: Option<Format>,
    },
}

#[derive(Args)]
struct ColorArgs {
    input: PathBuf,
    /// Defaults to stdout.
    output: Option<PathBuf>,
    #[arg(long, default_value = "fast")]
    algo: Algo,
    #[arg(long, default_value = "practical")]
    mode: Mode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    ell: Option<u64>,
    #[arg(long = "cap-l")]
    cap_l: Option<u64>,
    /// Truncated-chain iterations before the plain fallback.
    #[arg(long)]
    kappa: Option<u64>,
    /// Minimum Δ for the fast branch.
    #[arg(long)]
    threshold: Option<f64>,
    /// Write stats JSON here instead of stderr.
    #[arg(long = "stats-out")]
    stats_out: Option<PathBuf>,
    /// Include wall-clock times in the stats.
    #[arg(long)]
    timings: bool,
    #[arg(long)]
    format: Option<Format>,
}

struct Failure {
    code: u8,
    err: anyhow::Error,
}

impl Failure {
    fn new(code: u8, err: impl Into<anyhow::Error>) -> Self {
        Failure { code, err: err.into() }
    }
}

type CmdResult = Result<u8, Failure>;

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> Failure + '_ {
    move |e| Failure::new(EXIT_IO, anyhow!(e).context(format!("{}", path.display())))
}

fn read_graph(path: &Path, format: Option<Format>) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let format = format.unwrap_or_else(|| Format::detect(&text));
    parse_graph(&text, format).map_err(|e| {
        let code = if matches!(e, GraphError::Io(_)) { EXIT_IO } else { EXIT_PARSE };
        Failure::new(code, anyhow!(e).context(format!("{}", path.display())))
    })
}

fn write_to(path: Option<&Path>, body: impl FnOnce(&mut dyn Write) -> io::Result<()>) -> Result<(), Failure> {
    match path {
        Some(p) => {
            let mut f = io::BufWriter::new(fs::File::create(p).map_err(io_err(p))?);
            body(&mut f).and_then(|_| f.flush()).map_err(io_err(p))
        }
        None => {
            let stdout = io::stdout();
            let mut lock = stdout.lock();
            body(&mut lock).map_err(|e| Failure::new(EXIT_IO, e))
        }
    }
}

fn cmd_color(a: ColorArgs) -> CmdResult {
    let g = read_graph(&a.input, a.format)?;
    let mut cfg = PipelineConfig::new(a.algo, a.mode, a.seed);
    cfg.ell = a.ell;
    cfg.cap_l = a.cap_l;
    cfg.kappa_iters = a.kappa;
    cfg.threshold = a.threshold;
    let (chi, mut stats) = color(&g, &cfg);
    if !a.timings {
        stats.timings = None;
    }
    let colors = chi.colors();
    write_to(a.output.as_deref(), |w| write_coloring(&g, &colors, w))?;
    let json = serde_json::to_string_pretty(&stats).map_err(|e| Failure::new(EXIT_IO, e))?;
    match &a.stats_out {
        Some(p) => fs::write(p, json + "\n").map_err(io_err(p))?,
        None => eprintln!("{json}"),
    }
    let report = verify(&g, &colors);
    if report.is_valid_complete() {
        Ok(0)
    } else {
        eprintln!("post-check failed: {}", serde_json::to_string(&report).unwrap_or_default());
        Ok(EXIT_INVALID)
    }
}

fn cmd_verify(graph: &Path, coloring: &Path, format: Option<Format>) -> CmdResult {
    let g = read_graph(graph, format)?;
    let text = fs::read_to_string(coloring).map_err(io_err(coloring))?;
    let colors = read_coloring(&g, &text)
        .map_err(|e| Failure::new(EXIT_PARSE, anyhow!(e).context(format!("{}", coloring.display()))))?;
    let r = verify(&g, &colors);
    let limit = g.max_degree() + 1;
    println!(
        "proper={} complete={} colors_used={} max_allowed={} uncolored={}",
        r.proper,
        r.uncolored == 0,
        r.colors_used,
        limit,
        r.uncolored
    );
    for v in &r.violations {
        println!("violation {}", serde_json::to_string(v).unwrap_or_default());
    }
    Ok(if r.is_valid_complete() { 0 } else { EXIT_INVALID })
}

fn cmd_gen(model: &str, params: &[usize], seed: u64, format: Format, out: Option<&Path>) -> CmdResult {
    let g = Model::from_parts(model, params)
        .and_then(|m| generate(m, seed))
        .map_err(|e| Failure::new(EXIT_INFEASIBLE, e))?;
    write_to(out, |w| match format {
        Format::EdgeList => write_edge_list(&g, w),
        Format::Dimacs => write_dimacs(&g, w),
    })?;
    Ok(0)
}

fn cmd_bench(grid: Grid, mode: Mode, out: Option<&Path>) -> CmdResult {
    let rows = run_grid(grid, mode).map_err(|e| Failure::new(EXIT_INFEASIBLE, e))?;
    write_to(out, |w| write_csv(&rows, w).map_err(io::Error::other))?;
    Ok(if rows.iter().all(|r| r.valid && r.phase_sum == r.m) { 0 } else { EXIT_INVALID })
}

fn cmd_oracle(graph: &Path, format: Option<Format>) -> CmdResult {
    let g = read_graph(graph, format)?;
    let limit = g.max_degree() as u32 + 1;
    let k = brute_force_chromatic_index(&g, limit)
        .map_err(|e| Failure::new(EXIT_INFEASIBLE, e))?
        .ok_or_else(|| Failure::new(EXIT_INVALID, anyhow!("no coloring with {limit} colors")))?;
    println!("{k}");
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Color(a) => cmd_color(a),
        Cmd::Verify { graph, coloring, format } => cmd_verify(&graph, &coloring, format),
        Cmd::Gen { model, params, seed, format, out } => cmd_gen(&model, &params, seed, format, out.as_deref()),
        Cmd::Bench { grid, mode, out } => cmd_bench(grid, mode, out.as_deref()),
        Cmd::Oracle { graph, format } => cmd_oracle(&graph, format),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.err);
            ExitCode::from(f.code)
        }
    }
}
