use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use graph_frames::cli::{self, DualSource, Tolerances};
use graph_frames::erasure::MeasureParams;
use graph_frames::optimality::SearchConfig;
use graph_frames::Error;

/// Frames from graph Laplacians, dual frames, and erasure optimality.
///
/// Exit codes: 0 success, 2 input/parse errors, 3 mathematical errors,
/// 4 failed verification (not a dual, not equivalent).
#[derive(Parser)]
#[command(name = "graph-frames", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the Laplacian frame of an edge-list graph.
    Build {
        graph: PathBuf,
        /// Frame CSV destination (stdout when omitted).
        #[arg(long)]
        frame_out: Option<PathBuf>,
        /// JSON summary destination (stderr when omitted).
        #[arg(long)]
        summary_out: Option<PathBuf>,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Erasure measures, bounds and optimality flags for a dual pair.
    Analyze {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Uniformity diagnostics and optimality flags for a dual pair.
    Check {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Search the dual family of a corank-one frame for the E1 minimiser.
    Search {
        frame: PathBuf,
        #[command(flatten)]
        measure: MeasureArgs,
        /// Half-width of the grid cube and radius of the sampling ball.
        #[arg(long, default_value_t = 1.0)]
        radius: f64,
        /// Grid points per axis (odd).
        #[arg(long, default_value_t = 11)]
        steps: usize,
        /// Random samples in the ball.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Seed for the random phase.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest parameter dimension evaluated on a full grid.
        #[arg(long, default_value_t = 4)]
        max_grid_dim: usize,
        /// Write a CSV trace (h_1..h_n,value) of every evaluated point.
        #[arg(long)]
        trace: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        tol: TolArgs,
    },
    /// Optimal single-erasure value and the two-erasure lower bound.
    Bounds {
        #[arg(long = "count", short = 'N')]
        count: usize,
        #[arg(long = "dim", short = 'n')]
        dim: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print a graph file in canonical edge-list form.
    GraphDump {
        graph: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct PairArgs {
    frame: PathBuf,
    /// Dual frame CSV.
    #[arg(long, conflicts_with = "canonical", required_unless_present = "canonical")]
    dual: Option<PathBuf>,
    /// Use the canonical dual S_F^{-1} F.
    #[arg(long)]
    canonical: bool,
    #[command(flatten)]
    measure: MeasureArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[command(flatten)]
    tol: TolArgs,
}

#[derive(Args)]
struct MeasureArgs {
    /// Averaging exponent p (> 1).
    #[arg(short, long, default_value_t = 2.0)]
    p: f64,
    /// Accept p = 1, outside the range where the optimality results hold.
    #[arg(long)]
    allow_p1: bool,
}

impl MeasureArgs {
    fn params(&self) -> Result<MeasureParams, Error> {
        if self.allow_p1 {
            MeasureParams::allowing_p1(self.p)
        } else {
            MeasureParams::new(self.p)
        }
    }
}

#[derive(Args)]
struct TolArgs {
    /// Relative spanning threshold for frames.
    #[arg(long, default_value_t = 1e-10)]
    tol_frame: f64,
    /// Frobenius threshold for the duality check.
    #[arg(long, default_value_t = 1e-8)]
    tol_dual: f64,
    /// Threshold for measure-equals-optimum decisions.
    #[arg(long, default_value_t = 1e-9)]
    tol_classify: f64,
    /// Threshold for uniformity checks.
    #[arg(long, default_value_t = 1e-8)]
    tol_uniform: f64,
    /// Relative threshold for tightness.
    #[arg(long, default_value_t = 1e-9)]
    tol_tight: f64,
}

impl TolArgs {
    fn tolerances(&self) -> Tolerances {
        Tolerances {
            frame: self.tol_frame,
            dual: self.tol_dual,
            classify: self.tol_classify,
            uniform: self.tol_uniform,
            tight: self.tol_tight,
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit(output: Option<&Path>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, text).map_err(|source| Error::Io {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_pair(pair: &PairArgs, check: bool) -> Result<(), Error> {
    let frame = read(&pair.frame)?;
    let dual_text = pair.dual.as_deref().map(read).transpose()?;
    let dual = match &dual_text {
        Some(text) => DualSource::Csv(text),
        None => DualSource::Canonical,
    };
    let params = pair.measure.params()?;
    let tol = pair.tol.tolerances();
    let json = if check {
        cli::cmd_check(&frame, dual, params, &tol)?
    } else {
        cli::cmd_analyze(&frame, dual, params, &tol)?
    };
    emit(pair.output.as_deref(), &json)
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Build {
            graph,
            frame_out,
            summary_out,
            tol,
        } => {
            let out = cli::cmd_build(&read(&graph)?, &tol.tolerances())?;
            emit(frame_out.as_deref(), &out.frame_csv)?;
            match summary_out {
                Some(path) => emit(Some(&path), &out.summary_json),
                None => {
                    eprint!("{}", out.summary_json);
                    Ok(())
                }
            }
        }
        Command::Analyze { pair } => run_pair(&pair, false),
        Command::Check { pair } => run_pair(&pair, true),
        Command::Search {
            frame,
            measure,
            radius,
            steps,
            samples,
            seed,
            max_grid_dim,
            trace,
            output,
            tol,
        } => {
            let config = SearchConfig {
                radius,
                steps_per_axis: steps,
                random_samples: samples,
                seed,
                max_grid_dim,
                record_trace: trace.is_some(),
            };
            let out = cli::cmd_search(&read(&frame)?, measure.params()?, &config, &tol.tolerances())?;
            if let (Some(path), Some(csv)) = (trace.as_deref(), out.trace_csv.as_deref()) {
                emit(Some(path), csv)?;
            }
            emit(output.as_deref(), &out.json)
        }
        Command::Bounds { count, dim, output } => emit(output.as_deref(), &cli::cmd_bounds(count, dim)?),
        Command::GraphDump { graph, output } => emit(output.as_deref(), &cli::cmd_graph_dump(&read(&graph)?)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
