//! `ballconvex`: ball hulls, regularity certificates, farthest-point
//! queries, theorem suites and SVG figures from the command line.

mod commands;
mod document;
mod svg;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Geometry(#[from] ballconvex::Error),
    #[error("unknown predicate {0:?}")]
    UnknownPredicate(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Geometry(ballconvex::Error::InfeasibleRadius { .. }) => 2,
            CliError::Failed(_) => 3,
            CliError::UnknownPredicate(_) => 4,
            _ => 1,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "ballconvex",
    version,
    about = "Ball hulls and r-strong convexity certificates for planar sets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ball hull of a point set (CSV `x,y` lines or JSON).
    Hull {
        input: PathBuf,
        #[arg(long = "r")]
        r: f64,
        /// Build through the disk-intersection kernel instead of spindle pruning.
        #[arg(long)]
        dual: bool,
        /// Cross-check random queries against the grid oracle.
        #[arg(long)]
        oracle_check: bool,
        #[arg(long, default_value_t = 200)]
        queries: usize,
        #[arg(long, default_value_t = 400)]
        grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Evaluate one regularity predicate on a shape document.
    Check {
        shape: PathBuf,
        predicate: String,
        #[arg(long = "r")]
        r: Option<f64>,
        /// Boundary samples; interior and E_r sample counts scale with it.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Farthest distance and farthest points from `x`.
    Farthest {
        shape: PathBuf,
        /// Query point `x,y`.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long = "r")]
        r: Option<f64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Run a theorem suite over a corpus.
    Suite {
        theorem: String,
        /// `default` or a JSON file holding a list of instance specs.
        #[arg(long, default_value = "default")]
        corpus: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Draw shapes with optional overlays to SVG.
    Render {
        #[arg(required = true)]
        shapes: Vec<PathBuf>,
        #[arg(long)]
        svg: PathBuf,
        /// Normal-cone generators at boundary samples.
        #[arg(long)]
        normals: bool,
        /// Supporting ball `ax,ay,zx,zy,r`; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        balls: Vec<String>,
        /// Shade sampled E_r for this r.
        #[arg(long)]
        er: Option<f64>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
