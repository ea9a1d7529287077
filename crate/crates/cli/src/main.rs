use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;

/// Subgroups of free groups, their core graphs, and counting subset currents.
#[derive(Debug, Parser)]
#[command(name = "subcur", version)]
pub struct Cli {
    /// Largest radius accepted by table-producing commands.
    #[arg(long, global = true, env = "SUBCUR_MAX_RADIUS", default_value_t = 3)]
    pub max_radius: usize,

    /// Seed for randomized operations.
    #[arg(long, global = true, env = "SUBCUR_SEED", default_value_t = 0)]
    pub seed: u64,

    /// Directory for files written without an explicit path.
    #[arg(long, global = true, env = "SUBCUR_OUTPUT_DIR", default_value = ".")]
    pub output_dir: PathBuf,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the reduced rank of a subgroup.
    Rank { subgroup: PathBuf },
    /// Print the index of a subgroup, or "infinite".
    Index { subgroup: PathBuf },
    /// Decide membership of a word.
    Member {
        subgroup: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Fiber product of two hull-cores: N(H, K), the SHNC bound, and a component census.
    Intersect {
        left: PathBuf,
        right: PathBuf,
        /// Write one DOT file per product component here.
        #[arg(long)]
        dot_dir: Option<PathBuf>,
    },
    /// Cylinder table of a combination of counting currents, given as [COEF:]FILE.
    Cylinders {
        #[arg(required = true)]
        terms: Vec<String>,
        #[arg(long)]
        radius: usize,
        /// Print decimals instead of exact fractions.
        #[arg(long)]
        decimal: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Realize an integral weight system as a union of counting currents.
    Realize {
        table: PathBuf,
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Replace a nearly admissible table by an admissible integral weight system.
    Approx {
        table: PathBuf,
        /// Max-norm tolerance, as p/q or a decimal.
        #[arg(long, default_value = "1/1000")]
        epsilon: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Distances from (1/n)·η(H_n) to η(F) on cylinders of one radius.
    Converge {
        #[arg(long)]
        radius: usize,
        #[arg(long, value_delimiter = ',', default_value = "2,4,8,16")]
        ns: Vec<usize>,
        #[arg(long)]
        decimal: bool,
        /// CSV destination; defaults to converge.csv in the output directory.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Write the core graph (or hull-core) of a subgroup in DOT syntax.
    Export {
        subgroup: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        hull: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
