//! `square7`: reproducible verification runs.
//!
//! Exit status: 0 when everything checked passes, 1 on a mathematical
//! failure (a counterexample or a negative charge), 2 on usage or input
//! errors. Reports go to stdout and depend only on the inputs and flags
//! that change the problem; progress and timings go to stderr.

mod manifest;
mod run;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use manifest::RunManifest;

#[derive(Parser)]
#[command(name = "square7", version, about = "Verify that squares of subcubic planar graphs are 7-colorable")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct EngineFlags {
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    /// Split the precolorings by the colorings of this many prefix vertices
    #[arg(long)]
    root_depth: Option<usize>,
    /// Prefix blocks settled at once at the end of the prefix (0 disables)
    #[arg(long, default_value_t = square7::engine::DEFAULT_TAIL_BLOCKS)]
    tail_blocks: usize,
    /// Write a run manifest to this file
    #[arg(long)]
    manifest: Option<PathBuf>,
    /// Suppress progress on stderr
    #[arg(long, short)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one configuration or family, e.g. `3c3`, `3D3-4`, `4c5*5`
    Verify {
        spec: String,
        #[arg(short, default_value_t = 7)]
        k: usize,
        /// Give up after this many attempts (plain plus dashed sets)
        #[arg(long, default_value_t = 64)]
        max_attempts: usize,
        #[command(flatten)]
        engine: EngineFlags,
    },
    /// Verify the whole catalog and print a summary table
    VerifyAll {
        #[arg(short, default_value_t = 7)]
        k: usize,
        /// Restrict to these configurations or families (comma separated or repeated)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        #[arg(long, default_value_t = 64)]
        max_attempts: usize,
        #[command(flatten)]
        engine: EngineFlags,
    },
    /// Run the extension engine on a problem file (`k=<int> t=<int>` header, then a graph)
    PrecolorExtend {
        file: PathBuf,
        /// Override the header's color count
        #[arg(short)]
        k: Option<usize>,
        /// Override the header's prefix size
        #[arg(short)]
        t: Option<usize>,
        /// Only precolorings extending this comma-separated prefix coloring
        #[arg(long)]
        root: Option<String>,
        #[command(flatten)]
        engine: EngineFlags,
    },
    /// Check the discharging argument
    DischargeCheck {
        /// Largest face length in the long-face sweep
        #[arg(long = "max", default_value_t = 20)]
        r_max: usize,
        /// Switch off a configuration (`ALL` for every one); repeatable
        #[arg(long)]
        drop_rule: Vec<String>,
    },
    /// Print the square of a graph file
    Square { file: PathBuf },
    /// Print the chromatic number of a graph file, up to a bound
    Chi {
        file: PathBuf,
        #[arg(long = "max", default_value_t = 7)]
        kmax: usize,
    },
    /// Search small subcubic planar graphs whose square is complete
    Sharpness {
        #[arg(short, default_value_t = 7)]
        n: usize,
    },
    /// Write every catalog configuration (`.graph`, `.j`) and a manifest to a directory
    Export {
        dir: PathBuf,
        #[arg(short, default_value_t = 7)]
        k: usize,
    },
}

/// Outcome of a command: the exit status and what to put in a manifest.
pub struct Outcome {
    pub code: u8,
    pub manifest: Option<RunManifest>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let manifest_path = match &cli.command {
        Command::Verify { engine, .. } | Command::VerifyAll { engine, .. } | Command::PrecolorExtend { engine, .. } => {
            engine.manifest.clone()
        }
        _ => None,
    };
    let result = match cli.command {
        Command::Verify { spec, k, max_attempts, engine } => run::verify(&spec, k, max_attempts, &engine),
        Command::VerifyAll { k, only, max_attempts, engine } => run::verify_all(k, &only, max_attempts, &engine),
        Command::PrecolorExtend { file, k, t, root, engine } => {
            run::precolor_extend(&file, k, t, root.as_deref(), &engine)
        }
        Command::DischargeCheck { r_max, drop_rule } => run::discharge_check(r_max, &drop_rule),
        Command::Square { file } => run::square(&file),
        Command::Chi { file, kmax } => run::chi(&file, kmax),
        Command::Sharpness { n } => run::sharpness(n),
        Command::Export { dir, k } => run::export(&dir, k),
    };
    match result {
        Ok(outcome) => {
            if let (Some(path), Some(m)) = (manifest_path, outcome.manifest) {
                if let Err(e) = fs::write(&path, m.to_string()) {
                    eprintln!("error: cannot write manifest {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
