use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pgroup_core::chartab::DEFAULT_SEED;
use pgroup_core::workflow::{self, Options, WorkflowError};

/// Finite p-groups: character tables and imprimitive irreducibles.
#[derive(Parser)]
#[command(name = "pgroup", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group file, compute its table and decide the property,
    /// cross-checking against the group
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Emit the character table of a group file
    Chartab {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Decide the property from a table file alone
    CheckTable {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Check the homology of the rose cover on the file's generators
    VerifyCover {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Analyze every *.group file in a directory
    Census {
        dir: PathBuf,
        /// Worker threads
        #[arg(long, default_value_t = default_jobs())]
        jobs: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Coset cap for presentations, overriding the file
    #[arg(long)]
    max_cosets: Option<usize>,
    /// Seed for the random splitting in the table computation
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Add floating-point approximations next to exact values
    #[arg(long)]
    approx: bool,
    /// Write output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn options(&self) -> Options {
        Options {
            seed: self.seed,
            max_cosets: self.max_cosets,
            approx: self.approx,
        }
    }
}

fn default_jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn read(path: &Path) -> Result<String, WorkflowError> {
    std::fs::read_to_string(path).map_err(|e| WorkflowError::Input(format!("{}: {e}", path.display())))
}

fn write(out: Option<&Path>, text: &str) -> Result<(), WorkflowError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| WorkflowError::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, WorkflowError> {
    match cli.command {
        Command::Analyze { file, common } => {
            let (_, doc) = workflow::analyze(&read(&file)?, &common.options())?;
            write(common.out.as_deref(), &doc.emit())?;
        }
        Command::Chartab { file, common } => {
            let text = workflow::chartab(&read(&file)?, &common.options())?;
            write(common.out.as_deref(), &text)?;
        }
        Command::CheckTable { file, common } => {
            let (_, doc) = workflow::check_table(&read(&file)?, &common.options())?;
            write(common.out.as_deref(), &doc.emit())?;
        }
        Command::VerifyCover { file, common } => {
            let doc = workflow::verify_cover(&read(&file)?, &common.options())?;
            write(common.out.as_deref(), &doc.emit())?;
        }
        Command::Census { dir, jobs, common } => {
            let census = workflow::census(&dir, &common.options(), jobs)?;
            write(common.out.as_deref(), &census.document().emit())?;
            for (file, e) in &census.failures {
                eprintln!("error: {file}: {e}");
            }
            return Ok(census.worst_exit_code());
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
