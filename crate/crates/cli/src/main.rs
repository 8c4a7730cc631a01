use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

/// Hausdorff numbers of finite topologies and of the bug-eyed interval spaces.
#[derive(Parser, Debug)]
#[command(name = "hausdorff", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze a finite-topology/v1 file.
    Analyze {
        file: PathBuf,
        /// Also run the exhaustive oracle (at most 5 points) and require agreement.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Count topologies on N points, optionally by Hausdorff number.
    Enumerate(EnumerateArgs),
    /// Emit one of the named constructions as a topology file.
    Example {
        /// three-point, two-block:N, four-point, or doubled:N
        name: String,
        /// Check the construction's claimed properties; exit nonzero on failure.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Query a bug-eyed interval space.
    Symbolic(SymbolicArgs),
    /// Check T(n) = Σ S(n,k)·T0(k) with enumerated counts (n ≤ 5).
    Stirling {
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    pub n: usize,
    /// Report the number of homeomorphism classes.
    #[arg(long)]
    pub classes: bool,
    /// Report the number of labeled topologies.
    #[arg(long)]
    pub labeled: bool,
    /// Report counts grouped by Hausdorff number (the default).
    #[arg(long)]
    pub histogram: bool,
    /// Restrict to T0 topologies.
    #[arg(long)]
    pub t0_only: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: Format,
    /// Worker threads (defaults to the available parallelism).
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Args, Debug)]
pub struct SymbolicArgs {
    /// Number of vertical points, or "omega".
    #[arg(long, default_value = "1")]
    pub verticals: String,
    /// Use unpunctured neighborhoods (the non-T1 variant).
    #[arg(long)]
    pub no_t1: bool,
    #[command(subcommand)]
    pub query: SymbolicQuery,
}

#[derive(Subcommand, Debug)]
pub enum SymbolicQuery {
    /// Decide separability of a point list such as "b:1/2,v:1".
    Separable {
        #[arg(long)]
        points: String,
    },
    /// Report the Hausdorff number.
    Hnumber,
    /// Check the T1 condition for a pair of points.
    T1 {
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        pair: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Analyze {
            file,
            oracle,
            format,
        } => commands::analyze(&file, oracle, format),
        Command::Enumerate(args) => commands::enumerate(&args),
        Command::Example { name, verify, out } => commands::example(&name, verify, out.as_deref()),
        Command::Symbolic(args) => commands::symbolic(&args),
        Command::Stirling { n, format } => commands::stirling(n, format),
    };
    match result {
        Ok(commands::Outcome::Pass) => ExitCode::SUCCESS,
        Ok(commands::Outcome::CheckFailed(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
