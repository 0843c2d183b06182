use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use quasiring::command::{run_command, Command, CommandError, Options};
use quasiring::dsl::{parse_spec, SpecFile};
use quasiring::funcspace::seq::DEFAULT_PREFIX;
use quasiring::funcspace::DEFAULT_BUDGET;
use quasiring::report::{render_report, Format};

/// Rings of continuous functions C(X, Y) over finite spaces.
#[derive(Parser)]
#[command(name = "quasiring", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Emit the JSON report instead of text tables.
    #[arg(long, global = true)]
    json: bool,
    /// Enumeration budget (elements of C(X, Y)).
    #[arg(long, global = true, env = "QUASIRING_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Prefix length for the sequence backend.
    #[arg(long, global = true, default_value_t = DEFAULT_PREFIX)]
    prefix: usize,
    /// Restrict to one ring binding of the spec file.
    #[arg(long, global = true)]
    ring: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Quasi-components, clopens and topology comparisons.
    Analyze { spec: PathBuf },
    /// Ideal lattice, prime classification and radical.
    Ideals { spec: PathBuf },
    /// Run checkers by id (prefix match, or `all`).
    Check {
        spec: PathBuf,
        #[arg(default_value = "all")]
        ids: Vec<String>,
        /// Seed for sampled checkers.
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Build C(discrete N, A) with exactly N primes.
    Generate {
        /// Optional spec file supplying named algebras.
        spec: Option<PathBuf>,
        #[arg(long)]
        primes: usize,
        /// `zmod:N` or an algebra name from the spec file.
        #[arg(long, default_value = "zmod:2")]
        algebra: String,
    },
    /// Seeded random campaign over every checker.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
    /// Execute the directives of a spec file.
    Run { spec: PathBuf },
}

fn load(path: &PathBuf) -> Result<SpecFile, CommandError> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| CommandError::Usage(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CommandError::Usage(format!("{}: {e}", path.display())))?
    };
    Ok(parse_spec(&text)?)
}

fn execute(cli: Cli) -> Result<(String, i32), CommandError> {
    let mut opts = Options { budget: cli.common.budget, prefix: cli.common.prefix, seed: None, ring: cli.common.ring };
    let (spec, cmd) = match cli.command {
        Cmd::Analyze { spec } => (Some(load(&spec)?), Command::Analyze),
        Cmd::Ideals { spec } => (Some(load(&spec)?), Command::Ideals),
        Cmd::Check { spec, ids, seed } => {
            opts.seed = seed;
            (Some(load(&spec)?), Command::Check(ids))
        }
        Cmd::Generate { spec, primes, algebra } => (spec.as_ref().map(load).transpose()?, Command::Generate { primes, algebra }),
        Cmd::Fuzz { seed, instances } => (None, Command::Fuzz { seed, instances }),
        Cmd::Run { spec } => (Some(load(&spec)?), Command::Run),
    };
    let report = run_command(spec.as_ref(), &cmd, &opts)?;
    let format = if cli.common.json { Format::Json } else { Format::Text };
    Ok((render_report(&report, format), report.exit_code()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli) {
        Ok((out, code)) => {
            let _ = io::stdout().write_all(out.as_bytes());
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("quasiring: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
