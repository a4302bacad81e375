use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use latql_core::export::{render, Format};
use latql_core::io;
use latql_core::lattice::build_lattice;
use latql_core::oracle;
use latql_core::query::{parse_query, Catalog, Executor, Value};
use latql_core::{LatqlError, Result};

#[derive(Parser)]
#[command(name = "latql", version, about = "Concept-lattice query engine")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the concept lattice of a Burmeister context file.
    Build {
        /// Path to a .cxt file.
        context: PathBuf,
        #[arg(long, default_value = "text")]
        format: String,
        /// Re-run the brute-force enumerator and diff against the lattice.
        #[arg(long)]
        oracle: bool,
    },
    /// Evaluate a query expression against a session configuration.
    Query {
        /// Session configuration file (TOML).
        #[arg(short = 'f', long = "config")]
        config: PathBuf,
        expr: String,
        #[arg(long, default_value = "text")]
        format: String,
        #[arg(long)]
        oracle: bool,
    },
    /// Evaluate a query and export the result in the chosen format.
    Export {
        #[arg(short = 'f', long = "config")]
        config: PathBuf,
        expr: String,
        #[arg(long)]
        format: String,
    },
}

fn load_catalog(config: &Path) -> Result<Catalog> {
    let text = std::fs::read_to_string(config).map_err(|e| LatqlError::Io {
        path: config.display().to_string(),
        source: e,
    })?;
    let cfg = io::parse_session_config(&text)?;
    let base = config.parent().unwrap_or(Path::new("."));
    Catalog::from_config(&cfg, base)
}

/// Diff the lattice underlying a result value against the brute-force
/// enumerator; prints one line and errors on mismatch.
fn oracle_check(value: &Value) -> Result<()> {
    let lat = match value {
        Value::Lattice(l) => l,
        Value::Selection { lattice, .. } | Value::Approx { lattice, .. } => lattice,
        Value::Projection(p) => p.lattice(),
        other => {
            println!("oracle: skipped ({} result has no lattice)", other.kind());
            return Ok(());
        }
    };
    let pairs: Vec<_> = lat
        .concepts()
        .iter()
        .map(|c| (c.extent().clone(), c.intent().clone()))
        .collect();
    let (missing, extra) = oracle::diff_against_lattice(lat.context(), &pairs);
    if missing == 0 && extra == 0 {
        println!("oracle: ok ({} concepts)", lat.len());
        Ok(())
    } else {
        Err(LatqlError::Invariant(format!(
            "oracle diff: {missing} missing, {extra} extra concepts"
        )))
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Build {
            context,
            format,
            oracle,
        } => {
            let format: Format = format.parse()?;
            let text = std::fs::read_to_string(&context).map_err(|e| LatqlError::Io {
                path: context.display().to_string(),
                source: e,
            })?;
            let ctx = io::read_burmeister(&text, &context.display().to_string())?;
            let value = Value::Lattice(build_lattice(&ctx));
            if oracle {
                oracle_check(&value)?;
            }
            print!("{}", render(&value, format)?);
            Ok(())
        }
        Command::Query {
            config,
            expr,
            format,
            oracle,
        } => {
            let format: Format = format.parse()?;
            let catalog = load_catalog(&config)?;
            let ast = parse_query(&expr)?;
            let value = Executor::new(&catalog).execute(&ast)?;
            if oracle {
                oracle_check(&value)?;
            }
            print!("{}", render(&value, format)?);
            Ok(())
        }
        Command::Export {
            config,
            expr,
            format,
        } => {
            let format: Format = format.parse()?;
            let catalog = load_catalog(&config)?;
            let ast = parse_query(&expr)?;
            let value = Executor::new(&catalog).execute(&ast)?;
            print!("{}", render(&value, format)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("latql: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
