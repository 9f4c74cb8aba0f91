use std::path::PathBuf;
use std::process::ExitCode;
use std::time::SystemTime;

use clap::{Parser, Subcommand};

use octoverify::checks::{run_verify, SuiteFilter};
use octoverify::commands::{run_decompose, CommandError, DecomposeRequest, OutputFormat};
use octoverify::render::{render_table, TableName};

/// Exact verification of octonionic and Lie-theoretic identities.
#[derive(Parser)]
#[command(name = "octoverify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a report.
    Verify {
        /// all, octonions, stabilizers, weyl, magic, multiplets or table35.
        #[arg(long, default_value = "all")]
        suite: SuiteFilter,
        /// json or md.
        #[arg(long, default_value = "json")]
        format: OutputFormat,
        /// Report path. Defaults to $OCTOVERIFY_OUT/octoverify-SUITE.EXT when
        /// that variable is set, otherwise standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a table: magic-square, sugra-triplet, table35 or spheres.
    Table { name: TableName },
    /// Decompose an irrep or one of its exterior powers.
    Decompose {
        /// Root system label such as D5 or E6.
        #[arg(long)]
        algebra: String,
        /// Preset name or comma-separated Dynkin labels.
        #[arg(long, alias = "preset")]
        hw: String,
        /// Take the k-th exterior power first.
        #[arg(long)]
        power: Option<usize>,
        /// Restrict to this subalgebra along its preset embedding.
        #[arg(long)]
        branch_to: Option<String>,
        #[arg(long, default_value = "md")]
        format: OutputFormat,
    },
    /// Restrict an irrep to a subalgebra and decompose.
    Branch {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, alias = "preset")]
        hw: String,
        #[arg(long, default_value = "md")]
        format: OutputFormat,
    },
}

fn timestamp() -> String {
    humantime::format_rfc3339_seconds(SystemTime::now()).to_string()
}

fn verify(suite: SuiteFilter, format: OutputFormat, out: Option<PathBuf>) -> ExitCode {
    let report = run_verify(suite, timestamp());
    eprintln!(
        "suite {}: {} pass, {} fail, {} flagged",
        report.suite, report.summary.pass, report.summary.fail, report.summary.flagged
    );
    let (text, ext) = match format {
        OutputFormat::Json => (report.to_json(), "json"),
        OutputFormat::Md => (report.to_markdown(), "md"),
    };
    let path = out.or_else(|| {
        std::env::var_os("OCTOVERIFY_OUT")
            .map(|dir| PathBuf::from(dir).join(format!("octoverify-{}.{ext}", report.suite)))
    });
    match path {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                if let Err(e) = std::fs::create_dir_all(parent) {
                    eprintln!("error: {}: {e}", parent.display());
                    return ExitCode::from(2);
                }
            }
            if let Err(e) = std::fs::write(&path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(if report.has_failures() { 1 } else { 0 })
}

fn finish(result: Result<String, CommandError>) -> ExitCode {
    match result {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Verify { suite, format, out } => verify(suite, format, out),
        Command::Table { name } => finish(render_table(name).map_err(CommandError::Engine)),
        Command::Decompose {
            algebra,
            hw,
            power,
            branch_to,
            format,
        } => finish(run_decompose(&DecomposeRequest {
            algebra,
            weight: hw,
            power,
            branch_to,
            format,
        })),
        Command::Branch {
            from,
            to,
            hw,
            format,
        } => finish(run_decompose(&DecomposeRequest {
            algebra: from,
            weight: hw,
            power: None,
            branch_to: Some(to),
            format,
        })),
    }
}
