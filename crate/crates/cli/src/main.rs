use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use fractus::{load, CliError, MethodName, SolveArgs, EXIT_INVALID};

/// Cauchy type problems for linear fractional differential equations.
#[derive(Parser)]
#[command(name = "fractus", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the integrability table, k0 and the solvability verdict.
    Check { file: PathBuf },
    /// Solve and write the solution as CSV.
    Solve {
        file: PathBuf,
        /// picard, marching or series.
        #[arg(long)]
        method: Option<MethodName>,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Number of evaluation points on (a, b].
        #[arg(long)]
        eval_nodes: Option<usize>,
        /// Replace b_k by 0 for k > k0 instead of failing.
        #[arg(long)]
        project_initial: bool,
    },
    /// List the terms of the canonical solution y_i.
    Fundamental {
        file: PathBuf,
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// List the terms of the Green's function G(x; xi).
    Green {
        file: PathBuf,
        #[arg(long)]
        xi: f64,
        #[arg(long, default_value_t = 10)]
        terms: usize,
    },
    /// Print the normalized problem file.
    Dump { file: PathBuf },
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("FRACTUS_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("FRACTUS_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Check { file } => fractus::cmd_check(&load(&file)?, &mut out),
        Command::Solve {
            file,
            method,
            out: path,
            eval_nodes,
            project_initial,
        } => {
            let problem = load(&file)?;
            let args = SolveArgs {
                method,
                eval_nodes,
                project_initial,
            };
            let mut diag = std::io::stderr();
            match path {
                Some(path) => {
                    let mut buf = Vec::new();
                    fractus::cmd_solve(&problem, &args, &mut buf, &mut diag)?;
                    std::fs::write(&path, buf).map_err(|source| CliError::Io {
                        path: path.display().to_string(),
                        source,
                    })
                }
                None => fractus::cmd_solve(&problem, &args, &mut out, &mut diag),
            }
        }
        Command::Fundamental { file, i, terms } => fractus::cmd_fundamental(&load(&file)?, i, terms, &mut out),
        Command::Green { file, xi, terms } => fractus::cmd_green(&load(&file)?, xi, terms, &mut out),
        Command::Dump { file } => fractus::cmd_dump(&load(&file)?, &mut out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INVALID as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_INVALID as u8);
    }
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = std::io::stdout().flush();
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
