//! `dsf` — tables and identity reports for the discrete Bessel and
//! Mathieu functions.
//!
//! Exit codes: 0 on success, 1 when an identity residual violates its
//! contract, 2 on usage errors.

mod commands;
mod grid;
mod output;

use clap::{Args, Parser, Subcommand};
use commands::CommandError;
use grid::GridSpec;
use output::OutputFormat;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dsf",
    about = "Discrete Bessel and Mathieu function tables on the N-point circle",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value = "csv")]
    format: OutputFormat,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Discrete vs continuous Bessel functions over a rho grid
    BesselTable {
        /// Lattice size (odd, >= 3)
        #[arg(long, default_value_t = 21)]
        n_points: usize,
        /// Orders, comma separated
        #[arg(long, value_delimiter = ',', default_value = "0,10")]
        orders: Vec<i64>,
        /// rho grid as min:max:step (inclusive endpoints)
        #[arg(long, default_value = "0:41:0.5")]
        grid: GridSpec,
        /// Threshold for the within_tolerance column
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Discrete vs continuous angular Mathieu functions on the lattice
    MathieuAngular {
        #[arg(long, default_value_t = 41)]
        n_points: usize,
        /// Mathieu parameter q
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        /// Orders, comma separated (se skips order 0)
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3,4,5")]
        orders: Vec<usize>,
        /// Optional psi grid for the continued discrete curve
        #[arg(long)]
        fine_grid: Option<GridSpec>,
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Discrete vs continuous radial Mathieu functions over a varrho grid
    MathieuRadial {
        #[arg(long, default_value_t = 21)]
        n_points: usize,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        orders: Vec<usize>,
        /// varrho grid as min:max:step
        #[arg(long, default_value = "0:3.3:0.02")]
        grid: GridSpec,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every identity check and report residuals (exit 1 on violation)
    IdentitySuite {
        #[arg(long, default_value_t = 21)]
        n_points: usize,
        #[arg(long, default_value_t = 2.0)]
        q: f64,
        #[arg(long, value_enum, default_value = "json")]
        format: OutputFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cartesian points of the elliptic-coordinate lattice
    EllipseLattice {
        #[arg(long, default_value_t = 21)]
        n_points: usize,
        /// varrho values as min:max:step
        #[arg(long, default_value = "0.5:1.5:0.5")]
        grid: GridSpec,
        #[command(flatten)]
        output: OutputArgs,
    },
}

fn write_output(text: &str, out: &Option<PathBuf>) -> Result<(), CommandError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CommandError::Contract(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, CommandError> {
    match cli.command {
        Command::BesselTable {
            n_points,
            orders,
            grid,
            tolerance,
            output,
        } => {
            let text = commands::bessel_table(n_points, &orders, grid, tolerance, output.format)?;
            write_output(&text, &output.out)?;
            Ok(true)
        }
        Command::MathieuAngular {
            n_points,
            q,
            orders,
            fine_grid,
            tolerance,
            output,
        } => {
            let text = commands::mathieu_angular(
                n_points,
                q,
                &orders,
                fine_grid,
                tolerance,
                output.format,
            )?;
            write_output(&text, &output.out)?;
            Ok(true)
        }
        Command::MathieuRadial {
            n_points,
            q,
            orders,
            grid,
            tolerance,
            output,
        } => {
            let text =
                commands::mathieu_radial(n_points, q, &orders, grid, tolerance, output.format)?;
            write_output(&text, &output.out)?;
            Ok(true)
        }
        Command::IdentitySuite {
            n_points,
            q,
            format,
            out,
        } => {
            let (text, all_pass) = commands::identity_suite(n_points, q, format)?;
            write_output(&text, &out)?;
            Ok(all_pass)
        }
        Command::EllipseLattice {
            n_points,
            grid,
            output,
        } => {
            let text = commands::ellipse_lattice(n_points, grid, output.format)?;
            write_output(&text, &output.out)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("dsf: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
