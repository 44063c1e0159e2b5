//! `fqhe`: tables and checks for the complex-oscillator Hall model.
//!
//! Exit status: 0 success, 1 usage/parse/validation failure, 2 failed
//! verification check.

mod commands;
mod config;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use fqhe_core::{constants_for, UnitSystem};

use crate::config::SweepFile;
use crate::table::{Format, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Units {
    Si,
    Natural,
}

impl From<Units> for UnitSystem {
    fn from(u: Units) -> Self {
        match u {
            Units::Si => UnitSystem::Si,
            Units::Natural => UnitSystem::Natural,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fqhe",
    version,
    about = "Complex harmonic oscillator model of the fractional quantum Hall effect"
)]
struct Cli {
    /// Unit system for model quantities.
    #[arg(long, global = true, value_enum, default_value_t = Units::Si)]
    units: Units,

    /// Output format; `verify` defaults to json, everything else to csv.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Energies, angular momenta, radial peaks, normalization and momenta of both branches.
    States {
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        /// Field fixing ω = ω_c (SI units only).
        #[arg(long, default_value_t = 1.0)]
        field_tesla: f64,
    },
    /// The two conjugate charge / conductivity series.
    Series {
        #[arg(long, default_value_t = 4)]
        n_max: u32,
    },
    /// Magnetic-field sweep described by a JSON config file.
    Sweep { config: PathBuf },
    /// Closed forms against quadrature, convention probes and the discrepancy ledger.
    Verify {
        #[arg(long, default_value_t = 20)]
        n_max: u32,
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
        #[arg(long, default_value_t = 1.0)]
        field_tesla: f64,
    },
    /// Rotation and reflection angles, AB phases and flux quantization.
    Phases {
        #[arg(long, default_value_t = 4)]
        n_max: u32,
        #[arg(long, default_value_t = 3)]
        nw_max: u32,
    },
}

fn emit(table: &Table, format: Format, output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("creating {}", path.display()))?;
            table.write(format, BufWriter::new(file))
        }
        None => table.write(format, BufWriter::new(io::stdout().lock())),
    }
}

/// Runs the command; `Ok(false)` means a verification check failed.
fn run(cli: Cli) -> Result<bool> {
    let units = UnitSystem::from(cli.units);
    let format = cli.format;
    let (table, ok, default_format) = match cli.command {
        Command::States { n_max, field_tesla } => {
            let params = commands::oscillator(units, field_tesla)?;
            (commands::states(n_max, &params)?, true, Format::Csv)
        }
        Command::Series { n_max } => (commands::series(n_max)?, true, Format::Csv),
        Command::Sweep { config } => {
            let file = SweepFile::load(&config)?;
            (commands::sweep(&file, units)?, true, Format::Csv)
        }
        Command::Verify {
            n_max,
            tolerance,
            field_tesla,
        } => {
            let params = commands::oscillator(units, field_tesla)?;
            let outcome = commands::verify(n_max, tolerance, &params)?;
            if outcome.failures > 0 {
                eprintln!("verify: {} check(s) failed", outcome.failures);
            }
            (outcome.table, outcome.failures == 0, Format::Json)
        }
        Command::Phases { n_max, nw_max } => {
            let consts = constants_for(units);
            (commands::phases(n_max, nw_max, &consts)?, true, Format::Csv)
        }
    };
    emit(
        &table,
        format.unwrap_or(default_format),
        cli.output.as_ref(),
    )?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return if err.use_stderr() {
                ExitCode::from(1)
            } else {
                // --help / --version
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(err) => {
            let _ = io::stdout().flush();
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}
