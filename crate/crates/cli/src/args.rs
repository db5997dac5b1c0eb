use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qheat_core::BathKind;

/// Steady-state heat current and quantum correlations of two XY-coupled
/// qubits between two thermal baths. Writes CSV.
#[derive(Debug, Parser)]
#[command(name = "qheat", version)]
pub struct Cli {
    /// Write CSV here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a single (T_L, T_R) configuration.
    Point {
        #[command(flatten)]
        physics: Physics,
        /// Left bath temperature.
        #[arg(long, value_parser = nonnegative, allow_negative_numbers = true)]
        tl: f64,
        /// Right bath temperature.
        #[arg(long, value_parser = nonnegative, allow_negative_numbers = true)]
        tr: f64,
    },
    /// Sweep one temperature variable over a uniform grid.
    Sweep {
        #[command(flatten)]
        physics: Physics,
        /// Swept variable: `t` (T_L = T_R), `tr` (T_R at fixed --tl),
        /// `dt` (T_L = Ta + dT, T_R = Ta - dT at fixed --ta).
        #[arg(long, value_enum)]
        var: SweepVar,
        /// First grid value.
        #[arg(long, allow_negative_numbers = true)]
        lo: f64,
        /// Last grid value.
        #[arg(long, allow_negative_numbers = true)]
        hi: f64,
        /// Number of grid points.
        #[arg(long, default_value_t = 100)]
        n: usize,
        /// Fixed left temperature (`--var tr`).
        #[arg(long, value_parser = nonnegative, allow_negative_numbers = true)]
        tl: Option<f64>,
        /// Mean temperature (`--var dt`).
        #[arg(long, value_parser = positive, allow_negative_numbers = true)]
        ta: Option<f64>,
    },
    /// Forward and reversed heat current for biases in [--lo, --hi].
    Rect {
        #[command(flatten)]
        physics: Physics,
        /// Mean temperature.
        #[arg(long, default_value_t = 1.0, value_parser = positive, allow_negative_numbers = true)]
        ta: f64,
        /// Smallest bias.
        #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
        lo: f64,
        /// Largest bias.
        #[arg(long, default_value_t = 0.95, allow_negative_numbers = true)]
        hi: f64,
        /// Number of biases.
        #[arg(long, default_value_t = 19)]
        n: usize,
    },
    /// Equilibrium temperature at which concurrence first vanishes.
    Death {
        #[command(flatten)]
        physics: Physics,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SweepVar {
    T,
    Tr,
    Dt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Bath {
    Boson,
    Spin,
}

impl From<Bath> for BathKind {
    fn from(b: Bath) -> Self {
        match b {
            Bath::Boson => BathKind::Boson,
            Bath::Spin => BathKind::Spin,
        }
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct Physics {
    /// Qubit level splitting.
    #[arg(long, default_value_t = 0.2, value_parser = positive, allow_negative_numbers = true)]
    pub epsilon: f64,
    /// Inter-qubit XY coupling.
    #[arg(long, default_value_t = 1.0, value_parser = positive, allow_negative_numbers = true)]
    pub kappa: f64,
    /// Reservoir statistics (both baths).
    #[arg(long, value_enum, default_value_t = Bath::Boson)]
    pub bath: Bath,
    /// Left coupling constant.
    #[arg(long = "gamma-l", default_value_t = 1.0, value_parser = nonnegative, allow_negative_numbers = true)]
    pub gamma_l: f64,
    /// Right coupling constant.
    #[arg(long = "gamma-r", default_value_t = 1.0, value_parser = nonnegative, allow_negative_numbers = true)]
    pub gamma_r: f64,
}

fn parse_finite(s: &str) -> Result<f64, String> {
    let x: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    if x.is_finite() {
        Ok(x)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let x = parse_finite(s)?;
    if x > 0.0 {
        Ok(x)
    } else {
        Err(format!("must be > 0, got {x}"))
    }
}

fn nonnegative(s: &str) -> Result<f64, String> {
    let x = parse_finite(s)?;
    if x >= 0.0 {
        Ok(x)
    } else {
        Err(format!("must be >= 0, got {x}"))
    }
}
