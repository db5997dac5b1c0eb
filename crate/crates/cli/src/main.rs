mod args;
mod output;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use qheat_core::experiments::{
    evaluate_point, rectification_scan, run_sweep, sudden_death_temperature, uniform_grid, SweepSpec,
    SweepVariable,
};
use qheat_core::{BathKind, BathSpec, SystemParams};

use args::{Cli, Command, Physics, SweepVar};
use output::RunColumns;

const EXIT_BAD_FLAGS: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;

/// A failed run: what to print and which exit code to use.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn flag(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_BAD_FLAGS,
            message: message.into(),
        }
    }
}

impl From<qheat_core::Error> for Failure {
    fn from(e: qheat_core::Error) -> Self {
        let code = if e.is_degenerate_physics() {
            EXIT_DEGENERATE
        } else {
            EXIT_BAD_FLAGS
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Self {
            code: 1,
            message: format!("writing CSV: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_BAD_FLAGS)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&cli.command).and_then(|csv| emit(cli.out.as_deref(), &csv)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("qheat: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(out: Option<&std::path::Path>, bytes: &[u8]) -> Result<(), Failure> {
    let io_fail = |e: std::io::Error| Failure {
        code: 1,
        message: format!("writing output: {e}"),
    };
    match out {
        Some(path) => std::fs::write(path, bytes).map_err(io_fail),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(bytes)
                .and_then(|()| stdout.flush())
                .map_err(io_fail)
        }
    }
}

fn system(p: &Physics) -> Result<SystemParams, Failure> {
    Ok(SystemParams::new(p.epsilon, p.kappa)?)
}

fn columns(p: &Physics) -> RunColumns {
    RunColumns {
        gamma_l: p.gamma_l,
        gamma_r: p.gamma_r,
        bath: p.bath.into(),
        epsilon: p.epsilon,
        kappa: p.kappa,
    }
}

fn run(command: &Command) -> Result<Vec<u8>, Failure> {
    match command {
        Command::Point { physics, tl, tr } => {
            let sys = system(physics)?;
            let kind: BathKind = physics.bath.into();
            let left = BathSpec::new(kind, physics.gamma_l, *tl)?;
            let right = BathSpec::new(kind, physics.gamma_r, *tr)?;
            let row = evaluate_point(&sys, &left, &right)?;
            Ok(output::rows_csv(&columns(physics), &[row])?)
        }
        Command::Sweep {
            physics,
            var,
            lo,
            hi,
            n,
            tl,
            ta,
        } => {
            let sys = system(physics)?;
            if !(lo < hi) {
                return Err(Failure::flag("--lo must be smaller than --hi"));
            }
            if *n < 2 {
                return Err(Failure::flag("--n must be at least 2"));
            }
            let variable = match var {
                SweepVar::T | SweepVar::Tr if *lo < 0.0 => {
                    return Err(Failure::flag("--lo must be >= 0 for temperature sweeps"));
                }
                SweepVar::T => SweepVariable::Common,
                SweepVar::Tr => SweepVariable::Right {
                    t_left: tl.ok_or_else(|| Failure::flag("--var tr requires --tl"))?,
                },
                SweepVar::Dt => {
                    let t_average = ta.ok_or_else(|| Failure::flag("--var dt requires --ta"))?;
                    if *lo <= -t_average || *hi >= t_average {
                        return Err(Failure::flag("--lo and --hi must lie strictly inside (-ta, ta)"));
                    }
                    SweepVariable::Bias { t_average }
                }
            };
            let spec = SweepSpec {
                params: sys,
                kind: physics.bath.into(),
                gamma_left: physics.gamma_l,
                gamma_right: physics.gamma_r,
                variable,
                lo: *lo,
                hi: *hi,
                points: *n,
            };
            let rows = run_sweep(&spec)?;
            Ok(output::rows_csv(&columns(physics), &rows)?)
        }
        Command::Rect {
            physics,
            ta,
            lo,
            hi,
            n,
        } => {
            let sys = system(physics)?;
            if *n < 1 {
                return Err(Failure::flag("--n must be at least 1"));
            }
            if !(*lo > 0.0 && lo <= hi && *hi < *ta) || (*n > 1 && lo == hi) {
                return Err(Failure::flag("need 0 < --lo < --hi < --ta"));
            }
            let grid = uniform_grid(*lo, *hi, *n);
            let points = rectification_scan(
                &sys,
                physics.bath.into(),
                physics.gamma_l,
                physics.gamma_r,
                *ta,
                &grid,
            )?;
            Ok(output::rect_csv(&points)?)
        }
        Command::Death { physics } => {
            let sys = system(physics)?;
            let t = sudden_death_temperature(&sys, physics.bath.into(), physics.gamma_l, physics.gamma_r)?;
            Ok(output::death_csv(t)?)
        }
    }
}
