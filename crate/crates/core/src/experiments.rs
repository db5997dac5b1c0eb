//! Sweeps over bath temperatures, rectification scans and the equilibrium
//! sudden-death temperature.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::baths::{BathKind, BathSpec};
use crate::correlations::{concurrence, correlation_report, CorrelationReport};
use crate::error::{check_finite_nonnegative, check_positive, Error, Result};
use crate::model::SystemParams;
use crate::solver::{channel_rates, heat_current, steady_populations, Populations};

/// Which temperatures move during a sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SweepVariable {
    /// `T_L = T_R = x`.
    Common,
    /// `T_R = x` with `T_L` held fixed.
    Right {
        /// Fixed left temperature.
        t_left: f64,
    },
    /// `T_L = T_avg + x`, `T_R = T_avg - x`.
    Bias {
        /// Mean temperature.
        t_average: f64,
    },
}

impl SweepVariable {
    /// `(T_L, T_R)` at sweep coordinate `x`.
    pub fn temperatures(&self, x: f64) -> (f64, f64) {
        match *self {
            SweepVariable::Common => (x, x),
            SweepVariable::Right { t_left } => (t_left, x),
            SweepVariable::Bias { t_average } => (t_average + x, t_average - x),
        }
    }
}

/// A one-dimensional sweep on a uniform grid closed at both ends.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    /// Qubit parameters.
    pub params: SystemParams,
    /// Statistics of both baths.
    pub kind: BathKind,
    /// Left coupling.
    pub gamma_left: f64,
    /// Right coupling.
    pub gamma_right: f64,
    /// Swept quantity.
    pub variable: SweepVariable,
    /// First grid value.
    pub lo: f64,
    /// Last grid value.
    pub hi: f64,
    /// Number of grid points, at least 2.
    pub points: usize,
}

impl SweepSpec {
    /// Checks grid shape and that every generated temperature is valid.
    ///
    /// Bias sweeps must keep `|x| < T_avg` so both baths stay above zero.
    pub fn validate(&self) -> Result<()> {
        check_finite_nonnegative("gamma_left", self.gamma_left)?;
        check_finite_nonnegative("gamma_right", self.gamma_right)?;
        if !(self.lo < self.hi) || !self.lo.is_finite() || !self.hi.is_finite() {
            return Err(Error::InvalidSweep("lo must be < hi"));
        }
        if self.points < 2 {
            return Err(Error::InvalidSweep("need at least 2 points"));
        }
        match self.variable {
            SweepVariable::Common | SweepVariable::Right { .. } if self.lo < 0.0 => {
                Err(Error::InvalidSweep("temperatures must be >= 0"))
            }
            SweepVariable::Right { t_left } => check_finite_nonnegative("t_left", t_left).map(drop),
            SweepVariable::Bias { t_average } => {
                check_positive("t_average", t_average)?;
                if self.lo <= -t_average || self.hi >= t_average {
                    Err(Error::InvalidSweep("bias sweeps need |dT| < T_avg"))
                } else {
                    Ok(())
                }
            }
            SweepVariable::Common => Ok(()),
        }
    }

    /// The sweep coordinates, ascending.
    pub fn grid(&self) -> Vec<f64> {
        uniform_grid(self.lo, self.hi, self.points)
    }
}

/// `n` evenly spaced values from `lo` to `hi` inclusive.
pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => alloc::vec![lo],
        _ => {
            let last = (n - 1) as f64;
            (0..n)
                .map(|i| {
                    let t = i as f64 / last;
                    lo * (1.0 - t) + hi * t
                })
                .collect()
        }
    }
}

/// Everything computed at one pair of bath temperatures.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    /// Left bath temperature.
    pub t_left: f64,
    /// Right bath temperature.
    pub t_right: f64,
    /// Steady-state populations.
    pub populations: Populations,
    /// Heat current out of the left bath.
    pub heat_current: f64,
    /// Correlation measures of the steady state.
    pub correlations: CorrelationReport,
}

/// Solves a single configuration.
pub fn evaluate_point(params: &SystemParams, left: &BathSpec, right: &BathSpec) -> Result<SweepRow> {
    let rates = channel_rates(params, left, right)?;
    let populations = steady_populations(&rates)?;
    Ok(SweepRow {
        t_left: left.temperature(),
        t_right: right.temperature(),
        populations,
        heat_current: heat_current(params, &rates),
        correlations: correlation_report(&populations),
    })
}

fn evaluate_at(
    params: &SystemParams,
    kind: BathKind,
    gamma_left: f64,
    gamma_right: f64,
    (t_left, t_right): (f64, f64),
    index: usize,
) -> Result<SweepRow> {
    let at_point = |source: Error| Error::AtPoint {
        index,
        t_left,
        t_right,
        source: Box::new(source),
    };
    let left = BathSpec::new(kind, gamma_left, t_left).map_err(at_point)?;
    let right = BathSpec::new(kind, gamma_right, t_right).map_err(at_point)?;
    evaluate_point(params, &left, &right).map_err(at_point)
}

/// One row per grid point, in ascending order of the sweep coordinate.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    spec.grid()
        .into_iter()
        .enumerate()
        .map(|(i, x)| {
            evaluate_at(
                &spec.params,
                spec.kind,
                spec.gamma_left,
                spec.gamma_right,
                spec.variable.temperatures(x),
                i,
            )
        })
        .collect()
}

/// Heat current under a bias and under its reversal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RectificationPoint {
    /// Bias magnitude.
    pub delta_t: f64,
    /// `J_L` at `T_L = T_avg + dT`, `T_R = T_avg - dT`.
    pub forward: f64,
    /// `J_L` at `T_L = T_avg - dT`, `T_R = T_avg + dT`.
    pub reverse: f64,
}

impl RectificationPoint {
    /// `|J(-dT)| / |J(+dT)|`.
    pub fn ratio(&self) -> f64 {
        libm::fabs(self.reverse) / libm::fabs(self.forward)
    }
}

/// Forward and reverse currents for each bias in `grid`, which must lie in
/// `(0, T_avg)`.
pub fn rectification_scan(
    params: &SystemParams,
    kind: BathKind,
    gamma_left: f64,
    gamma_right: f64,
    t_average: f64,
    grid: &[f64],
) -> Result<Vec<RectificationPoint>> {
    check_positive("t_average", t_average)?;
    if grid.iter().any(|&d| !(d > 0.0 && d < t_average)) {
        return Err(Error::InvalidSweep("rectification biases must lie in (0, T_avg)"));
    }
    let bias = SweepVariable::Bias { t_average };
    grid.iter()
        .enumerate()
        .map(|(i, &d)| {
            let fwd = evaluate_at(params, kind, gamma_left, gamma_right, bias.temperatures(d), i)?;
            let rev = evaluate_at(params, kind, gamma_left, gamma_right, bias.temperatures(-d), i)?;
            Ok(RectificationPoint {
                delta_t: d,
                forward: fwd.heat_current,
                reverse: rev.heat_current,
            })
        })
        .collect()
}

/// Search window and tolerance for [`sudden_death_temperature_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeathSearch {
    /// Upper end of the coarse scan; the scan starts at `t_max / coarse_points`.
    pub t_max: f64,
    /// Number of coarse scan temperatures.
    pub coarse_points: usize,
    /// Bisection stops once the bracket is narrower than this.
    pub tolerance: f64,
}

impl DeathSearch {
    /// 64-point scan up to `4 (kappa + epsilon)`, 1e-6 bracket.
    pub fn for_params(params: &SystemParams) -> Self {
        Self {
            t_max: 4.0 * (params.kappa() + params.epsilon()),
            coarse_points: 64,
            tolerance: 1e-6,
        }
    }
}

/// Lowest equilibrium temperature (`T_L = T_R`) at which concurrence
/// vanishes, with the default [`DeathSearch`].
pub fn sudden_death_temperature(
    params: &SystemParams,
    kind: BathKind,
    gamma_left: f64,
    gamma_right: f64,
) -> Result<f64> {
    sudden_death_temperature_with(
        params,
        kind,
        gamma_left,
        gamma_right,
        &DeathSearch::for_params(params),
    )
}

/// Coarse scan for the first zero of `C(T)`, then bisection on `C(T) > 0`.
pub fn sudden_death_temperature_with(
    params: &SystemParams,
    kind: BathKind,
    gamma_left: f64,
    gamma_right: f64,
    search: &DeathSearch,
) -> Result<f64> {
    check_positive("t_max", search.t_max)?;
    check_positive("tolerance", search.tolerance)?;
    if search.coarse_points < 2 {
        return Err(Error::InvalidSweep("need at least 2 coarse points"));
    }
    let entangled = |t: f64| -> Result<bool> {
        let row = evaluate_at(params, kind, gamma_left, gamma_right, (t, t), 0)?;
        Ok(concurrence(&row.populations) > 0.0)
    };

    let step = search.t_max / search.coarse_points as f64;
    if !entangled(step)? {
        return Err(Error::NoEntanglement { temperature: step });
    }
    let mut lo = step;
    let mut hi = None;
    for k in 2..=search.coarse_points {
        let t = step * k as f64;
        if entangled(t)? {
            lo = t;
        } else {
            hi = Some(t);
            break;
        }
    }
    let mut hi = hi.ok_or(Error::NoSuddenDeath {
        temperature: search.t_max,
    })?;

    while hi - lo > search.tolerance {
        let mid = 0.5 * (lo + hi);
        if entangled(mid)? {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}
