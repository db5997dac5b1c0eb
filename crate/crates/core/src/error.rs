use alloc::boxed::Box;
use core::fmt;

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong while building or solving a configuration.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A parameter that must be strictly positive was not.
    NonPositive {
        /// Parameter name.
        name: &'static str,
        /// Offending value.
        value: f64,
    },
    /// A parameter that must be nonnegative was not (or was NaN, or an
    /// infinite value where only finite ones make sense).
    Negative {
        /// Parameter name.
        name: &'static str,
        /// Offending value.
        value: f64,
    },
    /// Populations are negative, above one, or do not sum to one.
    InvalidPopulations(&'static str),
    /// A transition rate is negative or not finite.
    InvalidRate(f64),
    /// `epsilon == kappa`: the 1<->2 and 3<->4 gaps close.
    DegenerateGap {
        /// Qubit splitting.
        epsilon: f64,
        /// XY coupling.
        kappa: f64,
    },
    /// A transition frequency passed to a rate function was not positive.
    NonPositiveFrequency(f64),
    /// Some channel has no rates at all, so the steady state is not unique.
    NonUniqueSteadyState,
    /// The generator kernel is not one-dimensional.
    RankDeficient,
    /// A sweep or scan specification is malformed.
    InvalidSweep(&'static str),
    /// A sweep point failed; carries the point and the underlying error.
    AtPoint {
        /// Zero-based index into the sweep grid.
        index: usize,
        /// Left bath temperature at the failing point.
        t_left: f64,
        /// Right bath temperature at the failing point.
        t_right: f64,
        /// What went wrong there.
        source: Box<Error>,
    },
    /// Concurrence already vanishes at the lowest probed temperature.
    NoEntanglement {
        /// Lowest probed temperature.
        temperature: f64,
    },
    /// Concurrence never vanished inside the search window.
    NoSuddenDeath {
        /// Upper end of the search window.
        temperature: f64,
    },
}

impl Error {
    /// True for failures caused by the physics of a valid-looking input
    /// (degenerate spectrum, frozen channels, no entanglement) rather than
    /// an out-of-domain value.
    pub fn is_degenerate_physics(&self) -> bool {
        match self {
            Error::DegenerateGap { .. }
            | Error::NonUniqueSteadyState
            | Error::RankDeficient
            | Error::NoEntanglement { .. }
            | Error::NoSuddenDeath { .. } => true,
            Error::AtPoint { source, .. } => source.is_degenerate_physics(),
            _ => false,
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonPositive { name, value } => write!(f, "{name} must be > 0, got {value}"),
            Error::Negative { name, value } => {
                write!(f, "{name} must be a finite value >= 0, got {value}")
            }
            Error::DegenerateGap { epsilon, kappa } => write!(
                f,
                "degenerate spectrum: epsilon = kappa = {epsilon} closes the 1<->2 gap (kappa = {kappa})"
            ),
            Error::InvalidPopulations(msg) => write!(f, "invalid populations: {msg}"),
            Error::InvalidRate(k) => write!(f, "rates must be finite and >= 0, got {k}"),
            Error::NonPositiveFrequency(w) => write!(f, "transition frequency must be > 0, got {w}"),
            Error::NonUniqueSteadyState => {
                f.write_str("a transition channel has all-zero rates; steady state is not unique")
            }
            Error::RankDeficient => f.write_str("rate matrix kernel is not one-dimensional"),
            Error::InvalidSweep(msg) => write!(f, "invalid sweep: {msg}"),
            Error::AtPoint {
                index,
                t_left,
                t_right,
                source,
            } => write!(
                f,
                "sweep point {index} (T_L = {t_left}, T_R = {t_right}): {source}"
            ),
            Error::NoEntanglement { temperature } => write!(
                f,
                "concurrence is already zero at the lowest probe temperature {temperature}"
            ),
            Error::NoSuddenDeath { temperature } => {
                write!(f, "concurrence stays positive up to T = {temperature}")
            }
        }
    }
}

impl core::error::Error for Error {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            Error::AtPoint { source, .. } => Some(source.as_ref()),
            _ => None,
        }
    }
}

pub(crate) fn check_positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

pub(crate) fn check_nonnegative(name: &'static str, value: f64) -> Result<f64> {
    // Infinite temperature is a legitimate limit; NaN is not.
    if value >= 0.0 {
        Ok(value)
    } else {
        Err(Error::Negative { name, value })
    }
}

pub(crate) fn check_finite_nonnegative(name: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Negative { name, value })
    }
}
