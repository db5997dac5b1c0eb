//! Golden-rule rates for the two reservoir types.
//!
//! Both couplings are flat in energy, so a bath is fully described by its
//! statistics, a constant `gamma` and a temperature. For a transition of
//! frequency `omega > 0`:
//!
//! ```text
//! boson: down = gamma (n_B(omega) + 1)   up = gamma n_B(omega)     n_B = 1/(e^{omega/T} - 1)
//! spin:  down = gamma n_S(-omega)        up = gamma n_S(omega)     n_S = 1/(e^{omega/T} + 1)
//! ```
//!
//! so `down / up = e^{omega/T}` for either kind.

use crate::error::{check_finite_nonnegative, check_nonnegative, Error, Result};

/// `omega / T` beyond which `e^{-omega/T}` is treated as zero.
pub const OVERFLOW_THRESHOLD: f64 = 700.0;

/// Statistics of the reservoir modes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BathKind {
    /// Harmonic modes, displacement coupling.
    Boson,
    /// Noninteracting two-level systems.
    Spin,
}

impl BathKind {
    /// Lowercase name, as used in CSV output.
    pub fn as_str(&self) -> &'static str {
        match self {
            BathKind::Boson => "boson",
            BathKind::Spin => "spin",
        }
    }
}

impl core::fmt::Display for BathKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One reservoir.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSpec {
    kind: BathKind,
    gamma: f64,
    temperature: f64,
}

impl BathSpec {
    /// `gamma` and `temperature` must be finite and nonnegative.
    pub fn new(kind: BathKind, gamma: f64, temperature: f64) -> Result<Self> {
        check_finite_nonnegative("gamma", gamma)?;
        check_finite_nonnegative("temperature", temperature)?;
        Ok(Self {
            kind,
            gamma,
            temperature,
        })
    }

    /// Bath statistics.
    pub fn kind(&self) -> BathKind {
        self.kind
    }

    /// Flat coupling constant.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// Bath temperature.
    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    /// Same bath at another temperature.
    pub fn with_temperature(self, temperature: f64) -> Result<Self> {
        Self::new(self.kind, self.gamma, temperature)
    }
}

/// Relaxation and excitation rate across one gap.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct RatePair {
    /// Rate toward the lower level.
    pub down: f64,
    /// Rate toward the upper level.
    pub up: f64,
}

/// Thermal occupation at frequency `omega > 0`.
///
/// Returns exactly 0 at `T = 0` and whenever `omega / T` exceeds
/// [`OVERFLOW_THRESHOLD`]. `T = +inf` is accepted (spin gives 1/2, boson
/// diverges).
pub fn occupation(kind: BathKind, omega: f64, temperature: f64) -> Result<f64> {
    check_frequency(omega)?;
    check_nonnegative("temperature", temperature)?;
    if temperature == 0.0 {
        return Ok(0.0);
    }
    let x = omega / temperature;
    if x > OVERFLOW_THRESHOLD {
        return Ok(0.0);
    }
    Ok(match kind {
        BathKind::Boson => 1.0 / libm::expm1(x),
        BathKind::Spin => 1.0 / (libm::exp(x) + 1.0),
    })
}

/// Down/up rates of `bath` across a gap of frequency `omega > 0`.
pub fn rate_pair(bath: &BathSpec, omega: f64) -> Result<RatePair> {
    let n = occupation(bath.kind, omega, bath.temperature)?;
    let g = bath.gamma;
    let down = match bath.kind {
        BathKind::Boson => g * (n + 1.0),
        BathKind::Spin => {
            // n_S(-omega), evaluated directly rather than as 1 - n_S(omega).
            if bath.temperature == 0.0 {
                g
            } else {
                g / (libm::exp(-omega / bath.temperature) + 1.0)
            }
        }
    };
    Ok(RatePair { down, up: g * n })
}

fn check_frequency(omega: f64) -> Result<f64> {
    if omega > 0.0 && omega.is_finite() {
        Ok(omega)
    } else {
        Err(Error::NonPositiveFrequency(omega))
    }
}
