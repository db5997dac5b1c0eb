//! Steady-state heat conduction through two XY-coupled qubits, each attached
//! to its own thermal reservoir.
//!
//! The crate computes, for a pair of boson or spin baths at temperatures
//! `T_L` and `T_R`:
//!
//! - golden-rule transition rates between the four system eigenstates ([`baths`], [`solver`]),
//! - the steady-state populations of the Pauli master equation, both in closed
//!   form and as the kernel of the rate matrix ([`solver`]),
//! - the steady-state heat current entering from the left bath ([`solver::heat_current`]),
//! - concurrence, mutual information, classical correlation and discord of
//!   the resulting X state ([`correlations`]),
//! - parameter sweeps, rectification scans and the sudden-death temperature
//!   ([`experiments`]).
//!
//! Units: `k_B = hbar = 1`; energies, frequencies and temperatures share one
//! unit. Entropic quantities are in bits.
//!
//! The crate is `no_std` and only needs `alloc` for sweep results.
#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod baths;
pub mod correlations;
mod error;
pub mod experiments;
pub mod model;
pub mod solver;

pub use baths::{BathKind, BathSpec, RatePair};
pub use correlations::CorrelationReport;
pub use error::{Error, Result};
pub use model::{EigenSystem, SystemParams};
pub use solver::{ChannelRates, Populations, RateSet};
