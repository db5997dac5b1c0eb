//! Entanglement and discord of the steady state.
//!
//! In the product basis the steady state is an X state whose only
//! coherence sits between `|du>` and `|ud>` (see
//! [`crate::model::density_matrix_uncoupled`]), so every measure has a
//! closed form in the eigenstate populations.
//!
//! With `a = 1 - P2 + P3`, `b = 1 + P2 - P3` and `h(x) = x log2 x`:
//!
//! ```text
//! C    = max(2 Pmax - P1 - P4 - 2 sqrt(P2 P3), 0),  Pmax = max(P1, P4, sqrt(P2 P3))
//! I    = 2 - [h(a) + h(b)] + sum_n h(P_n)
//! C_cl = 1 - [h(a) + h(b)]/2 - min(S1, S2)
//! Q    = I - C_cl
//! ```
//!
//! `S1` and `S2` are the conditional entropies left after measuring one
//! qubit along `z` and along `x`:
//!
//! ```text
//! S1 = -P2 log2(2 P2 / b) - s log2(2 s / b) - s log2(2 s / a) - P3 log2(2 P3 / a),   s = (P1 + P4)/2
//! S2 = 1 - [h(1 - K) + h(1 + K)]/2,   K = sqrt((P2 - P3)^2 + (P1 - P4)^2)
//! ```
//!
//! The state is symmetric under qubit exchange, so which qubit is measured
//! does not matter.

use crate::solver::Populations;

/// Discord values this close below zero are rounding and clamp to 0.
pub const DISCORD_ROUNDING_FLOOR: f64 = 1e-12;

/// All four correlation measures of one steady state (bits for the
/// entropic ones).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    /// Wootters concurrence.
    pub concurrence: f64,
    /// Quantum mutual information.
    pub mutual_information: f64,
    /// Classical correlation.
    pub classical_correlation: f64,
    /// Quantum discord.
    pub discord: f64,
    /// `sqrt((P2 - P3)^2 + (P1 - P4)^2)`.
    pub k: f64,
}

/// `x log2 x`, with the `x = 0` limit.
fn xlog2x(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * libm::log2(x)
    }
}

/// `-(x/2) log2(x/y)`, zero when `x = 0`.
fn conditional_term(x: f64, y: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        -0.5 * x * libm::log2(x / y)
    }
}

/// `h(1 - P2 + P3) + h(1 + P2 - P3)`.
fn marginal_log_term(p2: f64, p3: f64) -> f64 {
    xlog2x(1.0 - p2 + p3) + xlog2x(1.0 + p2 - p3)
}

/// Wootters concurrence.
pub fn concurrence(pops: &Populations) -> f64 {
    let [p1, p2, p3, p4] = pops.as_array();
    let root = libm::sqrt(p2 * p3);
    let p_max = p1.max(p4).max(root);
    (2.0 * p_max - p1 - p4 - 2.0 * root).max(0.0)
}

/// Quantum mutual information `S(A) + S(B) - S(AB)`.
pub fn mutual_information(pops: &Populations) -> f64 {
    let p = pops.as_array();
    let joint: f64 = p.iter().map(|&x| xlog2x(x)).sum();
    2.0 - marginal_log_term(p[1], p[2]) + joint
}

/// The `K` coefficient.
pub fn k_coefficient(pops: &Populations) -> f64 {
    let [p1, p2, p3, p4] = pops.as_array();
    libm::hypot(p2 - p3, p1 - p4)
}

/// Conditional entropy after a `z` measurement of one qubit.
pub fn conditional_entropy_z(pops: &Populations) -> f64 {
    let [p1, p2, p3, p4] = pops.as_array();
    let a = 1.0 - p2 + p3;
    let b = 1.0 + p2 - p3;
    let s = p1 + p4;
    conditional_term(2.0 * p2, b)
        + conditional_term(s, b)
        + conditional_term(s, a)
        + conditional_term(2.0 * p3, a)
}

/// Conditional entropy after an `x` measurement of one qubit.
pub fn conditional_entropy_x(pops: &Populations) -> f64 {
    let k = k_coefficient(pops);
    1.0 - 0.5 * (xlog2x(1.0 - k) + xlog2x(1.0 + k))
}

/// Classical correlation: marginal entropy minus the smaller of the two
/// conditional entropies.
pub fn classical_correlation(pops: &Populations) -> f64 {
    let p = pops.as_array();
    let s1 = conditional_entropy_z(pops);
    let s2 = conditional_entropy_x(pops);
    1.0 - 0.5 * marginal_log_term(p[1], p[2]) - s1.min(s2)
}

/// Quantum discord `I - C_cl`.
pub fn discord(pops: &Populations) -> f64 {
    clamp_discord(mutual_information(pops) - classical_correlation(pops))
}

fn clamp_discord(q: f64) -> f64 {
    if q < 0.0 && q > -DISCORD_ROUNDING_FLOOR {
        0.0
    } else {
        q
    }
}

/// Every measure at once.
pub fn correlation_report(pops: &Populations) -> CorrelationReport {
    let mutual_information = mutual_information(pops);
    let classical_correlation = classical_correlation(pops);
    CorrelationReport {
        concurrence: concurrence(pops),
        mutual_information,
        classical_correlation,
        discord: clamp_discord(mutual_information - classical_correlation),
        k: k_coefficient(pops),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pops(p: [f64; 4]) -> Populations {
        Populations::new(p).unwrap()
    }

    // Gibbs state at T = 0.5 for epsilon = 0.2, kappa = 1.
    const GIBBS_HALF: [f64; 4] = [
        0.762_817_172_509_817_2,
        0.154_010_130_996_260_5,
        0.069_201_212_624_107_3,
        0.013_971_483_869_815_06,
    ];

    #[test]
    fn singlet() {
        let r = correlation_report(&pops([1.0, 0.0, 0.0, 0.0]));
        assert_eq!(r.concurrence, 1.0);
        assert_eq!(r.mutual_information, 2.0);
        assert_eq!(r.classical_correlation, 1.0);
        assert_eq!(r.discord, 1.0);
        assert_eq!(r.k, 1.0);
    }

    #[test]
    fn maximally_mixed() {
        let r = correlation_report(&pops([0.25; 4]));
        assert_eq!(r.concurrence, 0.0);
        assert_eq!(r.mutual_information, 0.0);
        assert_eq!(r.classical_correlation, 0.0);
        assert_eq!(r.discord, 0.0);
        assert_eq!(r.k, 0.0);
    }

    #[test]
    fn gibbs_half_values() {
        let r = correlation_report(&pops(GIBBS_HALF));
        // Concurrence: 40-digit closed form. I and C_cl: eigen-decomposition
        // of the density matrix and an x-measurement conditional state,
        // computed independently.
        assert!((r.concurrence - 0.542_373_532_441_265_8).abs() < 1e-14);
        assert!((r.mutual_information - 0.923_283_295_354_933).abs() < 1e-12);
        assert!((r.classical_correlation - 0.456_362_138_830_092_25).abs() < 1e-12);
        assert!((r.discord - (r.mutual_information - r.classical_correlation)).abs() < 1e-15);
    }

    #[test]
    fn discord_rounding_clamp() {
        assert_eq!(clamp_discord(-1e-14), 0.0);
        assert_eq!(clamp_discord(-1e-9), -1e-9);
        assert_eq!(clamp_discord(0.3), 0.3);
    }

    #[test]
    fn classical_triplet_mixture_has_no_entanglement() {
        // Equal singlet/triplet weight cancels the coherence.
        let r = correlation_report(&pops([0.5, 0.0, 0.0, 0.5]));
        assert_eq!(r.concurrence, 0.0);
        assert!(r.discord >= 0.0);
    }
}
