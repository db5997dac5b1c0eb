//! Two identical qubits with splitting `epsilon` and XY coupling `kappa`:
//!
//! ```text
//! H_S = (epsilon/2)(sz1 + sz2) + (kappa/2)(sx1 sx2 + sy1 sy2)
//! ```
//!
//! The eigenbasis is fixed by label, independent of which state is lowest:
//!
//! | label | state                       | energy     |
//! |-------|-----------------------------|------------|
//! | 1     | (|du> - |ud>)/sqrt2         | -kappa     |
//! | 2     | |dd>                        | -epsilon   |
//! | 3     | |uu>                        | +epsilon   |
//! | 4     | (|du> + |ud>)/sqrt2         | +kappa     |
//!
//! Bath `L` couples through `sx` on qubit 1 and bath `R` through `sx` on
//! qubit 2. In the eigenbasis
//!
//! ```text
//! S_L = (1/sqrt2)(-|1><2| + |1><3| + |2><4| + |3><4| + h.c.)
//! S_R = (1/sqrt2)( |1><2| - |1><3| + |2><4| + |3><4| + h.c.)
//! ```
//!
//! so only 1<->2, 1<->3, 2<->4 and 3<->4 are connected, each with
//! `|S_L|^2 = |S_R|^2 = 1/2`. The signs never enter the rate equations.

use crate::error::{check_positive, Error, Result};
use crate::solver::Populations;

/// Qubit splitting and inter-qubit coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    epsilon: f64,
    kappa: f64,
}

impl SystemParams {
    /// Validates `epsilon > 0`, `kappa > 0` and `epsilon != kappa`.
    pub fn new(epsilon: f64, kappa: f64) -> Result<Self> {
        check_positive("epsilon", epsilon)?;
        check_positive("kappa", kappa)?;
        if epsilon == kappa {
            return Err(Error::DegenerateGap { epsilon, kappa });
        }
        Ok(Self { epsilon, kappa })
    }

    /// Qubit level splitting.
    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    /// XY coupling strength.
    pub fn kappa(&self) -> f64 {
        self.kappa
    }
}

/// Spectrum of `H_S` in label order, plus the two independent gaps.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenSystem {
    /// `[E1, E2, E3, E4] = [-kappa, -epsilon, epsilon, kappa]`.
    pub energies: [f64; 4],
    /// `E2 - E1 = kappa - epsilon`; negative when `epsilon > kappa`.
    pub omega21: f64,
    /// `E3 - E1 = kappa + epsilon`.
    pub omega31: f64,
}

impl EigenSystem {
    /// Label (1-based) of the lowest-energy state.
    pub fn ground_label(&self) -> usize {
        // E1 and E2 are the only candidates.
        if self.energies[0] < self.energies[1] {
            1
        } else {
            2
        }
    }
}

/// Closed-form eigensystem of the two-qubit Hamiltonian.
///
/// Infallible: invalid `(epsilon, kappa)` pairs are rejected by
/// [`SystemParams::new`].
pub fn eigensystem(params: &SystemParams) -> EigenSystem {
    let (e, k) = (params.epsilon, params.kappa);
    EigenSystem {
        energies: [-k, -e, e, k],
        omega21: k - e,
        omega31: k + e,
    }
}

/// One transition allowed by the bath couplings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Transition {
    /// Lower label of the pair (1-based).
    pub from: usize,
    /// Higher label of the pair (1-based).
    pub to: usize,
    /// `|<from|S_L|to>|^2`.
    pub left_weight: f64,
    /// `|<from|S_R|to>|^2`.
    pub right_weight: f64,
}

/// Allowed transitions and their squared coupling matrix elements.
///
/// The rates used by [`crate::solver`] already absorb these weights into the
/// coupling constants, so this table is descriptive.
pub const CHANNEL_TABLE: [Transition; 4] = [
    Transition {
        from: 1,
        to: 2,
        left_weight: 0.5,
        right_weight: 0.5,
    },
    Transition {
        from: 1,
        to: 3,
        left_weight: 0.5,
        right_weight: 0.5,
    },
    Transition {
        from: 2,
        to: 4,
        left_weight: 0.5,
        right_weight: 0.5,
    },
    Transition {
        from: 3,
        to: 4,
        left_weight: 0.5,
        right_weight: 0.5,
    },
];

/// Whether the bath couplings connect labels `m` and `n` (1-based).
pub fn is_allowed(m: usize, n: usize) -> bool {
    CHANNEL_TABLE
        .iter()
        .any(|t| (t.from == m && t.to == n) || (t.from == n && t.to == m))
}

/// Reduced density matrix in the product basis `|dd>, |du>, |ud>, |uu>`.
///
/// Diagonal in the eigenbasis, it picks up a coherence between `|du>` and
/// `|ud>` once rotated back:
///
/// ```text
/// [ P2      0            0          0  ]
/// [ 0   (P1+P4)/2   (P4-P1)/2       0  ]
/// [ 0   (P4-P1)/2   (P1+P4)/2       0  ]
/// [ 0       0            0          P3 ]
/// ```
pub fn density_matrix_uncoupled(pops: &Populations) -> [[f64; 4]; 4] {
    let [p1, p2, p3, p4] = pops.as_array();
    let diag = 0.5 * (p1 + p4);
    let coh = 0.5 * (p4 - p1);
    [
        [p2, 0.0, 0.0, 0.0],
        [0.0, diag, coh, 0.0],
        [0.0, coh, diag, 0.0],
        [0.0, 0.0, 0.0, p3],
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strong_coupling_spectrum() {
        let es = eigensystem(&SystemParams::new(0.2, 1.0).unwrap());
        assert_eq!(es.energies, [-1.0, -0.2, 0.2, 1.0]);
        assert!((es.omega21 - 0.8).abs() < 1e-15);
        assert!((es.omega31 - 1.2).abs() < 1e-15);
        assert_eq!(es.ground_label(), 1);
    }

    #[test]
    fn weak_coupling_spectrum_inverts_ground_state() {
        let es = eigensystem(&SystemParams::new(1.0, 0.2).unwrap());
        assert_eq!(es.energies, [-0.2, -1.0, 1.0, 0.2]);
        assert!((es.omega21 + 0.8).abs() < 1e-15);
        assert!((es.omega31 - 1.2).abs() < 1e-15);
        assert_eq!(es.ground_label(), 2);
    }

    #[test]
    fn spectrum_symmetries() {
        for &(e, k) in &[(0.2, 1.0), (1.0, 0.2), (0.37, 2.5)] {
            let es = eigensystem(&SystemParams::new(e, k).unwrap());
            let [e1, e2, e3, e4] = es.energies;
            assert_eq!((e1 + e4) + (e2 + e3), 0.0);
            assert!((es.omega21 - (e4 - e3)).abs() < 1e-15);
            assert!((es.omega31 - (e4 - e2)).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(
            SystemParams::new(0.5, 0.5),
            Err(Error::DegenerateGap { .. })
        ));
        assert!(matches!(
            SystemParams::new(0.0, 1.0),
            Err(Error::NonPositive { name: "epsilon", .. })
        ));
        assert!(matches!(
            SystemParams::new(0.2, -1.0),
            Err(Error::NonPositive { name: "kappa", .. })
        ));
        assert!(SystemParams::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn forbidden_transitions() {
        assert!(!is_allowed(1, 4));
        assert!(!is_allowed(2, 3));
        for &(m, n) in &[(1, 2), (1, 3), (2, 4), (3, 4)] {
            assert!(is_allowed(m, n) && is_allowed(n, m));
        }
        assert!(CHANNEL_TABLE.iter().all(|t| t.left_weight == t.right_weight));
    }

    #[test]
    fn density_matrix_limits() {
        let singlet = density_matrix_uncoupled(&Populations::new([1.0, 0.0, 0.0, 0.0]).unwrap());
        assert_eq!(singlet[1], [0.0, 0.5, -0.5, 0.0]);
        assert_eq!(singlet[2], [0.0, -0.5, 0.5, 0.0]);
        assert_eq!(singlet[0][0], 0.0);
        assert_eq!(singlet[3][3], 0.0);

        let triplet = density_matrix_uncoupled(&Populations::new([0.0, 0.0, 0.0, 1.0]).unwrap());
        assert_eq!(triplet[1], [0.0, 0.5, 0.5, 0.0]);
        assert_eq!(triplet[2], [0.0, 0.5, 0.5, 0.0]);

        let mixed = density_matrix_uncoupled(&Populations::new([0.25; 4]).unwrap());
        for (i, row) in mixed.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                assert_eq!(x, if i == j { 0.25 } else { 0.0 });
            }
        }
    }
}
