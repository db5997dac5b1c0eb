//! Channel rates, steady-state populations and the heat current.
//!
//! The four allowed transitions fall into two channels with the same gap:
//!
//! - channel `a`: 1<->2 and 3<->4, gap `|kappa - epsilon|`
//! - channel `b`: 1<->3 and 2<->4, gap `kappa + epsilon`
//!
//! With `W_mn` the total (left + right) rate `n -> m`, equal qubit energies
//! give `W_34 = W_12` and `W_24 = W_13`, and the Pauli master equation has
//! the product-form steady state
//!
//! ```text
//! P1 = W12 W13 / D    P2 = W21 W13 / D    P3 = W12 W31 / D    P4 = W21 W31 / D
//! D  = (W12 + W21)(W13 + W31)
//! ```
//!
//! [`null_space_populations`] solves the same problem from the full
//! generator and serves as a cross-check.

use crate::baths::{rate_pair, BathSpec, RatePair};
use crate::error::{Error, Result};
use crate::model::{eigensystem, SystemParams};

/// Steady-state occupations `[P1, P2, P3, P4]` of the eigenstates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Populations([f64; 4]);

/// Slack allowed on `sum(P) = 1` when validating user-supplied populations.
const NORMALIZATION_SLACK: f64 = 1e-10;

impl Populations {
    /// Validates `P_n` in `[0, 1]` and `sum(P_n) = 1` (to 1e-10).
    pub fn new(p: [f64; 4]) -> Result<Self> {
        for &x in &p {
            if !(0.0..=1.0).contains(&x) {
                return Err(Error::InvalidPopulations("each entry must lie in [0, 1]"));
            }
        }
        let total: f64 = p.iter().sum();
        if (total - 1.0).abs() > NORMALIZATION_SLACK {
            return Err(Error::InvalidPopulations("entries must sum to 1"));
        }
        Ok(Self(p))
    }

    /// Normalizes nonnegative weights into populations.
    pub fn from_weights(w: [f64; 4]) -> Result<Self> {
        if w.iter().any(|&x| !(x >= 0.0) || !x.is_finite()) {
            return Err(Error::InvalidPopulations("weights must be finite and >= 0"));
        }
        let total: f64 = w.iter().sum();
        if total <= 0.0 {
            return Err(Error::InvalidPopulations("weights must not all vanish"));
        }
        Ok(Self(w.map(|x| x / total)))
    }

    /// The four occupations in label order.
    pub fn as_array(&self) -> [f64; 4] {
        self.0
    }

    /// Occupation of eigenstate `label` (1-based).
    ///
    /// # Panics
    /// If `label` is not in `1..=4`.
    pub fn get(&self, label: usize) -> f64 {
        self.0[label - 1]
    }
}

/// Left and right bath rates across one channel's gap.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct ChannelRates {
    /// Contribution of the left bath.
    pub left: RatePair,
    /// Contribution of the right bath.
    pub right: RatePair,
}

impl ChannelRates {
    /// Sum of both baths' relaxation rates.
    pub fn total_down(&self) -> f64 {
        self.left.down + self.right.down
    }

    /// Sum of both baths' excitation rates.
    pub fn total_up(&self) -> f64 {
        self.left.up + self.right.up
    }

    fn validate(&self) -> Result<()> {
        for k in [self.left.down, self.left.up, self.right.down, self.right.up] {
            if !(k >= 0.0 && k.is_finite()) {
                return Err(Error::InvalidRate(k));
            }
        }
        Ok(())
    }
}

/// All golden-rule rates of one configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateSet {
    a: ChannelRates,
    b: ChannelRates,
    state1_below_state2: bool,
}

impl RateSet {
    /// Builds a rate set from per-channel rates.
    ///
    /// `state1_below_state2` orients channel `a`: when true (`kappa > epsilon`)
    /// the "down" rates of `a` carry 2->1 and 4->3, otherwise 1->2 and 3->4.
    pub fn new(a: ChannelRates, b: ChannelRates, state1_below_state2: bool) -> Result<Self> {
        a.validate()?;
        b.validate()?;
        Ok(Self {
            a,
            b,
            state1_below_state2,
        })
    }

    /// Channel `a` (1<->2, 3<->4).
    pub fn channel_a(&self) -> &ChannelRates {
        &self.a
    }

    /// Channel `b` (1<->3, 2<->4).
    pub fn channel_b(&self) -> &ChannelRates {
        &self.b
    }

    /// Whether eigenstate 1 lies below eigenstate 2.
    pub fn state1_below_state2(&self) -> bool {
        self.state1_below_state2
    }

    /// `W_12`: total rate 2 -> 1 (equal to `W_34`).
    pub fn w12(&self) -> f64 {
        if self.state1_below_state2 {
            self.a.total_down()
        } else {
            self.a.total_up()
        }
    }

    /// `W_21`: total rate 1 -> 2 (equal to `W_43`).
    pub fn w21(&self) -> f64 {
        if self.state1_below_state2 {
            self.a.total_up()
        } else {
            self.a.total_down()
        }
    }

    /// `W_13`: total rate 3 -> 1 (equal to `W_24`).
    pub fn w13(&self) -> f64 {
        self.b.total_down()
    }

    /// `W_31`: total rate 1 -> 3 (equal to `W_42`).
    pub fn w31(&self) -> f64 {
        self.b.total_up()
    }
}

/// Rates of both baths on both channels.
pub fn channel_rates(params: &SystemParams, left: &BathSpec, right: &BathSpec) -> Result<RateSet> {
    let es = eigensystem(params);
    let gap_a = libm::fabs(es.omega21);
    let gap_b = es.omega31;
    let a = ChannelRates {
        left: rate_pair(left, gap_a)?,
        right: rate_pair(right, gap_a)?,
    };
    let b = ChannelRates {
        left: rate_pair(left, gap_b)?,
        right: rate_pair(right, gap_b)?,
    };
    RateSet::new(a, b, es.omega21 > 0.0)
}

/// Closed-form steady state of the Pauli master equation.
pub fn steady_populations(rates: &RateSet) -> Result<Populations> {
    let (w12, w21, w13, w31) = (rates.w12(), rates.w21(), rates.w13(), rates.w31());
    let sum_a = w12 + w21;
    let sum_b = w13 + w31;
    if sum_a <= 0.0 || sum_b <= 0.0 {
        return Err(Error::NonUniqueSteadyState);
    }
    // Normalize each channel separately; exact product form, no 0/0 at T = 0.
    let (pa_lo, pa_hi) = (w12 / sum_a, w21 / sum_a);
    let (pb_lo, pb_hi) = (w13 / sum_b, w31 / sum_b);
    Ok(Populations([
        pa_lo * pb_lo,
        pa_hi * pb_lo,
        pa_lo * pb_hi,
        pa_hi * pb_hi,
    ]))
}

/// Generator `A` of `dP/dt = A P`: `A[m][n]` is the rate `n -> m`
/// (0-based indices), columns sum to zero.
pub fn rate_matrix(rates: &RateSet) -> [[f64; 4]; 4] {
    // (lower-energy label, upper-energy label, channel), 0-based.
    let (lo_a, hi_a) = if rates.state1_below_state2 { (0, 1) } else { (1, 0) };
    let (lo_a2, hi_a2) = if rates.state1_below_state2 { (2, 3) } else { (3, 2) };
    let links = [
        (lo_a, hi_a, &rates.a),
        (lo_a2, hi_a2, &rates.a),
        (0, 2, &rates.b),
        (1, 3, &rates.b),
    ];
    let mut m = [[0.0; 4]; 4];
    for (lo, hi, ch) in links {
        m[lo][hi] += ch.left.down + ch.right.down;
        m[hi][lo] += ch.left.up + ch.right.up;
    }
    for n in 0..4 {
        let out: f64 = (0..4).filter(|&k| k != n).map(|k| m[k][n]).sum();
        m[n][n] = -out;
    }
    m
}

/// Kernel of a 4x4 generator, normalized to a probability vector.
///
/// Replaces the first balance row by the normalization row and solves the
/// resulting linear system with partially pivoted elimination.
pub fn null_space_populations(generator: &[[f64; 4]; 4]) -> Result<Populations> {
    let mut m = *generator;
    let mut rhs = [0.0; 4];
    m[0] = [1.0; 4];
    rhs[0] = 1.0;

    let scale = m.iter().flatten().fold(0.0_f64, |acc, &x| acc.max(libm::fabs(x)));
    let tiny = scale * 1e-13;

    for col in 0..4 {
        let pivot = (col..4)
            .max_by(|&i, &j| libm::fabs(m[i][col]).total_cmp(&libm::fabs(m[j][col])))
            .unwrap_or(col);
        if !(libm::fabs(m[pivot][col]) > tiny) {
            return Err(Error::RankDeficient);
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..4 {
            let f = m[row][col] / m[col][col];
            if f != 0.0 {
                for k in col..4 {
                    m[row][k] -= f * m[col][k];
                }
                rhs[row] -= f * rhs[col];
            }
        }
    }
    let mut x = [0.0; 4];
    for row in (0..4).rev() {
        let tail: f64 = (row + 1..4).map(|k| m[row][k] * x[k]).sum();
        x[row] = (rhs[row] - tail) / m[row][row];
    }
    // Rounding can leave components like -1e-18 where the state is empty.
    Populations::from_weights(x.map(|v| v.max(0.0)))
}

/// Steady-state heat current out of the left bath, second order in the
/// system-bath coupling:
///
/// ```text
/// J_L = sum_c w_c (kL_up kR_down - kL_down kR_up) / (2 [kL_up + kR_down + kL_down + kR_up])
/// ```
///
/// over channels `a` (`w = |kappa - epsilon|`) and `b` (`w = kappa + epsilon`).
/// Positive when heat flows from the left bath into the junction. A channel
/// with no rates contributes zero.
pub fn heat_current(params: &SystemParams, rates: &RateSet) -> f64 {
    let es = eigensystem(params);
    channel_current(libm::fabs(es.omega21), &rates.a) + channel_current(es.omega31, &rates.b)
}

fn channel_current(omega: f64, ch: &ChannelRates) -> f64 {
    let (l, r) = (ch.left, ch.right);
    let den = 2.0 * (l.up + r.down + l.down + r.up);
    if den == 0.0 {
        return 0.0;
    }
    omega * (l.up * r.down - l.down * r.up) / den
}
