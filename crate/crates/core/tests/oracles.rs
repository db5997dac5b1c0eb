//! Closed forms against brute-force references on general density matrices.

use proptest::prelude::*;
use qheat_core::correlations::{
    classical_correlation, concurrence, conditional_entropy_x, correlation_report, mutual_information,
};
use qheat_core::model::density_matrix_uncoupled;
use qheat_core::Populations;
use qheat_oracle::{measured_classical_correlation, wootters_concurrence};

fn populations() -> impl Strategy<Value = Populations> {
    prop::array::uniform4(0.0f64..1.0)
        .prop_filter("nonzero", |w| w.iter().sum::<f64>() > 1e-6)
        .prop_map(|w| Populations::from_weights(w).unwrap())
}

proptest! {
    #[test]
    fn concurrence_matches_wootters(p in populations()) {
        let rho = density_matrix_uncoupled(&p);
        prop_assert!((concurrence(&p) - wootters_concurrence(&rho)).abs() < 1e-10);
    }

    #[test]
    fn mutual_information_matches_entropies(p in populations()) {
        let rho = density_matrix_uncoupled(&p);
        prop_assert!((mutual_information(&p) - qheat_oracle::mutual_information(&rho)).abs() < 1e-10);
    }

    #[test]
    fn classical_correlation_never_beats_the_grid(p in populations()) {
        // z and x axes are on the grid, so the grid can only do better.
        let grid = measured_classical_correlation(&density_matrix_uncoupled(&p), 41, 40);
        let closed = classical_correlation(&p);
        prop_assert!(grid.classical_correlation >= closed - 1e-12);
        prop_assert!(grid.classical_correlation - closed < 1e-3);
    }
}

#[test]
fn gibbs_half_references() {
    let p = Populations::new([
        0.762_817_172_509_817_2,
        0.154_010_130_996_260_5,
        0.069_201_212_624_107_3,
        0.013_971_483_869_815_06,
    ])
    .unwrap();
    let rho = density_matrix_uncoupled(&p);
    let r = correlation_report(&p);
    assert!((wootters_concurrence(&rho) - 0.542_373_532_441_265_8).abs() < 1e-12);
    assert!((r.concurrence - wootters_concurrence(&rho)).abs() < 1e-12);
    assert!((qheat_oracle::mutual_information(&rho) - 0.923_283_295_354_933).abs() < 1e-12);
    let m = measured_classical_correlation(&rho, 200, 200);
    assert!((m.classical_correlation - r.classical_correlation).abs() < 1e-12);
    // Optimum is the x axis here.
    assert!((m.theta - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
    assert!(conditional_entropy_x(&p) < qheat_core::correlations::conditional_entropy_z(&p));
}

#[test]
fn low_temperature_vectors_stay_accurate() {
    // P4 underflows relative to P1 at low temperature.
    for t in [0.02, 0.05, 0.1] {
        let w = [
            1.0f64,
            (-0.8f64 / t).exp(),
            (-1.2f64 / t).exp(),
            (-2.0f64 / t).exp(),
        ];
        let p = Populations::from_weights(w).unwrap();
        let rho = density_matrix_uncoupled(&p);
        assert!(
            (concurrence(&p) - wootters_concurrence(&rho)).abs() < 1e-10,
            "T = {t}"
        );
    }
}
