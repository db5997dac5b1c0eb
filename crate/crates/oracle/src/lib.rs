//! Brute-force reference computations for cross-checking `qheat-core`.
//!
//! Nothing here knows about X states or the closed forms in the core; every
//! routine works on a general 4x4 two-qubit density matrix (real symmetric
//! input, product basis `|dd>, |du>, |ud>, |uu>`, qubit A first).

use nalgebra::{Complex, Matrix2, Matrix4, SymmetricEigen};

type C64 = Complex<f64>;

/// `-sum x log2 x` over eigenvalues, clamping rounding noise below zero.
fn shannon_bits(values: impl IntoIterator<Item = f64>) -> f64 {
    values
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| -x * x.log2())
        .sum()
}

fn to_matrix(rho: &[[f64; 4]; 4]) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| rho[i][j])
}

/// Eigenvalues of a real symmetric 4x4 matrix, ascending.
pub fn symmetric_eigenvalues(rho: &[[f64; 4]; 4]) -> [f64; 4] {
    let mut e: Vec<f64> = SymmetricEigen::new(to_matrix(rho))
        .eigenvalues
        .iter()
        .copied()
        .collect();
    e.sort_by(f64::total_cmp);
    [e[0], e[1], e[2], e[3]]
}

/// Von Neumann entropy (bits) of a real symmetric matrix.
pub fn entropy_bits(rho: &Matrix4<f64>) -> f64 {
    shannon_bits(SymmetricEigen::new(*rho).eigenvalues.iter().copied())
}

fn entropy_bits_2(m: &nalgebra::Matrix2<f64>) -> f64 {
    shannon_bits(SymmetricEigen::new(*m).eigenvalues.iter().copied())
}

/// Reduced state of qubit A.
pub fn partial_trace_b(rho: &[[f64; 4]; 4]) -> nalgebra::Matrix2<f64> {
    nalgebra::Matrix2::from_fn(|a, a2| (0..2).map(|b| rho[2 * a + b][2 * a2 + b]).sum())
}

/// Reduced state of qubit B.
pub fn partial_trace_a(rho: &[[f64; 4]; 4]) -> nalgebra::Matrix2<f64> {
    nalgebra::Matrix2::from_fn(|b, b2| (0..2).map(|a| rho[2 * a + b][2 * a + b2]).sum())
}

/// `S(A) + S(B) - S(AB)` by eigen-decomposition.
pub fn mutual_information(rho: &[[f64; 4]; 4]) -> f64 {
    entropy_bits_2(&partial_trace_b(rho)) + entropy_bits_2(&partial_trace_a(rho))
        - entropy_bits(&to_matrix(rho))
}

/// Wootters concurrence from the singular values of `sqrt(rho) sqrt(rho~)`,
/// `rho~ = (sy x sy) rho* (sy x sy)`.
///
/// The singular values equal the eigenvalues of
/// `sqrt(sqrt(rho) rho~ sqrt(rho))` but avoid taking square roots of
/// near-zero eigenvalues of a product.
pub fn wootters_concurrence(rho: &[[f64; 4]; 4]) -> f64 {
    let eig = SymmetricEigen::new(to_matrix(rho));
    let sqrt_vals = eig.eigenvalues.map(|x| x.max(0.0).sqrt());
    let sqrt_rho = eig.eigenvectors * Matrix4::from_diagonal(&sqrt_vals) * eig.eigenvectors.transpose();
    #[rustfmt::skip]
    let flip = Matrix4::new(
        0.0, 0.0, 0.0, -1.0,
        0.0, 0.0, 1.0, 0.0,
        0.0, 1.0, 0.0, 0.0,
        -1.0, 0.0, 0.0, 0.0,
    );
    let m = sqrt_rho * flip * sqrt_rho * flip;
    let mut s: Vec<f64> = m.svd(false, false).singular_values.iter().copied().collect();
    s.sort_by(|a, b| b.total_cmp(a));
    (s[0] - s[1] - s[2] - s[3]).max(0.0)
}

fn pauli() -> [Matrix2<C64>; 3] {
    let z = C64::new(0.0, 0.0);
    let one = C64::new(1.0, 0.0);
    let i = C64::new(0.0, 1.0);
    [
        Matrix2::new(z, one, one, z),
        Matrix2::new(z, -i, i, z),
        Matrix2::new(one, z, z, -one),
    ]
}

fn hermitian_2x2_entropy(m: &Matrix2<C64>) -> f64 {
    let a = m[(0, 0)].re;
    let d = m[(1, 1)].re;
    let b = m[(0, 1)];
    let mean = 0.5 * (a + d);
    let half_gap = (0.25 * (a - d) * (a - d) + b.norm_sqr()).sqrt();
    shannon_bits([mean + half_gap, mean - half_gap])
}

/// Result of a measurement-grid search.
#[derive(Debug, Clone, Copy)]
pub struct MeasuredCorrelation {
    /// `S(A) - min over grid of the post-measurement conditional entropy`.
    pub classical_correlation: f64,
    /// Polar angle of the best measurement axis on B.
    pub theta: f64,
    /// Azimuth of the best measurement axis on B.
    pub phi: f64,
}

/// Classical correlation by brute force over projective measurements on
/// qubit B along `n(theta, phi)`.
///
/// `theta` runs over `[0, pi/2]` inclusive (antipodal axes give the same
/// measurement) and `phi` over `[0, 2 pi)`, so the `z` and `x` axes are
/// both on the grid.
pub fn measured_classical_correlation(
    rho: &[[f64; 4]; 4],
    n_theta: usize,
    n_phi: usize,
) -> MeasuredCorrelation {
    assert!(n_theta >= 2 && n_phi >= 1);
    let rho_c: Matrix4<C64> = to_matrix(rho).map(|x| C64::new(x, 0.0));
    let rho_a = partial_trace_b(rho).map(|x| C64::new(x, 0.0));

    // Tr_B[(I x sigma_k) rho] for each Pauli on B.
    let id2 = Matrix2::<C64>::identity();
    let moments: Vec<Matrix2<C64>> = pauli()
        .iter()
        .map(|s| {
            let prod = id2.kronecker(s) * rho_c;
            Matrix2::from_fn(|a, a2| (0..2).map(|b| prod[(2 * a + b, 2 * a2 + b)]).sum())
        })
        .collect();

    let s_a = entropy_bits_2(&partial_trace_b(rho));
    let mut best = (f64::INFINITY, 0.0, 0.0);
    for i in 0..n_theta {
        let theta = std::f64::consts::FRAC_PI_2 * i as f64 / (n_theta - 1) as f64;
        for j in 0..n_phi {
            let phi = std::f64::consts::TAU * j as f64 / n_phi as f64;
            let n = [theta.sin() * phi.cos(), theta.sin() * phi.sin(), theta.cos()];
            let shift =
                moments[0] * C64::from(n[0]) + moments[1] * C64::from(n[1]) + moments[2] * C64::from(n[2]);
            let mut cond = 0.0;
            for sign in [1.0, -1.0] {
                let unnorm = (rho_a + shift * C64::from(sign)) * C64::from(0.5);
                let p = unnorm.trace().re;
                if p > 1e-15 {
                    cond += p * hermitian_2x2_entropy(&(unnorm / C64::from(p)));
                }
            }
            if cond < best.0 {
                best = (cond, theta, phi);
            }
        }
    }
    MeasuredCorrelation {
        classical_correlation: s_a - best.0,
        theta: best.1,
        phi: best.2,
    }
}

/// Gibbs weights `e^{-E/T} / Z`.
pub fn gibbs(energies: [f64; 4], temperature: f64) -> [f64; 4] {
    let e0 = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let w = energies.map(|e| (-(e - e0) / temperature).exp());
    let z: f64 = w.iter().sum();
    w.map(|x| x / z)
}
