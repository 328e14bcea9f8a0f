//! Shared oracles for the integration suites: small, self-contained
//! reimplementations kept independent of the library code they check, plus
//! seeded random-state generators.

#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use densecode::qmat::{ComplexMatrix, DensityMatrix};

pub type CMat = Vec<Vec<Complex64>>;

pub fn zeros(n: usize) -> CMat {
    vec![vec![Complex64::new(0.0, 0.0); n]; n]
}

/// Element-by-element Kronecker product, straight from the definition.
pub fn kron_oracle(a: &CMat, b: &CMat) -> CMat {
    let (ar, ac) = (a.len(), a[0].len());
    let (br, bc) = (b.len(), b[0].len());
    let mut out = vec![vec![Complex64::new(0.0, 0.0); ac * bc]; ar * br];
    for i in 0..ar {
        for j in 0..ac {
            for k in 0..br {
                for l in 0..bc {
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    out
}

pub fn matmul_oracle(a: &CMat, b: &CMat) -> CMat {
    let n = a.len();
    let m = b[0].len();
    let inner = b.len();
    let mut out = vec![vec![Complex64::new(0.0, 0.0); m]; n];
    for i in 0..n {
        for j in 0..m {
            for k in 0..inner {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    out
}

pub fn adjoint_oracle(a: &CMat) -> CMat {
    let (r, c) = (a.len(), a[0].len());
    let mut out = vec![vec![Complex64::new(0.0, 0.0); r]; c];
    for i in 0..r {
        for j in 0..c {
            out[j][i] = a[i][j].conj();
        }
    }
    out
}

/// Direct four-term ensemble average `(1/4) sum (U_m tensor I) rho (...)^dagger`
/// with its own matrix arithmetic and the four unitaries written out.
pub fn average_oracle(rho: &CMat) -> CMat {
    let z = Complex64::new(0.0, 0.0);
    let p = Complex64::new(1.0, 0.0);
    let n = Complex64::new(-1.0, 0.0);
    let unitaries: [CMat; 4] = [
        vec![vec![p, z], vec![z, p]],
        vec![vec![z, p], vec![p, z]],
        vec![vec![p, z], vec![z, n]],
        vec![vec![z, n], vec![p, z]],
    ];
    let eye: CMat = vec![vec![p, z], vec![z, p]];
    let mut acc = zeros(4);
    for u in &unitaries {
        let lifted = kron_oracle(u, &eye);
        let term = matmul_oracle(&matmul_oracle(&lifted, rho), &adjoint_oracle(&lifted));
        for i in 0..4 {
            for j in 0..4 {
                acc[i][j] += term[i][j] * 0.25;
            }
        }
    }
    acc
}

pub fn to_matrix(a: &CMat) -> ComplexMatrix<f64> {
    let rows = a.len();
    let cols = a[0].len();
    let entries = a.iter().flat_map(|row| row.iter().copied()).collect();
    ComplexMatrix::new(rows, cols, entries)
}

pub fn from_matrix(m: &ComplexMatrix<f64>) -> CMat {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j)).collect())
        .collect()
}

pub fn random_complex(rng: &mut ChaCha8Rng) -> Complex64 {
    Complex64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)
}

/// Random density matrix from a normalized Gaussian-free Ginibre square.
pub fn random_density(rng: &mut ChaCha8Rng, dim: usize) -> DensityMatrix<f64> {
    let mut g = ComplexMatrix::<f64>::zeros(dim, dim);
    for i in 0..dim {
        for j in 0..dim {
            g.set(i, j, random_complex(rng));
        }
    }
    let prod = &g * &g.adjoint();
    let trace = prod.trace().re;
    DensityMatrix::new(prod.scaled(1.0 / trace)).expect("normalized G G^dagger is a state")
}

/// Random two-qubit X state; the corner respects `|z|^2 <= a e`.
pub fn random_x_state(rng: &mut ChaCha8Rng) -> DensityMatrix<f64> {
    let mut diag = [0.0f64; 4];
    let mut total = 0.0;
    for v in &mut diag {
        *v = rng.gen::<f64>() + 1e-6;
        total += *v;
    }
    for v in &mut diag {
        *v /= total;
    }
    let mag = rng.gen::<f64>() * (diag[0] * diag[3]).sqrt();
    let phase = rng.gen::<f64>() * std::f64::consts::TAU;
    let z = Complex64::new(mag * phase.cos(), mag * phase.sin());

    let mut m = ComplexMatrix::zeros(4, 4);
    for (i, &v) in diag.iter().enumerate() {
        m.set(i, i, Complex64::new(v, 0.0));
    }
    m.set(0, 3, z);
    m.set(3, 0, z.conj());
    DensityMatrix::new(m).expect("sampled X matrix is a state")
}

/// Random unitary as a product of complex Givens rotations.
pub fn random_unitary(rng: &mut ChaCha8Rng, dim: usize) -> ComplexMatrix<f64> {
    let mut u = ComplexMatrix::<f64>::identity(dim);
    for _ in 0..3 * dim {
        let p = rng.gen_range(0..dim);
        let mut q = rng.gen_range(0..dim);
        while q == p {
            q = rng.gen_range(0..dim);
        }
        let theta = rng.gen::<f64>() * std::f64::consts::TAU;
        let phi = rng.gen::<f64>() * std::f64::consts::TAU;
        let (c, s) = (theta.cos(), theta.sin());
        let mut g = ComplexMatrix::<f64>::identity(dim);
        g.set(p, p, Complex64::new(c, 0.0));
        g.set(p, q, Complex64::from_polar(-s, -phi));
        g.set(q, p, Complex64::from_polar(s, phi));
        g.set(q, q, Complex64::new(c, 0.0));
        u = &u * &g;
    }
    u
}

/// Entropy of an eigenvalue list in bits, by direct summation.
pub fn entropy_oracle(eigs: &[f64]) -> f64 {
    -eigs
        .iter()
        .filter(|&&l| l > 0.0)
        .map(|&l| l * l.log2())
        .sum::<f64>()
}

pub fn max_abs_diff_cmat(a: &CMat, b: &CMat) -> f64 {
    let mut worst = 0.0f64;
    for (ra, rb) in a.iter().zip(b) {
        for (&x, &y) in ra.iter().zip(rb) {
            worst = worst.max((x - y).norm());
        }
    }
    worst
}
