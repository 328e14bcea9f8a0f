//! Eigenvalue spectra of Hermitian matrices.
//!
//! The general path is a cyclic Jacobi iteration adapted to complex Hermitian
//! input: each rotation first strips the phase of the pivot entry and then
//! applies the usual real plane rotation, so the pivot is annihilated exactly
//! as in the symmetric case. Matrices here are at most 16x16, for which
//! Jacobi is both simple and accurate.
//!
//! States in X form (nonzero entries only on the diagonal and the
//! anti-diagonal corners) admit a closed-form spectrum, exposed separately as
//! a fast path and as an independent cross-check on the iterative solver.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qmat::density::DensityMatrix;
use crate::qmat::matrix::ComplexMatrix;
use crate::scalar::{cast, Scalar};

/// Maximum number of cyclic sweeps before giving up.
const MAX_SWEEPS: usize = 100;

/// Real eigenvalues in descending order.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    values: Vec<T>,
}

impl<T: Scalar> Spectrum<T> {
    pub(crate) fn from_values(mut values: Vec<T>) -> Self {
        values.sort_by(|a, b| b.partial_cmp(a).expect("finite eigenvalues"));
        Self { values }
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn sum(&self) -> T {
        self.values.iter().copied().sum()
    }

    pub fn min(&self) -> T {
        *self.values.last().expect("nonempty spectrum")
    }
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
///
/// The input must be Hermitian within the validation tolerance; the
/// iteration stops once the off-diagonal Frobenius norm falls below the
/// Jacobi tolerance, and errors out after 100 sweeps.
pub fn hermitian_spectrum<T: Scalar>(h: &ComplexMatrix<T>) -> Result<Spectrum<T>> {
    if !h.is_square() {
        return Err(Error::InvalidDimensions {
            context: format!("eigensolver needs a square matrix, got {}x{}", h.rows(), h.cols()),
        });
    }
    let deviation = h.hermiticity_defect();
    if deviation > T::validation_tol() {
        return Err(Error::NotHermitian {
            deviation: deviation.to_f64().unwrap_or(f64::NAN),
        });
    }

    let n = h.rows();
    // Work on the Hermitian average so asymmetry below the tolerance cannot
    // bias the rotations; the diagonal is forced real.
    let mut a = ComplexMatrix::<T>::zeros(n, n);
    let half = cast::<T>(0.5);
    for i in 0..n {
        for j in 0..n {
            let sym = (h.get(i, j) + h.get(j, i).conj()).scale(half);
            a.set(i, j, if i == j { Complex::new(sym.re, T::zero()) } else { sym });
        }
    }

    for _ in 0..MAX_SWEEPS {
        if off_diagonal_norm(&a) <= T::jacobi_tol() {
            return Ok(collect_diagonal(&a));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, p, q);
            }
        }
    }
    if off_diagonal_norm(&a) <= T::jacobi_tol() {
        Ok(collect_diagonal(&a))
    } else {
        Err(Error::NoConvergence { sweeps: MAX_SWEEPS })
    }
}

fn off_diagonal_norm<T: Scalar>(a: &ComplexMatrix<T>) -> T {
    let n = a.rows();
    let mut acc = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += a.get(i, j).norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn collect_diagonal<T: Scalar>(a: &ComplexMatrix<T>) -> Spectrum<T> {
    Spectrum::from_values((0..a.rows()).map(|i| a.get(i, i).re).collect())
}

/// One complex Jacobi rotation annihilating the (p, q) entry.
fn rotate<T: Scalar>(a: &mut ComplexMatrix<T>, p: usize, q: usize) {
    let apq = a.get(p, q);
    let mag = apq.norm();
    if mag <= T::min_positive_value() {
        return;
    }
    let phase = apq.unscale(mag);
    let app = a.get(p, p).re;
    let aqq = a.get(q, q).re;

    let theta = (app - aqq) / (mag + mag);
    let t = if theta.is_sign_negative() {
        -T::one() / (theta.abs() + (theta * theta + T::one()).sqrt())
    } else {
        T::one() / (theta.abs() + (theta * theta + T::one()).sqrt())
    };
    let c = T::one() / (t * t + T::one()).sqrt();
    let s = t * c;

    let n = a.rows();
    // Column combination A <- A U with U = [[c, -s], [s e^{-i phi}, c e^{-i phi}]]
    // on columns (p, q), then the matching row combination A <- U^dagger A.
    let phase_conj = phase.conj();
    for k in 0..n {
        let akp = a.get(k, p);
        let akq = a.get(k, q);
        a.set(k, p, akp.scale(c) + (phase_conj * akq).scale(s));
        a.set(k, q, (phase_conj * akq).scale(c) - akp.scale(s));
    }
    for k in 0..n {
        let apk = a.get(p, k);
        let aqk = a.get(q, k);
        a.set(p, k, apk.scale(c) + (phase * aqk).scale(s));
        a.set(q, k, (phase * aqk).scale(c) - apk.scale(s));
    }
    // The pivot is zero in exact arithmetic; pin it and keep the diagonal real.
    a.set(p, q, Complex::zero());
    a.set(q, p, Complex::zero());
    let dp = a.get(p, p).re;
    let dq = a.get(q, q).re;
    a.set(p, p, Complex::new(dp, T::zero()));
    a.set(q, q, Complex::new(dq, T::zero()));
}

/// Closed-form spectrum of a two-qubit state in X form.
///
/// For diagonal `(a, b, c, e)` and corner `z`, the eigenvalues are
/// `b`, `c` and `((a + e) +- sqrt((a - e)^2 + 4 |z|^2)) / 2`.
pub fn xstate_spectrum<T: Scalar>(rho: &DensityMatrix<T>) -> Result<Spectrum<T>> {
    if rho.dim() != 4 {
        return Err(Error::InvalidDimensions {
            context: format!("X-form spectrum needs dimension 4, got {}", rho.dim()),
        });
    }
    let m = rho.mat();
    let mut off = T::zero();
    for i in 0..4 {
        for j in 0..4 {
            let on_pattern = i == j || (i, j) == (0, 3) || (i, j) == (3, 0);
            if !on_pattern {
                off = off.max(m.get(i, j).norm());
            }
        }
    }
    if off > T::validation_tol() {
        return Err(Error::NotXState {
            magnitude: off.to_f64().unwrap_or(f64::NAN),
        });
    }

    let a = m.get(0, 0).re;
    let b = m.get(1, 1).re;
    let c = m.get(2, 2).re;
    let e = m.get(3, 3).re;
    let z = m.get(0, 3).norm();
    let half = cast::<T>(0.5);
    let root = ((a - e) * (a - e) + cast::<T>(4.0) * z * z).sqrt();
    Ok(Spectrum::from_values(vec![
        b,
        c,
        (a + e + root) * half,
        (a + e - root) * half,
    ]))
}
