//! Validated quantum states: density matrices and pure state vectors.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::qmat::matrix::ComplexMatrix;
use crate::qmat::spectrum::{hermitian_spectrum, Spectrum};
use crate::scalar::Scalar;

/// Hermitian, positive-semidefinite, unit-trace matrix of power-of-two
/// dimension. Construction validates all three properties (and finiteness);
/// the spectrum found during the positivity check is kept alongside the
/// matrix so entropy never re-diagonalizes.
#[derive(Clone, Debug)]
pub struct DensityMatrix<T> {
    mat: ComplexMatrix<T>,
    spectrum: Spectrum<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    pub fn new(mat: ComplexMatrix<T>) -> Result<Self> {
        if !mat.is_square() || !mat.rows().is_power_of_two() || mat.rows() < 2 {
            return Err(Error::InvalidDimensions {
                context: format!(
                    "density matrix must be square with power-of-two dimension >= 2, got {}x{}",
                    mat.rows(),
                    mat.cols()
                ),
            });
        }
        if !mat.all_finite() {
            return Err(Error::NotFinite);
        }
        let deviation = mat.hermiticity_defect();
        if deviation > T::validation_tol() {
            return Err(Error::NotHermitian {
                deviation: deviation.to_f64().unwrap_or(f64::NAN),
            });
        }
        let trace = mat.trace().re;
        if (trace - T::one()).abs() > T::validation_tol() {
            return Err(Error::NotUnitTrace {
                trace: trace.to_f64().unwrap_or(f64::NAN),
            });
        }
        let spectrum = hermitian_spectrum(&mat)?;
        let min = spectrum.min();
        if min < -T::psd_tol() {
            return Err(Error::NotPositive {
                min_eigenvalue: min.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { mat, spectrum })
    }

    pub fn dim(&self) -> usize {
        self.mat.rows()
    }

    pub fn mat(&self) -> &ComplexMatrix<T> {
        &self.mat
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex<T> {
        self.mat.get(i, j)
    }

    /// Eigenvalues computed at construction, descending.
    pub fn spectrum(&self) -> &Spectrum<T> {
        &self.spectrum
    }

    /// Reduces the state to the kept tensor factors by tracing out the rest.
    ///
    /// `factor_dims` lists the dimension of every tensor factor in order;
    /// their product must equal the state dimension. `keep` selects factor
    /// indices, strictly increasing and nonempty.
    pub fn partial_trace(&self, factor_dims: &[usize], keep: &[usize]) -> Result<DensityMatrix<T>> {
        let dim: usize = factor_dims.iter().product();
        if factor_dims.is_empty() || dim != self.dim() {
            return Err(Error::InvalidDimensions {
                context: format!(
                    "factor dimensions {:?} do not compose to state dimension {}",
                    factor_dims,
                    self.dim()
                ),
            });
        }
        let ordered = keep.windows(2).all(|w| w[0] < w[1]);
        let in_range = keep.iter().all(|&f| f < factor_dims.len());
        if keep.is_empty() || !ordered || !in_range {
            return Err(Error::InvalidDimensions {
                context: format!(
                    "keep set {:?} is not a strictly increasing subset of 0..{}",
                    keep,
                    factor_dims.len()
                ),
            });
        }

        let n = factor_dims.len();
        let mut strides = vec![1usize; n];
        for f in (0..n.saturating_sub(1)).rev() {
            strides[f] = strides[f + 1] * factor_dims[f + 1];
        }
        let traced: Vec<usize> = (0..n).filter(|f| !keep.contains(f)).collect();
        let kept_offsets = linear_offsets(factor_dims, &strides, keep);
        let traced_offsets = linear_offsets(factor_dims, &strides, &traced);

        let out_dim = kept_offsets.len();
        let mut out = ComplexMatrix::zeros(out_dim, out_dim);
        for (r, &ro) in kept_offsets.iter().enumerate() {
            for (c, &co) in kept_offsets.iter().enumerate() {
                let mut acc = Complex::zero();
                for &to in &traced_offsets {
                    acc += self.mat.get(ro + to, co + to);
                }
                out.set(r, c, acc);
            }
        }
        DensityMatrix::new(out)
    }
}

/// Row-major linear offsets spanned by a subset of tensor factors.
fn linear_offsets(dims: &[usize], strides: &[usize], subset: &[usize]) -> Vec<usize> {
    let mut offsets = vec![0usize];
    for &f in subset {
        let mut next = Vec::with_capacity(offsets.len() * dims[f]);
        for &base in &offsets {
            for digit in 0..dims[f] {
                next.push(base + digit * strides[f]);
            }
        }
        offsets = next;
    }
    offsets
}

/// Pure state: complex amplitude vector with unit norm.
#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T> {
    amps: Vec<Complex<T>>,
}

impl<T: Scalar> StateVector<T> {
    pub fn new(amps: Vec<Complex<T>>) -> Result<Self> {
        if amps.is_empty() {
            return Err(Error::InvalidDimensions {
                context: "state vector must be nonempty".into(),
            });
        }
        if !amps.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::NotFinite);
        }
        let norm_sq: T = amps.iter().map(|z| z.norm_sqr()).sum();
        if (norm_sq - T::one()).abs() > T::validation_tol() {
            return Err(Error::NotNormalized {
                norm_sq: norm_sq.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { amps })
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex<T>] {
        &self.amps
    }

    /// Projector |psi><psi| as a density matrix.
    pub fn density(&self) -> DensityMatrix<T> {
        let n = self.dim();
        let mut out = ComplexMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.amps[i] * self.amps[j].conj());
            }
        }
        DensityMatrix::new(out).expect("projector of a unit vector is a valid state")
    }
}
