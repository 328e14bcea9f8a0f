//! Von Neumann entropy in bits.

use crate::qmat::density::DensityMatrix;
use crate::scalar::Scalar;

/// `x log2 x` with the `0 log 0 = 0` convention; nonpositive input maps to 0.
pub(crate) fn xlog2<T: Scalar>(x: T) -> T {
    if x <= T::zero() {
        T::zero()
    } else {
        x * x.log2()
    }
}

/// Entropy `-sum lambda log2 lambda` over the eigenvalues of the state.
///
/// Eigenvalues within round-off below zero are clamped by the `0 log 0`
/// convention; anything more negative was already rejected when the state
/// was constructed. The result lies in `[0, log2 dim]` up to round-off.
pub fn von_neumann_entropy<T: Scalar>(rho: &DensityMatrix<T>) -> T {
    -rho.spectrum().values().iter().map(|&l| xlog2(l)).sum::<T>()
}
