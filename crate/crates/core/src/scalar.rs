//! Real scalar abstraction: everything in this crate is generic over the
//! floating-point type carrying matrix entries, with per-type tolerances.

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign};

/// Floating-point scalar backing all matrices, states and parameters.
///
/// Implemented for `f32` and `f64`. The associated tolerances scale with the
/// type's precision so that validation stays meaningful at either width.
pub trait Scalar:
    Float + FromPrimitive + NumAssign + Sum + Debug + Display + Send + Sync + 'static
{
    /// Tolerance for Hermiticity, unit-trace, unit-norm and Kraus
    /// completeness checks; also the post-selection cutoff.
    fn validation_tol() -> Self;
    /// Most negative eigenvalue a positive-semidefinite matrix may exhibit.
    fn psd_tol() -> Self;
    /// Off-diagonal Frobenius norm at which the Jacobi iteration stops.
    fn jacobi_tol() -> Self;
    /// Residual |f(x)| accepted by the bisection root finder.
    fn root_tol() -> Self;
    /// Interval width at which golden-section minimization stops.
    fn golden_tol() -> Self;
}

macro_rules! impl_scalar {
    ($t:ty, $validation:expr, $psd:expr, $jacobi:expr, $root:expr, $golden:expr) => {
        impl Scalar for $t {
            fn validation_tol() -> Self {
                $validation
            }
            fn psd_tol() -> Self {
                $psd
            }
            fn jacobi_tol() -> Self {
                $jacobi
            }
            fn root_tol() -> Self {
                $root
            }
            fn golden_tol() -> Self {
                $golden
            }
        }
    };
}

impl_scalar!(f64, 1e-12, 1e-10, 1e-13, 1e-10, 1e-8);
impl_scalar!(f32, 1e-5, 1e-4, 1e-6, 1e-5, 1e-4);

/// Converts an `f64` constant into the scalar type.
pub(crate) fn cast<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("constant representable in scalar type")
}
