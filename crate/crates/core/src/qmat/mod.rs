//! Complex matrix arithmetic, tensor structure, Hermitian spectra and
//! von Neumann entropy.

mod density;
mod entropy;
mod matrix;
mod spectrum;

pub use density::{DensityMatrix, StateVector};
pub use entropy::von_neumann_entropy;
pub use matrix::ComplexMatrix;
pub use spectrum::{hermitian_spectrum, xstate_spectrum, Spectrum};

pub(crate) use entropy::xlog2;
