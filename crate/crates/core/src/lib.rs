//! Two-qubit dense coding through amplitude-damping noise, with and without
//! weak/reversal measurement protection.
//!
//! The crate simulates both pipelines end to end, computes the Holevo
//! capacity of the resulting ensembles, provides closed forms and their
//! cross-checks, locates the capacity threshold and minimum of the
//! unprotected scheme, and validates the heralded success probability by a
//! seeded Monte Carlo unraveling.
//!
//! Module map:
//!
//! - [`qmat`]: complex matrices, partial trace, Hermitian spectra, entropy
//! - [`channel`]: amplitude-damping channel (Kraus and dilated forms)
//! - [`measurement`]: weak and reversal post-selected filters
//! - [`coding`]: encoding ensemble and Holevo capacity
//! - [`protocol`]: plan A / plan B pipelines, optimization, sweeps
//! - [`trajectory`]: Monte Carlo validation
//!
//! All numerical code is generic over the [`Scalar`] floating-point type;
//! the `*64` aliases at the crate root pin the default `f64` precision.

pub mod channel;
pub mod coding;
pub mod error;
pub mod measurement;
mod optimize;
pub mod protocol;
pub mod qmat;
pub mod scalar;
pub mod trajectory;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type ComplexMatrix64 = qmat::ComplexMatrix<f64>;
pub type DensityMatrix64 = qmat::DensityMatrix<f64>;
pub type StateVector64 = qmat::StateVector<f64>;
pub type Spectrum64 = qmat::Spectrum<f64>;
pub type DampingParam64 = channel::DampingParam<f64>;
pub type KrausChannel64 = channel::KrausChannel<f64>;
pub type LocalFilter64 = measurement::LocalFilter<f64>;
pub type FilterOutcome64 = measurement::FilterOutcome<f64>;
pub type EncodingSet64 = coding::EncodingSet<f64>;
pub type PlanResult64 = protocol::PlanResult<f64>;
pub type SweepTable64 = protocol::SweepTable<f64>;
pub type McEstimate64 = trajectory::McEstimate<f64>;
