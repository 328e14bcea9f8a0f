//! Amplitude-damping channel in two representations: Kraus operators on the
//! system alone, and a pure-state dilation onto system plus environment.
//! The two agree after tracing out the environment; tests and the verify
//! command cross-check them.

use num_complex::Complex;


use crate::error::{Error, Result};
use crate::qmat::{ComplexMatrix, DensityMatrix, StateVector};
use crate::scalar::{cast, Scalar};

/// Damping coefficient of the amplitude-damping channel, in `[0, 1]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DampingParam<T>(T);

impl<T: Scalar> DampingParam<T> {
    pub fn new(d: T) -> Result<Self> {
        if !d.is_finite() || d < T::zero() || d > T::one() {
            return Err(Error::InvalidParameter {
                name: "d",
                value: d.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self(d))
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Single-qubit channel given by a list of 2x2 Kraus operators summing to
/// the identity under `sum e_i^dagger e_i`.
#[derive(Clone, Debug)]
pub struct KrausChannel<T> {
    ops: Vec<ComplexMatrix<T>>,
}

impl<T: Scalar> KrausChannel<T> {
    pub fn new(ops: Vec<ComplexMatrix<T>>) -> Result<Self> {
        if ops.is_empty() || ops.iter().any(|e| e.rows() != 2 || e.cols() != 2) {
            return Err(Error::InvalidDimensions {
                context: "Kraus operators must be a nonempty list of 2x2 matrices".into(),
            });
        }
        let defect = completeness_defect(&ops);
        if defect > T::validation_tol() {
            return Err(Error::IncompleteKraus {
                defect: defect.to_f64().unwrap_or(f64::NAN),
            });
        }
        Ok(Self { ops })
    }

    pub fn ops(&self) -> &[ComplexMatrix<T>] {
        &self.ops
    }
}

/// Kraus pair of the amplitude-damping channel:
/// `e1 = diag(1, sqrt(1-d))` and `e2 = |0><1| sqrt(d)`.
pub fn amplitude_damping_kraus<T: Scalar>(d: DampingParam<T>) -> KrausChannel<T> {
    let d = d.value();
    let zero = Complex::new(T::zero(), T::zero());
    let one = Complex::new(T::one(), T::zero());
    let keep = Complex::new((T::one() - d).sqrt(), T::zero());
    let decay = Complex::new(d.sqrt(), T::zero());
    let e1 = ComplexMatrix::new(2, 2, vec![one, zero, zero, keep]);
    let e2 = ComplexMatrix::new(2, 2, vec![zero, decay, zero, zero]);
    KrausChannel::new(vec![e1, e2]).expect("(1 - d) + d = 1")
}

/// Largest entry magnitude of `sum e_i^dagger e_i - I`; zero for a complete
/// operator set. Takes a raw slice so incomplete sets can be measured too.
pub fn completeness_defect<T: Scalar>(ops: &[ComplexMatrix<T>]) -> T {
    assert!(!ops.is_empty(), "empty operator list");
    let n = ops[0].cols();
    let mut acc = ComplexMatrix::zeros(n, n);
    for e in ops {
        acc = &acc + &(&e.adjoint() * e);
    }
    acc.max_abs_diff(&ComplexMatrix::identity(n))
}

/// Completeness defect of the two-qubit product set `{e_i tensor e_j}`.
pub fn two_qubit_completeness_defect<T: Scalar>(
    ch_a: &KrausChannel<T>,
    ch_b: &KrausChannel<T>,
) -> T {
    let mut products = Vec::with_capacity(ch_a.ops().len() * ch_b.ops().len());
    for ea in ch_a.ops() {
        for eb in ch_b.ops() {
            products.push(ea.tensor(eb));
        }
    }
    completeness_defect(&products)
}

/// Applies independent single-qubit channels to both qubits of a two-qubit
/// state: `rho -> sum_ij (e_i tensor e_j) rho (e_i tensor e_j)^dagger`.
pub fn apply_two_qubit_channel<T: Scalar>(
    rho: &DensityMatrix<T>,
    ch_a: &KrausChannel<T>,
    ch_b: &KrausChannel<T>,
) -> DensityMatrix<T> {
    assert_eq!(rho.dim(), 4, "two-qubit channel needs a 4x4 state");
    let mut acc = ComplexMatrix::zeros(4, 4);
    for ea in ch_a.ops() {
        for eb in ch_b.ops() {
            let k = ea.tensor(eb);
            acc = &acc + &(&(&k * rho.mat()) * &k.adjoint());
        }
    }
    DensityMatrix::new(acc).expect("complete Kraus set maps states to states")
}

/// Joint pure state of system and environment after the Bell state passes
/// the damping interaction, ordered `(A, B, E1, E2)` with dimension 16.
///
/// Only five basis kets carry weight:
/// `|0000>`, `|1100>`, `|1001>`, `|0110>`, `|0011>`, with amplitudes
/// `(1, 1-d, sqrt(d(1-d)), sqrt(d(1-d)), d) / sqrt(2)`.
pub fn dilated_bell_evolution<T: Scalar>(d: DampingParam<T>) -> StateVector<T> {
    let d = d.value();
    let inv_sqrt2 = cast::<T>(0.5).sqrt();
    let cross = (d * (T::one() - d)).sqrt();
    let mut amps = vec![Complex::new(T::zero(), T::zero()); 16];
    let mut put = |a: usize, b: usize, e1: usize, e2: usize, value: T| {
        amps[8 * a + 4 * b + 2 * e1 + e2] = Complex::new(value * inv_sqrt2, T::zero());
    };
    put(0, 0, 0, 0, T::one());
    put(1, 1, 0, 0, T::one() - d);
    put(1, 0, 0, 1, cross);
    put(0, 1, 1, 0, cross);
    put(0, 0, 1, 1, d);
    StateVector::new(amps).expect("branch amplitudes square-sum to 1")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn dp(d: f64) -> DampingParam<f64> {
        DampingParam::new(d).unwrap()
    }

    fn bell() -> DensityMatrix<f64> {
        let mut m = ComplexMatrix::zeros(4, 4);
        for &(i, j) in &[(0usize, 0usize), (0, 3), (3, 0), (3, 3)] {
            m.set(i, j, Complex64::new(0.5, 0.0));
        }
        DensityMatrix::new(m).unwrap()
    }

    #[test]
    fn damping_param_rejects_out_of_range() {
        assert!(DampingParam::new(-0.1).is_err());
        assert!(DampingParam::new(1.1).is_err());
        assert!(DampingParam::new(f64::NAN).is_err());
        assert!(DampingParam::new(0.0).is_ok());
        assert!(DampingParam::new(1.0).is_ok());
    }

    #[test]
    fn kraus_limits_at_zero_and_full_damping() {
        let ch = amplitude_damping_kraus(dp(0.0));
        assert!(ch.ops()[0].max_abs_diff(&ComplexMatrix::identity(2)) < 1e-15);
        assert!(ch.ops()[1].max_abs() < 1e-15);

        let ch = amplitude_damping_kraus(dp(1.0));
        assert!((ch.ops()[0].get(0, 0).re - 1.0).abs() < 1e-15);
        assert!(ch.ops()[0].get(1, 1).norm() < 1e-15);
        assert!((ch.ops()[1].get(0, 1).re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn kraus_entries_at_half_damping() {
        let ch = amplitude_damping_kraus(dp(0.5));
        let s = 0.5f64.sqrt();
        assert!((ch.ops()[0].get(1, 1).re - s).abs() < 1e-15);
        assert!((ch.ops()[1].get(0, 1).re - s).abs() < 1e-15);
    }

    #[test]
    fn completeness_holds_for_every_damping() {
        for i in 0..=100 {
            let d = i as f64 / 100.0;
            let ch = amplitude_damping_kraus(dp(d));
            assert!(completeness_defect(ch.ops()) <= 1e-15, "defect at d={d}");
        }
        let a = amplitude_damping_kraus(dp(0.7));
        let b = amplitude_damping_kraus(dp(0.7));
        assert!(two_qubit_completeness_defect(&a, &b) <= 1e-14);
    }

    #[test]
    fn dropping_an_operator_shows_as_defect() {
        let ch = amplitude_damping_kraus(dp(0.3));
        let only_first = vec![ch.ops()[0].clone()];
        assert!((completeness_defect(&only_first) - 0.3).abs() < 1e-15);
        assert!(matches!(
            KrausChannel::new(only_first),
            Err(Error::IncompleteKraus { .. })
        ));
    }

    #[test]
    fn channel_on_bell_matches_known_matrix() {
        let d = 0.5;
        let out = apply_two_qubit_channel(&bell(), &amplitude_damping_kraus(dp(d)), &amplitude_damping_kraus(dp(d)));
        let expected = ComplexMatrix::<f64>::from_real(
            4,
            &[
                (1.0 + d * d) / 2.0, 0.0, 0.0, (1.0 - d) / 2.0, //
                0.0, (1.0 - d) * d / 2.0, 0.0, 0.0, //
                0.0, 0.0, (1.0 - d) * d / 2.0, 0.0, //
                (1.0 - d) / 2.0, 0.0, 0.0, (1.0 - d) * (1.0 - d) / 2.0,
            ],
        );
        assert!(out.mat().max_abs_diff(&expected) < 1e-15);
    }

    #[test]
    fn zero_damping_is_identity_full_damping_is_ground_state() {
        let id = amplitude_damping_kraus(dp(0.0));
        let out = apply_two_qubit_channel(&bell(), &id, &id);
        assert!(out.mat().max_abs_diff(bell().mat()) < 1e-15);

        let full = amplitude_damping_kraus(dp(1.0));
        let out = apply_two_qubit_channel(&bell(), &full, &full);
        assert!((out.get(0, 0).re - 1.0).abs() < 1e-15);
        let rest: f64 = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| (i, j) != (0, 0))
            .map(|(i, j)| out.get(i, j).norm())
            .sum();
        assert!(rest < 1e-15);
    }

    #[test]
    fn dilation_amplitudes_and_reduction() {
        let psi = dilated_bell_evolution(dp(0.5));
        let s = 0.5f64.sqrt();
        for (idx, expected) in [(0, s), (12, 0.5 * s), (9, 0.5 * s), (6, 0.5 * s), (3, 0.5 * s)] {
            assert!((psi.amps()[idx].re - expected).abs() < 1e-15, "amp {idx}");
        }

        // Tracing the environment reproduces the Kraus-evolved state.
        let reduced = psi.density().partial_trace(&[2, 2, 2, 2], &[0, 1]).unwrap();
        let ch = amplitude_damping_kraus(dp(0.5));
        let direct = apply_two_qubit_channel(&bell(), &ch, &ch);
        assert!(reduced.mat().max_abs_diff(direct.mat()) < 1e-15);
    }

    #[test]
    fn dilation_limits() {
        let psi = dilated_bell_evolution(dp(0.0));
        let s = 0.5f64.sqrt();
        assert!((psi.amps()[0].re - s).abs() < 1e-15);
        assert!((psi.amps()[12].re - s).abs() < 1e-15);

        let psi = dilated_bell_evolution(dp(1.0));
        assert!((psi.amps()[0].re - s).abs() < 1e-15);
        assert!((psi.amps()[3].re - s).abs() < 1e-15);
        assert!(psi.amps()[12].norm() < 1e-15);
    }
}
