//! Partial-collapse measurements applied as post-selected filters.
//!
//! A weak filter damps the excited component of each qubit by
//! `sqrt(1 - p_i)`; a reversal filter damps the ground component by
//! `sqrt(1 - q_i)`. Applying a filter keeps only the heralded branch and
//! reports its probability.

use num_complex::Complex;


use crate::error::{Error, Result};
use crate::qmat::{ComplexMatrix, DensityMatrix};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterKind {
    Weak,
    Reversal,
}

/// Two-qubit diagonal filter built from per-qubit strengths in `[0, 1]`.
#[derive(Clone, Debug)]
pub struct LocalFilter<T> {
    kind: FilterKind,
    s1: T,
    s2: T,
    op: ComplexMatrix<T>,
}

/// Heralded output of a filter: the renormalized state together with the
/// probability of the kept branch.
#[derive(Clone, Debug)]
pub struct FilterOutcome<T> {
    pub state: DensityMatrix<T>,
    pub success_prob: T,
}

impl<T: Scalar> LocalFilter<T> {
    /// Weak measurement `diag(1, sqrt(1-p1)) tensor diag(1, sqrt(1-p2))`.
    pub fn weak(p1: T, p2: T) -> Result<Self> {
        check_strength("p1", p1)?;
        check_strength("p2", p2)?;
        let op = qubit_diag(T::one(), (T::one() - p1).sqrt())
            .tensor(&qubit_diag(T::one(), (T::one() - p2).sqrt()));
        Ok(Self { kind: FilterKind::Weak, s1: p1, s2: p2, op })
    }

    /// Reversal measurement `diag(sqrt(1-q1), 1) tensor diag(sqrt(1-q2), 1)`.
    pub fn reversal(q1: T, q2: T) -> Result<Self> {
        check_strength("q1", q1)?;
        check_strength("q2", q2)?;
        let op = qubit_diag((T::one() - q1).sqrt(), T::one())
            .tensor(&qubit_diag((T::one() - q2).sqrt(), T::one()));
        Ok(Self { kind: FilterKind::Reversal, s1: q1, s2: q2, op })
    }

    pub fn kind(&self) -> FilterKind {
        self.kind
    }

    /// Per-qubit strengths `(s1, s2)`.
    pub fn strengths(&self) -> (T, T) {
        (self.s1, self.s2)
    }

    /// The 4x4 diagonal operator.
    pub fn op(&self) -> &ComplexMatrix<T> {
        &self.op
    }

    /// Post-selects the filter branch: `sigma = M rho M^dagger`, success
    /// probability `tr sigma`, state `sigma / tr sigma`.
    ///
    /// Errors with `PostSelectionImpossible` when the branch probability is
    /// below the validation tolerance; normalizing that branch would
    /// fabricate a state out of round-off.
    pub fn apply(&self, rho: &DensityMatrix<T>) -> Result<FilterOutcome<T>> {
        assert_eq!(rho.dim(), 4, "local filters act on two-qubit states");
        let sigma = &(&self.op * rho.mat()) * &self.op.adjoint();
        let t = sigma.trace().re;
        if t <= T::validation_tol() {
            return Err(Error::PostSelectionImpossible {
                trace: t.to_f64().unwrap_or(f64::NAN),
            });
        }
        let t = t.min(T::one());
        let state = DensityMatrix::new(sigma.scaled(T::one() / t))
            .expect("filtered and renormalized state stays valid");
        Ok(FilterOutcome { state, success_prob: t })
    }
}

fn check_strength<T: Scalar>(name: &'static str, s: T) -> Result<()> {
    if !s.is_finite() || s < T::zero() || s > T::one() {
        return Err(Error::InvalidParameter {
            name,
            value: s.to_f64().unwrap_or(f64::NAN),
        });
    }
    Ok(())
}

fn qubit_diag<T: Scalar>(d0: T, d1: T) -> ComplexMatrix<T> {
    ComplexMatrix::from_diagonal(&[
        Complex::new(d0, T::zero()),
        Complex::new(d1, T::zero()),
    ])
}
