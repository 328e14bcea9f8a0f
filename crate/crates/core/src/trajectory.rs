//! Seeded Monte Carlo unraveling of plan B.
//!
//! Each trial propagates a pure state: accept the weak-measurement branch
//! with its squared-norm probability, sample one Kraus operator per qubit,
//! then accept the reversal branch. Successes estimate the analytic success
//! probability and the accepted projectors average to the plan-B state.
//!
//! Randomness for trial `k` comes from a ChaCha8 stream cipher keyed by the
//! seed with stream id `k`, so results are identical across platforms and
//! independent of how trials might be partitioned.

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::channel::{amplitude_damping_kraus, DampingParam};
use crate::error::{Error, Result};
use crate::measurement::LocalFilter;
use crate::qmat::{ComplexMatrix, DensityMatrix};
use crate::scalar::{cast, Scalar};

/// Sampled estimate of the plan-B success probability and output state.
#[derive(Clone, Debug)]
pub struct McEstimate<T> {
    pub trials: u64,
    pub successes: u64,
    /// `successes / trials`.
    pub t_hat: T,
    /// Binomial standard error `sqrt(t_hat (1 - t_hat) / trials)`.
    pub t_stderr: T,
    /// Average projector over accepted trials; absent when none succeeded.
    pub state_hat: Option<DensityMatrix<T>>,
    pub seed: u64,
}

/// Runs `trials` independent plan-B trajectories at `(d, p, q)`.
/// Deterministic for a fixed seed.
pub fn simulate_plan_b<T: Scalar>(
    d: DampingParam<T>,
    p: T,
    q: T,
    trials: u64,
    seed: u64,
) -> Result<McEstimate<T>> {
    if trials == 0 {
        return Err(Error::InvalidParameter { name: "trials", value: 0.0 });
    }
    let weak = LocalFilter::weak(p, p)?;
    let reversal = LocalFilter::reversal(q, q)?;
    let kraus = amplitude_damping_kraus(d);
    let i2 = ComplexMatrix::identity(2);
    let ops_a: Vec<ComplexMatrix<T>> = kraus.ops().iter().map(|e| e.tensor(&i2)).collect();
    let ops_b: Vec<ComplexMatrix<T>> = kraus.ops().iter().map(|e| i2.tensor(e)).collect();

    let inv_sqrt2 = cast::<T>(0.5).sqrt();
    let zero = Complex::new(T::zero(), T::zero());
    let bell = vec![
        Complex::new(inv_sqrt2, T::zero()),
        zero,
        zero,
        Complex::new(inv_sqrt2, T::zero()),
    ];

    // compensated accumulation keeps the averaged trace exact to O(eps)
    // even across millions of accepted projectors
    let mut sum = vec![Complex::new(T::zero(), T::zero()); 16];
    let mut comp = [Complex::new(T::zero(), T::zero()); 16];
    let mut successes = 0u64;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        if let Some(psi) = run_trial(&bell, &weak, &ops_a, &ops_b, &reversal, &mut rng) {
            successes += 1;
            for i in 0..4 {
                for j in 0..4 {
                    let k = 4 * i + j;
                    let v = psi[i] * psi[j].conj();
                    kahan_add(&mut sum[k].re, &mut comp[k].re, v.re);
                    kahan_add(&mut sum[k].im, &mut comp[k].im, v.im);
                }
            }
        }
    }

    let t_hat = cast::<T>(successes as f64) / cast::<T>(trials as f64);
    let t_stderr = (t_hat * (T::one() - t_hat) / cast::<T>(trials as f64)).sqrt();
    let state_hat = if successes > 0 {
        let avg = ComplexMatrix::new(4, 4, sum).scaled(T::one() / cast::<T>(successes as f64));
        Some(DensityMatrix::new(avg).expect("average of projectors is a valid state"))
    } else {
        None
    };
    Ok(McEstimate { trials, successes, t_hat, t_stderr, state_hat, seed })
}

fn run_trial<T: Scalar>(
    bell: &[Complex<T>],
    weak: &LocalFilter<T>,
    ops_a: &[ComplexMatrix<T>],
    ops_b: &[ComplexMatrix<T>],
    reversal: &LocalFilter<T>,
    rng: &mut ChaCha8Rng,
) -> Option<Vec<Complex<T>>> {
    // heralded weak branch
    let candidate = weak.op().apply(bell);
    let prob = norm_sq(&candidate);
    if draw::<T>(rng) >= prob {
        return None;
    }
    let mut psi = normalized(candidate, prob);

    // one Kraus branch per qubit
    for ops in [ops_a, ops_b] {
        let keep = ops[0].apply(&psi);
        let keep_prob = norm_sq(&keep);
        psi = if draw::<T>(rng) < keep_prob {
            normalized(keep, keep_prob)
        } else {
            let decay = ops[1].apply(&psi);
            let decay_prob = norm_sq(&decay);
            if decay_prob > T::zero() {
                normalized(decay, decay_prob)
            } else {
                normalized(keep, keep_prob)
            }
        };
    }

    // heralded reversal branch
    let candidate = reversal.op().apply(&psi);
    let prob = norm_sq(&candidate);
    if draw::<T>(rng) >= prob {
        return None;
    }
    Some(normalized(candidate, prob))
}

fn kahan_add<T: Scalar>(sum: &mut T, comp: &mut T, value: T) {
    let y = value - *comp;
    let t = *sum + y;
    *comp = (t - *sum) - y;
    *sum = t;
}

fn draw<T: Scalar>(rng: &mut ChaCha8Rng) -> T {
    cast::<T>(rng.gen::<f64>())
}

fn norm_sq<T: Scalar>(v: &[Complex<T>]) -> T {
    v.iter().map(|z| z.norm_sqr()).sum()
}

fn normalized<T: Scalar>(mut v: Vec<Complex<T>>, norm_sq: T) -> Vec<Complex<T>> {
    let inv = T::one() / norm_sq.sqrt();
    for z in &mut v {
        *z = z.scale(inv);
    }
    v
}
