//! End-to-end pipelines and the analysis built on top of them.
//!
//! Plan A sends half of a Bell pair straight through the damping channel and
//! encodes on the survivor. Plan B brackets the channel between a weak
//! filter (before) and a reversal filter (after), both heralded, trading
//! success probability for capacity.

use num_complex::Complex;


use crate::channel::{amplitude_damping_kraus, apply_two_qubit_channel, DampingParam};
use crate::coding::{average_encoded_state, chi1_closed_form};
use crate::error::{Error, Result};
use crate::measurement::LocalFilter;
use crate::optimize::{bisect_root, golden_section_min};
use crate::qmat::{von_neumann_entropy, ComplexMatrix, DensityMatrix};
use crate::scalar::{cast, Scalar};

/// Record of one pipeline run.
#[derive(Clone, Debug)]
pub struct PlanResult<T> {
    pub d: T,
    /// Weak strength; 0 for plan A.
    pub p: T,
    /// Reversal strength; 0 for plan A.
    pub q: T,
    /// Final two-qubit state handed to the encoder.
    pub state: DensityMatrix<T>,
    /// `S(rho)` in bits.
    pub entropy_state: T,
    /// `S(rho*)` of the ensemble average, in bits.
    pub entropy_avg: T,
    /// Capacity `chi = S(rho*) - S(rho)` in bits.
    pub capacity: T,
    /// Probability of both heralded branches; 1 for plan A.
    pub success_prob: T,
}

/// Maximally entangled input `(|00> + |11>)/sqrt(2)` as a density matrix.
pub fn bell_state<T: Scalar>() -> DensityMatrix<T> {
    let half = Complex::new(cast::<T>(0.5), T::zero());
    let mut m = ComplexMatrix::zeros(4, 4);
    for &(i, j) in &[(0usize, 0usize), (0, 3), (3, 0), (3, 3)] {
        m.set(i, j, half);
    }
    DensityMatrix::new(m).expect("Bell projector is a valid state")
}

fn finish<T: Scalar>(d: T, p: T, q: T, state: DensityMatrix<T>, success_prob: T) -> PlanResult<T> {
    let entropy_state = von_neumann_entropy(&state);
    let entropy_avg = von_neumann_entropy(&average_encoded_state(&state));
    PlanResult {
        d,
        p,
        q,
        capacity: entropy_avg - entropy_state,
        entropy_state,
        entropy_avg,
        state,
        success_prob,
    }
}

/// Plan A: Bell state through independent damping channels, then encoding.
pub fn run_plan_a<T: Scalar>(d: DampingParam<T>) -> PlanResult<T> {
    let ch = amplitude_damping_kraus(d);
    let state = apply_two_qubit_channel(&bell_state(), &ch, &ch);
    finish(d.value(), T::zero(), T::zero(), state, T::one())
}

/// Plan B: weak filter at strength `p`, damping channels, reversal filter at
/// strength `q`, then encoding. The reported success probability is the
/// product of both heralded branch probabilities.
pub fn run_plan_b<T: Scalar>(d: DampingParam<T>, p: T, q: T) -> Result<PlanResult<T>> {
    let weak = LocalFilter::weak(p, p)?;
    let reversal = LocalFilter::reversal(q, q)?;
    let ch = amplitude_damping_kraus(d);

    let pre = weak.apply(&bell_state())?;
    let damped = apply_two_qubit_channel(&pre.state, &ch, &ch);
    let post = reversal.apply(&damped)?;

    Ok(finish(
        d.value(),
        p,
        q,
        post.state,
        pre.success_prob * post.success_prob,
    ))
}

/// Unnormalized X-form entries of the plan-B output, before dividing by the
/// success probability. Derived by composing the three stages on the Bell
/// state; `r22 == r33` and `r14` is the only coherence.
fn plan_b_raw_entries<T: Scalar>(d: T, p: T, q: T) -> (T, T, T, T) {
    let half = cast::<T>(0.5);
    let one = T::one();
    let kp = one - p;
    let kq = one - q;
    let kd = one - d;
    let r11 = (half + half * d * d * kp * kp) * kq * kq;
    let r22 = half * d * kd * kp * kp * kq;
    let r44 = half * kp * kp * kd * kd;
    let r14 = half * kd * kp * kq;
    (r11, r22, r44, r14)
}

/// Success probability of plan B in closed form, defined for every
/// `(d, p, q)` including degenerate corners where it vanishes.
pub fn plan_b_success_prob<T: Scalar>(d: DampingParam<T>, p: T, q: T) -> T {
    let (r11, r22, r44, _) = plan_b_raw_entries(d.value(), p, q);
    r11 + r22 + r22 + r44
}

/// Closed-form plan-B state and success probability.
///
/// Matches the step-by-step pipeline entrywise; tests and the verify command
/// enforce the agreement.
pub fn rho2_closed_form<T: Scalar>(
    d: DampingParam<T>,
    p: T,
    q: T,
) -> Result<(DensityMatrix<T>, T)> {
    for (name, s) in [("p", p), ("q", q)] {
        if !s.is_finite() || s < T::zero() || s > T::one() {
            return Err(Error::InvalidParameter {
                name,
                value: s.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    let (r11, r22, r44, r14) = plan_b_raw_entries(d.value(), p, q);
    let t = r11 + r22 + r22 + r44;
    if t <= T::validation_tol() {
        return Err(Error::PostSelectionImpossible {
            trace: t.to_f64().unwrap_or(f64::NAN),
        });
    }
    let mut m = ComplexMatrix::zeros(4, 4);
    let re = |x: T| Complex::new(x / t, T::zero());
    m.set(0, 0, re(r11));
    m.set(1, 1, re(r22));
    m.set(2, 2, re(r22));
    m.set(3, 3, re(r44));
    m.set(0, 3, re(r14));
    m.set(3, 0, re(r14));
    Ok((DensityMatrix::new(m)?, t))
}

/// Reversal strength together with a degeneracy marker for the corners
/// where the heralded branch vanishes.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptimalReversal<T> {
    pub q_star: T,
    /// Set when `p = 1` or `d = 1`; `q_star` is then 1 and plan B at
    /// `(d, p, q_star)` has no successful branch.
    pub degenerate: bool,
}

/// Reversal strength that balances the ground and doubly-excited
/// populations, `q* = 1 - (1-p)(1-d)/sqrt(1 + d^2 (1-p)^2)`, making the
/// encoded ensemble average exactly maximally mixed (two bits of entropy).
pub fn optimal_reversal_strength<T: Scalar>(d: DampingParam<T>, p: T) -> Result<OptimalReversal<T>> {
    if !p.is_finite() || p < T::zero() || p > T::one() {
        return Err(Error::InvalidParameter {
            name: "p",
            value: p.to_f64().unwrap_or(f64::NAN),
        });
    }
    let dv = d.value();
    if p == T::one() || dv == T::one() {
        return Ok(OptimalReversal { q_star: T::one(), degenerate: true });
    }
    let kp = T::one() - p;
    let kd = T::one() - dv;
    let q_star = T::one() - kp * kd / (T::one() + dv * dv * kp * kp).sqrt();
    Ok(OptimalReversal { q_star, degenerate: false })
}

/// Damping coefficient where the plan-A capacity crosses one bit, found by
/// bisection between zero and the capacity minimum.
pub fn find_capacity_threshold<T: Scalar>() -> T {
    let (d_min, _) = find_min_chi1::<T>();
    let chi = |d: T| chi1_closed_form(DampingParam::new(d).expect("bracket stays in [0, 1]"));
    bisect_root(T::zero(), d_min, |d| chi(d) - T::one(), T::root_tol())
}

/// Location and value of the plan-A capacity minimum on `[0, 1]`, by
/// golden-section search.
pub fn find_min_chi1<T: Scalar>() -> (T, T) {
    golden_section_min(
        T::zero(),
        T::one(),
        |d| chi1_closed_form(DampingParam::new(d).expect("search stays in [0, 1]")),
        T::golden_tol(),
    )
}

/// Which pipeline a sweep evaluates at each grid point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SweepMode {
    PlanA,
    PlanB,
    /// Plan B with `q` replaced by `q*(d, p)` at every point.
    PlanBQStar,
}

/// Named grids over the three parameters. Single-element axes pin a value.
#[derive(Clone, Debug)]
pub struct SweepAxes<T> {
    pub d: Vec<T>,
    pub p: Vec<T>,
    pub q: Vec<T>,
}

impl<T: Scalar> SweepAxes<T> {
    /// Axes for a plan-A sweep: only `d` varies, filters stay off.
    pub fn plan_a(d: Vec<T>) -> Self {
        Self { d, p: vec![T::zero()], q: vec![T::zero()] }
    }

    /// Axes for a plan-B sweep whose reversal strength is computed per
    /// point; the `q` axis is a placeholder.
    pub fn plan_b_auto(d: Vec<T>, p: Vec<T>) -> Self {
        Self { d, p, q: vec![T::zero()] }
    }

    fn validate(&self) -> Result<()> {
        for (name, axis) in [("d", &self.d), ("p", &self.p), ("q", &self.q)] {
            if axis.is_empty() {
                return Err(Error::InvalidParameter { name, value: f64::NAN });
            }
            for &v in axis {
                if !v.is_finite() || v < T::zero() || v > T::one() {
                    return Err(Error::InvalidParameter {
                        name,
                        value: v.to_f64().unwrap_or(f64::NAN),
                    });
                }
            }
        }
        Ok(())
    }
}

/// One grid point of a sweep; `result` is absent where post-selection is
/// impossible and the row only records the (vanishing) success probability.
#[derive(Clone, Debug)]
pub struct SweepRow<T> {
    pub d: T,
    pub p: T,
    pub q: T,
    /// Closed-form success probability; kept even for degenerate rows.
    pub success_prob: T,
    pub result: Option<PlanResult<T>>,
}

impl<T> SweepRow<T> {
    pub fn is_degenerate(&self) -> bool {
        self.result.is_none()
    }
}

/// Grid evaluation in deterministic `d`-major, then `p`, then `q` order.
#[derive(Clone, Debug)]
pub struct SweepTable<T> {
    pub axes: SweepAxes<T>,
    pub mode: SweepMode,
    pub rows: Vec<SweepRow<T>>,
}

/// Evaluates one pipeline run per grid point. Degenerate points are kept as
/// flagged rows instead of aborting the sweep.
pub fn sweep<T: Scalar>(axes: &SweepAxes<T>, mode: SweepMode) -> Result<SweepTable<T>> {
    axes.validate()?;
    if mode == SweepMode::PlanA && (axes.p != vec![T::zero()] || axes.q != vec![T::zero()]) {
        return Err(Error::InvalidParameter { name: "p", value: f64::NAN });
    }
    if mode == SweepMode::PlanBQStar && axes.q.len() != 1 {
        return Err(Error::InvalidParameter { name: "q", value: f64::NAN });
    }

    let mut rows = Vec::with_capacity(axes.d.len() * axes.p.len() * axes.q.len());
    for &d in &axes.d {
        let dp = DampingParam::new(d)?;
        for &p in &axes.p {
            for &q_axis in &axes.q {
                let q = match mode {
                    SweepMode::PlanBQStar => optimal_reversal_strength(dp, p)?.q_star,
                    _ => q_axis,
                };
                let row = match mode {
                    SweepMode::PlanA => {
                        let result = run_plan_a(dp);
                        SweepRow { d, p, q, success_prob: result.success_prob, result: Some(result) }
                    }
                    SweepMode::PlanB | SweepMode::PlanBQStar => match run_plan_b(dp, p, q) {
                        Ok(result) => SweepRow {
                            d,
                            p,
                            q,
                            success_prob: result.success_prob,
                            result: Some(result),
                        },
                        Err(Error::PostSelectionImpossible { .. }) => SweepRow {
                            d,
                            p,
                            q,
                            success_prob: plan_b_success_prob(dp, p, q),
                            result: None,
                        },
                        Err(other) => return Err(other),
                    },
                };
                rows.push(row);
            }
        }
    }
    Ok(SweepTable { axes: axes.clone(), mode, rows })
}

/// Evenly spaced grid over `[start, stop]` with exact endpoints.
pub fn linspace<T: Scalar>(start: T, stop: T, steps: usize) -> Vec<T> {
    assert!(steps >= 2, "a grid needs at least two points");
    let span = stop - start;
    let denom = cast::<T>((steps - 1) as f64);
    let mut grid: Vec<T> = (0..steps)
        .map(|i| start + span * cast::<T>(i as f64) / denom)
        .collect();
    grid[0] = start;
    grid[steps - 1] = stop;
    grid
}
