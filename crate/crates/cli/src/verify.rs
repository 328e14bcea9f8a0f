//! Built-in consistency suite behind `densecode verify`.
//!
//! Each check compares two independent routes to the same quantity (or an
//! exact algebraic identity) and reports the worst deviation against a fixed
//! tolerance.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use densecode::channel::{
    amplitude_damping_kraus, apply_two_qubit_channel, completeness_defect,
    dilated_bell_evolution, two_qubit_completeness_defect, DampingParam,
};
use densecode::coding::{chi1_closed_form, encoding_unitaries, holevo_capacity};
use densecode::protocol::{
    bell_state, linspace, optimal_reversal_strength, rho2_closed_form, run_plan_a, run_plan_b,
};
use densecode::qmat::{hermitian_spectrum, xstate_spectrum, ComplexMatrix, DensityMatrix};

#[derive(Serialize)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
}

fn check(name: &'static str, max_deviation: f64, tolerance: f64) -> Check {
    Check { name, pass: max_deviation <= tolerance, max_deviation, tolerance }
}

fn dp(d: f64) -> DampingParam<f64> {
    DampingParam::new(d).unwrap()
}

pub fn run_all(corrupt_kraus: bool) -> Vec<Check> {
    vec![
        kraus_completeness(corrupt_kraus),
        dilation_kraus_equivalence(),
        chi1_closed_form_agreement(),
        rho2_closed_form_agreement(),
        plan_b_identity_filters(),
        qstar_average_entropy(),
        xstate_spectrum_agreement(),
        encoding_set_orthogonality(),
    ]
}

/// Completeness defect of every constructed channel, single- and two-qubit.
fn kraus_completeness(corrupt: bool) -> Check {
    let mut worst: f64 = 0.0;
    for d in linspace(0.0, 1.0, 101) {
        let ch = amplitude_damping_kraus(dp(d));
        let mut ops: Vec<ComplexMatrix<f64>> = ch.ops().to_vec();
        if corrupt {
            let bad = ops[0].get(1, 1) + Complex64::new(1e-3, 0.0);
            ops[0].set(1, 1, bad);
        }
        worst = worst.max(completeness_defect(&ops));
        if !corrupt {
            worst = worst.max(two_qubit_completeness_defect(&ch, &ch));
        }
    }
    check("kraus-completeness", worst, 1e-14)
}

/// Environment dilation plus partial trace against direct Kraus evolution.
fn dilation_kraus_equivalence() -> Check {
    let mut worst: f64 = 0.0;
    for d in linspace(0.0, 1.0, 101) {
        let via_dilation = dilated_bell_evolution(dp(d))
            .density()
            .partial_trace(&[2, 2, 2, 2], &[0, 1])
            .unwrap();
        let ch = amplitude_damping_kraus(dp(d));
        let via_kraus = apply_two_qubit_channel(&bell_state(), &ch, &ch);
        worst = worst.max(via_dilation.mat().max_abs_diff(via_kraus.mat()));
    }
    check("dilation-kraus-equivalence", worst, 1e-12)
}

/// Closed-form plan-A capacity against the compositional pipeline.
fn chi1_closed_form_agreement() -> Check {
    let mut worst: f64 = 0.0;
    for d in linspace(0.0, 1.0, 101) {
        let pipeline = holevo_capacity(&run_plan_a(dp(d)).state);
        worst = worst.max((chi1_closed_form(dp(d)) - pipeline).abs());
    }
    check("chi1-closed-form", worst, 1e-10)
}

/// Closed-form plan-B state and success probability against the pipeline,
/// over a 9x9x9 grid.
fn rho2_closed_form_agreement() -> Check {
    let grid = linspace(0.1, 0.9, 9);
    let mut worst: f64 = 0.0;
    for &d in &grid {
        for &p in &grid {
            for &q in &grid {
                let (rho, t) = rho2_closed_form(dp(d), p, q).unwrap();
                let run = run_plan_b(dp(d), p, q).unwrap();
                worst = worst.max(rho.mat().max_abs_diff(run.state.mat()));
                worst = worst.max((t - run.success_prob).abs());
            }
        }
    }
    check("rho2-closed-form", worst, 1e-12)
}

/// Plan B with both filters off reduces to plan A exactly.
fn plan_b_identity_filters() -> Check {
    let mut worst: f64 = 0.0;
    for d in linspace(0.0, 1.0, 21) {
        let a = run_plan_a(dp(d));
        let b = run_plan_b(dp(d), 0.0, 0.0).unwrap();
        worst = worst.max(a.state.mat().max_abs_diff(b.state.mat()));
    }
    check("plan-b-identity-filters", worst, 1e-14)
}

/// The computed reversal strength drives the encoded average to full
/// entropy for every (d, p) on a 9x9 grid.
fn qstar_average_entropy() -> Check {
    let grid = linspace(0.1, 0.9, 9);
    let mut worst: f64 = 0.0;
    for &d in &grid {
        for &p in &grid {
            let q = optimal_reversal_strength(dp(d), p).unwrap().q_star;
            let run = run_plan_b(dp(d), p, q).unwrap();
            worst = worst.max((run.entropy_avg - 2.0).abs());
        }
    }
    check("qstar-average-entropy", worst, 1e-9)
}

/// Jacobi spectra against the X-form closed form on 1000 random X states.
fn xstate_spectrum_agreement() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_517);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let rho = random_x_state(&mut rng);
        let iterative = hermitian_spectrum(rho.mat()).unwrap();
        let closed = xstate_spectrum(&rho).unwrap();
        for (a, b) in iterative.values().iter().zip(closed.values()) {
            worst = worst.max((a - b).abs());
        }
    }
    check("xstate-spectrum-agreement", worst, 1e-10)
}

/// Unitarity and mutual orthogonality of the four encoding operators.
fn encoding_set_orthogonality() -> Check {
    let set = encoding_unitaries::<f64>();
    let i2 = ComplexMatrix::identity(2);
    let mut worst: f64 = 0.0;
    for u in set.unitaries() {
        worst = worst.max((&u.adjoint() * u).max_abs_diff(&i2));
    }
    for i in 0..4 {
        for j in 0..4 {
            if i != j {
                let overlap = (&set.unitaries()[i].adjoint() * &set.unitaries()[j]).trace();
                worst = worst.max(overlap.norm());
            }
        }
    }
    check("encoding-set-orthogonality", worst, 1e-14)
}

/// Random two-qubit X state: nonnegative diagonal summing to one, corner
/// bounded by the positivity condition `|z|^2 <= a e`.
fn random_x_state(rng: &mut ChaCha8Rng) -> DensityMatrix<f64> {
    let mut diag = [0.0f64; 4];
    let mut total = 0.0;
    for v in &mut diag {
        *v = rng.gen::<f64>() + 1e-6;
        total += *v;
    }
    for v in &mut diag {
        *v /= total;
    }
    let bound = (diag[0] * diag[3]).sqrt();
    let mag = rng.gen::<f64>() * bound;
    let phase = rng.gen::<f64>() * std::f64::consts::TAU;
    let z = Complex64::new(mag * phase.cos(), mag * phase.sin());

    let mut m = ComplexMatrix::zeros(4, 4);
    for (i, &v) in diag.iter().enumerate() {
        m.set(i, i, Complex64::new(v, 0.0));
    }
    m.set(0, 3, z);
    m.set(3, 0, z.conj());
    DensityMatrix::new(m).unwrap()
}
