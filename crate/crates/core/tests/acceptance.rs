//! Acceptance suite: one test per shipped claim, each printing a pass line
//! with the measured value and its pinned tolerance. Run with
//! `cargo test --test acceptance -- --nocapture` to see the lines.

mod common;

use densecode::channel::{
    amplitude_damping_kraus, apply_two_qubit_channel, completeness_defect,
    dilated_bell_evolution, two_qubit_completeness_defect, DampingParam,
};
use densecode::coding::{average_encoded_state, chi1_closed_form, holevo_capacity};
use densecode::measurement::LocalFilter;
use densecode::protocol::{
    bell_state, find_capacity_threshold, find_min_chi1, linspace, optimal_reversal_strength,
    plan_b_success_prob, rho2_closed_form, run_plan_a, run_plan_b,
};
use densecode::qmat::{hermitian_spectrum, von_neumann_entropy, xstate_spectrum, DensityMatrix};
use densecode::trajectory::simulate_plan_b;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn dp(d: f64) -> DampingParam<f64> {
    DampingParam::new(d).unwrap()
}

/// Criterion 1: capacity of the unprotected pipeline at d = 0.5, computed
/// compositionally (Bell -> channel -> ensemble average -> entropy gap).
#[test]
fn criterion_01_chi1_at_half_damping() {
    let ch = amplitude_damping_kraus(dp(0.5));
    let rho = apply_two_qubit_channel(&bell_state(), &ch, &ch);
    let chi = holevo_capacity(&rho);
    assert!((chi - 0.61).abs() <= 0.005, "chi1(0.5) = {chi}");
    println!("PASS criterion 1: chi1(0.5) = {chi:.6} (0.61 +- 0.005)");
}

/// Criterion 2: location and value of the capacity minimum.
#[test]
fn criterion_02_capacity_minimum() {
    let (d_star, chi_min) = find_min_chi1::<f64>();
    assert!((d_star - 0.652).abs() <= 0.005, "d* = {d_star}");
    assert!((chi_min - 0.55).abs() <= 0.005, "chi_min = {chi_min}");
    println!(
        "PASS criterion 2: d* = {d_star:.6} (0.652 +- 0.005), chi_min = {chi_min:.6} (0.55 +- 0.005)"
    );
}

/// Criterion 3: damping threshold where the capacity crosses one bit.
#[test]
fn criterion_03_capacity_threshold() {
    let threshold = find_capacity_threshold::<f64>();
    assert!((threshold - 0.245).abs() <= 0.005, "threshold = {threshold}");
    println!("PASS criterion 3: threshold d = {threshold:.6} (0.245 +- 0.005)");
}

/// Criterion 4: protected pipeline at the reference operating point.
#[test]
fn criterion_04_plan_b_reference_point() {
    let opt = optimal_reversal_strength(dp(0.5), 0.9).unwrap();
    assert!((opt.q_star - 0.95).abs() <= 0.005, "q* = {}", opt.q_star);
    let r = run_plan_b(dp(0.5), 0.9, opt.q_star).unwrap();
    assert!((r.entropy_state - 0.33).abs() <= 0.01, "S(rho2) = {}", r.entropy_state);
    assert!((r.entropy_avg - 2.0).abs() <= 1e-9, "S(rho2*) = {}", r.entropy_avg);
    assert!((r.capacity - 1.67).abs() <= 0.01, "chi2 = {}", r.capacity);
    println!(
        "PASS criterion 4: q* = {:.6} (0.95 +- 0.005), S(rho2) = {:.6} (0.33 +- 0.01), \
         S(rho2*) = {:.12} (2 +- 1e-9), chi2 = {:.6} (1.67 +- 0.01)",
        opt.q_star, r.entropy_state, r.entropy_avg, r.capacity
    );
}

/// Criterion 5: full-strength special cases collapse to a pure state with a
/// one-bit ensemble average.
#[test]
fn criterion_05_full_strength_special_cases() {
    for (d, p, q) in [(0.5, 1.0, 0.3), (0.5, 1.0, 0.7), (0.3, 0.4, 1.0), (0.7, 0.2, 1.0)] {
        let r = run_plan_b(dp(d), p, q).unwrap();
        assert!(r.entropy_state.abs() <= 1e-9, "S(rho2) at ({d},{p},{q}) = {}", r.entropy_state);
        assert!(
            (r.entropy_avg - 1.0).abs() <= 1e-9,
            "S(rho2*) at ({d},{p},{q}) = {}",
            r.entropy_avg
        );
    }
    println!("PASS criterion 5: p=1 and q=1 cases give S(rho2) = 0, S(rho2*) = 1 (within 1e-9)");
}

/// Criterion 6: capacity endpoints of the unprotected pipeline.
#[test]
fn criterion_06_chi1_endpoints() {
    let at_zero = chi1_closed_form(dp(0.0));
    let at_one = chi1_closed_form(dp(1.0));
    assert!((at_zero - 2.0).abs() <= 1e-9, "chi1(0) = {at_zero}");
    assert!((at_one - 1.0).abs() <= 1e-9, "chi1(1) = {at_one}");
    // the compositional route agrees at both endpoints
    let pipeline_zero = run_plan_a(dp(0.0)).capacity;
    let pipeline_one = run_plan_a(dp(1.0)).capacity;
    assert!((pipeline_zero - 2.0).abs() <= 1e-9);
    assert!((pipeline_one - 1.0).abs() <= 1e-9);
    println!("PASS criterion 6: chi1(0) = {at_zero:.12}, chi1(1) = {at_one:.12} (within 1e-9)");
}

/// Criterion 7: oracle equivalences between independent routes.
#[test]
fn criterion_07_oracle_equivalences() {
    // dilation + partial trace vs direct Kraus evolution, 101 points
    let mut worst_dilation = 0.0f64;
    for d in linspace(0.0, 1.0, 101) {
        let via_dilation = dilated_bell_evolution(dp(d))
            .density()
            .partial_trace(&[2, 2, 2, 2], &[0, 1])
            .unwrap();
        let ch = amplitude_damping_kraus(dp(d));
        let via_kraus = apply_two_qubit_channel(&bell_state(), &ch, &ch);
        worst_dilation = worst_dilation.max(via_dilation.mat().max_abs_diff(via_kraus.mat()));
    }
    assert!(worst_dilation <= 1e-12, "dilation vs Kraus: {worst_dilation}");

    // closed-form plan-B state vs pipeline, 9x9x9 grid
    let grid = linspace(0.1, 0.9, 9);
    let mut worst_rho2 = 0.0f64;
    for &d in &grid {
        for &p in &grid {
            for &q in &grid {
                let (rho, t) = rho2_closed_form(dp(d), p, q).unwrap();
                let run = run_plan_b(dp(d), p, q).unwrap();
                worst_rho2 = worst_rho2.max(rho.mat().max_abs_diff(run.state.mat()));
                worst_rho2 = worst_rho2.max((t - run.success_prob).abs());
            }
        }
    }
    assert!(worst_rho2 <= 1e-12, "rho2 closed form vs pipeline: {worst_rho2}");

    // closed-form capacity vs pipeline capacity, 101 points
    let mut worst_chi1 = 0.0f64;
    for d in linspace(0.0, 1.0, 101) {
        let pipeline = holevo_capacity(&run_plan_a(dp(d)).state);
        worst_chi1 = worst_chi1.max((chi1_closed_form(dp(d)) - pipeline).abs());
    }
    assert!(worst_chi1 <= 1e-10, "chi1 closed form vs pipeline: {worst_chi1}");

    println!(
        "PASS criterion 7: dilation-vs-Kraus {worst_dilation:.3e} (<= 1e-12), \
         rho2 closed-form {worst_rho2:.3e} (<= 1e-12), chi1 closed-form {worst_chi1:.3e} (<= 1e-10)"
    );
}

/// Criterion 8: property suite over constructed channels, pipeline stages,
/// random states and random X states.
#[test]
fn criterion_08_property_suite() {
    // completeness of every constructed channel
    let mut worst_defect = 0.0f64;
    for d in linspace(0.0, 1.0, 101) {
        let ch = amplitude_damping_kraus(dp(d));
        worst_defect = worst_defect.max(completeness_defect(ch.ops()));
        worst_defect = worst_defect.max(two_qubit_completeness_defect(&ch, &ch));
    }
    assert!(worst_defect <= 1e-14, "completeness defect {worst_defect}");

    // every pipeline stage satisfies the state invariants
    let mut worst_stage = 0.0f64;
    for &d in &[0.1, 0.5, 0.9] {
        for &p in &[0.0, 0.5, 0.9] {
            for &q in &[0.0, 0.5, 0.9] {
                let weak = LocalFilter::weak(p, p).unwrap();
                let reversal = LocalFilter::reversal(q, q).unwrap();
                let ch = amplitude_damping_kraus(dp(d));
                let pre = weak.apply(&bell_state()).unwrap();
                let damped = apply_two_qubit_channel(&pre.state, &ch, &ch);
                let post = reversal.apply(&damped).unwrap();
                for stage in [&pre.state, &damped, &post.state] {
                    worst_stage = worst_stage.max(stage.mat().hermiticity_defect());
                    worst_stage = worst_stage.max((stage.mat().trace().re - 1.0).abs());
                    worst_stage = worst_stage.max((-stage.spectrum().min()).max(0.0));
                }
            }
        }
    }
    assert!(worst_stage <= 1e-12, "pipeline stage invariant defect {worst_stage}");

    // 0 <= chi <= 2 on 1000 random valid states
    let mut rng = ChaCha8Rng::seed_from_u64(8_001);
    for _ in 0..1000 {
        let rho = common::random_density(&mut rng, 4);
        let chi = holevo_capacity(&rho);
        assert!((-1e-10..=2.0 + 1e-10).contains(&chi), "chi = {chi}");
    }

    // Jacobi vs closed-form X spectra on 1000 random X states
    let mut rng = ChaCha8Rng::seed_from_u64(8_002);
    let mut worst_spec = 0.0f64;
    for _ in 0..1000 {
        let rho = common::random_x_state(&mut rng);
        let iterative = hermitian_spectrum(rho.mat()).unwrap();
        let closed = xstate_spectrum(&rho).unwrap();
        for (a, b) in iterative.values().iter().zip(closed.values()) {
            worst_spec = worst_spec.max((a - b).abs());
        }
    }
    assert!(worst_spec <= 1e-10, "spectra disagree by {worst_spec}");

    println!(
        "PASS criterion 8: completeness {worst_defect:.3e} (<= 1e-14), stage invariants \
         {worst_stage:.3e}, 1000 random capacities in [0, 2], X spectra {worst_spec:.3e} (<= 1e-10)"
    );
}

/// Criterion 9: at strong protection (p = 0.9, q = q*), the protected
/// capacity beats one bit and the unprotected capacity across the damping
/// range. Not asserted at weak protection, where it fails.
#[test]
fn criterion_09_protection_benefit_at_reference_strength() {
    for d in linspace(0.05, 0.95, 19) {
        let q = optimal_reversal_strength(dp(d), 0.9).unwrap().q_star;
        let r = run_plan_b(dp(d), 0.9, q).unwrap();
        let chi1 = chi1_closed_form(dp(d));
        assert!(r.capacity > 1.0, "chi2({d}) = {} <= 1", r.capacity);
        assert!(r.capacity > chi1, "chi2({d}) = {} <= chi1 = {chi1}", r.capacity);
    }
    println!("PASS criterion 9: chi2 > 1 and chi2 > chi1 for p = 0.9, d in 0.05..0.95");
}

/// Criterion 10: Monte Carlo validation at the reference point, one million
/// trials, with a byte-identical rerun under the same seed.
#[test]
fn criterion_10_monte_carlo_validation() {
    let (d, p) = (0.5, 0.9);
    let q = optimal_reversal_strength(dp(d), p).unwrap().q_star;
    let trials = 1_000_000;
    let seed = 42;

    let est = simulate_plan_b(dp(d), p, q, trials, seed).unwrap();
    let t = plan_b_success_prob(dp(d), p, q);
    let sigma = (est.t_hat - t).abs() / est.t_stderr;
    assert!(sigma <= 4.0, "t_hat = {} vs {} ({} sigma)", est.t_hat, t, sigma);

    let (rho2, _) = rho2_closed_form(dp(d), p, q).unwrap();
    let bound = 5.0 / (est.successes as f64).sqrt();
    let state = est.state_hat.as_ref().unwrap();
    let dev = state.mat().max_abs_diff(rho2.mat());
    assert!(dev <= bound, "state deviation {dev} > {bound}");

    let rerun = simulate_plan_b(dp(d), p, q, trials, seed).unwrap();
    assert_eq!(est.successes, rerun.successes);
    assert_eq!(est.t_hat, rerun.t_hat);
    assert_eq!(
        state.mat().max_abs_diff(rerun.state_hat.as_ref().unwrap().mat()),
        0.0
    );

    println!(
        "PASS criterion 10: |t_hat - T| = {sigma:.2} sigma (<= 4), state deviation {dev:.3e} \
         (<= {bound:.3e}), rerun identical"
    );
}

/// Entropy landmarks used throughout: the damped Bell state at d = 0.5 has
/// the frozen X-form spectrum and entropy.
#[test]
fn supporting_frozen_values() {
    let r = run_plan_a(dp(0.5));
    let eigs = r.state.spectrum().values();
    let expected = [0.7285533905932737, 0.125, 0.125, 0.021446609406726214];
    for (got, want) in eigs.iter().zip(expected) {
        assert!((got - want).abs() <= 1e-4, "eig {got} vs {want}");
    }
    assert!((von_neumann_entropy(&r.state) - 1.2017520733857123).abs() <= 1e-3);

    // the maximally mixed encoded average of the Bell input
    let avg = average_encoded_state(&bell_state());
    let quarter = DensityMatrix::new(
        densecode::qmat::ComplexMatrix::<f64>::identity(4).scaled(0.25),
    )
    .unwrap();
    assert!(avg.mat().max_abs_diff(quarter.mat()) <= 1e-14);
}
