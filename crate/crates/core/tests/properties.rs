//! Identities and monotonicity properties of the closed forms.

use num_complex::Complex64;
use proptest::prelude::*;
use sgcoherence::*;

fn params_strategy() -> impl Strategy<Value = ExperimentParams> {
    (-27.0f64..-23.0, -25.0f64..-22.0, -2.0f64..5.0, -8.0f64..-3.0).prop_map(|(m, mu, g, s)| {
        ExperimentParams::with_bell_coefficients(10f64.powf(m), 10f64.powf(mu), 10f64.powf(g), 10f64.powf(s)).unwrap()
    })
}

fn amplitudes_strategy() -> impl Strategy<Value = (Complex64, Complex64)> {
    (
        0.0f64..1.0,
        0.0f64..std::f64::consts::TAU,
        0.0f64..std::f64::consts::TAU,
    )
        .prop_map(|(w, pa, pb)| {
            (
                Complex64::from_polar(w.sqrt(), pa),
                Complex64::from_polar((1.0 - w).sqrt(), pb),
            )
        })
}

/// Time as a multiple of the decoherence time, spanning well before and after it.
fn scaled_time() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), (-4.0f64..2.0).prop_map(|e| 10f64.powf(e))]
}

proptest! {
    #[test]
    fn density_matrix_is_a_state(p in params_strategy(), (a, b) in amplitudes_strategy(), x in scaled_time()) {
        let p = p.with_amplitudes(a, b, AmplitudePolicy::Normalize).unwrap();
        let t = x * decoherence_time(&p);
        let rho = spin_density_matrix(&p, t).unwrap();
        prop_assert!((rho.trace() - 1.0).abs() <= 1e-12);
        let m = rho.to_matrix();
        prop_assert_eq!(m[0][1], m[1][0].conj());
        prop_assert_eq!(m[0][0].im, 0.0);
        prop_assert!(rho.determinant() >= -1e-12);
        prop_assert!(rho.eigenvalues()[0] >= -1e-12);
    }

    #[test]
    fn entropy_and_coherence_are_complementary(p in params_strategy(), x in scaled_time()) {
        let t = x * decoherence_time(&p);
        let c = coherence(&p, t).unwrap();
        let e = linear_entropy(&p, t, EntropyConvention::Paper).unwrap();
        prop_assert!((e + c * c - 1.0).abs() <= f64::EPSILON);
        if x <= 4.0 {
            prop_assert!(c > 0.0);
        }
        prop_assert!(c <= 1.0);
    }

    #[test]
    fn purity_deficit_is_half_at_bell_coefficients(p in params_strategy(), x in scaled_time()) {
        let t = x * decoherence_time(&p);
        let c = coherence(&p, t).unwrap();
        let rho = spin_density_matrix(&p, t).unwrap();
        // Tr ρ² by explicit 2×2 matrix product.
        let m = rho.to_matrix();
        let trace_sq = m[0][0] * m[0][0] + m[0][1] * m[1][0] + m[1][0] * m[0][1] + m[1][1] * m[1][1];
        let deficit = 1.0 - trace_sq.re;
        prop_assert!((deficit - 0.5 * (1.0 - c * c)).abs() <= 4.0 * f64::EPSILON);
        let purity = linear_entropy(&p, t, EntropyConvention::Purity).unwrap();
        prop_assert!((purity - deficit).abs() <= 4.0 * f64::EPSILON);
    }

    #[test]
    fn kinematic_identity(p in params_strategy(), x in scaled_time()) {
        let t = x * p.spreading_time();
        let k = kinematics(&p, t).unwrap();
        prop_assert!(k.transcription_residual() <= 1e-12);
        prop_assert!(k.sigma_t >= p.sigma0());
    }

    #[test]
    fn momentum_ratio_is_linear(p in params_strategy(), x in 1e-6f64..1e3) {
        let t = x * decoherence_time(&p);
        let one = separation_momentum_ratio(&p, t).unwrap();
        let two = separation_momentum_ratio(&p, 2.0 * t).unwrap();
        prop_assert!((two / one - 2.0).abs() <= 1e-15);
    }

    #[test]
    fn closed_form_tau_hits_one_over_e(p in params_strategy()) {
        let tau = decoherence_time(&p);
        let c = coherence(&p, tau).unwrap();
        prop_assert!((c * std::f64::consts::E - 1.0).abs() <= 1e-9);
    }
}

#[test]
fn coherence_and_separation_are_monotone() {
    for p in [
        typical_params(),
        ExperimentParams::with_bell_coefficients(1.8e-25, BOHR_MAGNETON, 1e-3, 1e-7).unwrap(),
        ExperimentParams::with_bell_coefficients(1e-26, 1e-24, 1.0, 1e-6).unwrap(),
    ] {
        let tau = decoherence_time(&p);
        let series = coherence_series(&p, 0.0, 20.0 * tau, 2000, Spacing::Linear).unwrap();
        series.check_invariants().unwrap();
        assert!(series.sep_position.windows(2).all(|w| w[1] >= w[0]));
        assert!(series.sep_momentum.windows(2).all(|w| w[1] > w[0]));
    }
}

#[test]
fn asymptotic_separation_formulas() {
    let p = typical_params();
    let ts = p.spreading_time();
    for x in [1e-9, 1e-6, 1e-3, 1e-2] {
        let t = x * ts;
        let exact = separation_position_ratio(&p, t).unwrap();
        let short = separation_position_approx(&p, t, SeparationRegime::Short).unwrap();
        assert!((short - exact).abs() / exact <= 1e-3, "short, t = {t}");
    }
    for x in [1e2, 1e3, 1e5] {
        let t = x * ts;
        let exact = separation_position_ratio(&p, t).unwrap();
        let long = separation_position_approx(&p, t, SeparationRegime::Long).unwrap();
        assert!((long - exact).abs() / exact <= 1e-3, "long, t = {t}");
    }
}
