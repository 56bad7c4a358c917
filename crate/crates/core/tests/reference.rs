//! Values at the typical configuration checked against 50-digit
//! evaluations of the defining formulas (see reference/reference_values.py).

use approx::assert_relative_eq;
use sgcoherence::*;

// mpmath, 50 significant digits, truncated to 17.
const FORCE: f64 = 9.2740100783e-21;
const DELTA_P_2NS: f64 = 1.85480201566e-29;
const DELTA_Z_2NS: f64 = 1.0304455642555555e-13;
const SIGMA_T_10US: f64 = 1.0000000004290594e-5;
const COHERENCE_2NS: f64 = 0.0020561999830810765;
const SEP_POSITION_2NS: f64 = 1.0304455642555554e-8;
const SEP_POSITION_10US: f64 = 0.25761139095335833;
const CHI: f64 = 1.8024593580339552e+17;
const TAU: f64 = 8.040695198226597e-10;
const TAU1: f64 = 8.040695198226597e-10;
const TAU2: f64 = 2.3430144528280742e-5;
const SEP_POSITION_TAU: f64 = 1.6655292404093296e-9;

#[test]
fn kinematics_at_two_nanoseconds() {
    let p = typical_params();
    assert_relative_eq!(p.force(), FORCE, max_relative = 1e-15);
    let k = kinematics(&p, 2e-9).unwrap();
    assert_relative_eq!(k.delta_p, DELTA_P_2NS, max_relative = 1e-14);
    assert_relative_eq!(k.delta_z, DELTA_Z_2NS, max_relative = 1e-14);
    assert_relative_eq!(k.delta_z_bar, DELTA_Z_2NS, max_relative = 1e-14);
    assert_relative_eq!(k.sigma_t, 1e-5, max_relative = 1e-15);
    let k = kinematics(&p, 1e-5).unwrap();
    assert_relative_eq!(k.sigma_t, SIGMA_T_10US, max_relative = 1e-15);
}

#[test]
fn regime_report_at_typical_values() {
    let r = regime_report(&typical_params()).unwrap();
    assert_relative_eq!(r.chi, CHI, max_relative = 1e-13);
    assert_eq!(r.regime, Regime::MomentumDominated);
    // χ ~ 1e17 makes √(1+χ) − √χ useless in double precision; the
    // rationalized form has to reproduce τ to full precision anyway.
    assert_relative_eq!(r.tau, TAU, max_relative = 1e-13);
    assert_relative_eq!(r.tau1, TAU1, max_relative = 1e-14);
    assert_relative_eq!(r.tau2, TAU2, max_relative = 1e-14);
    assert_relative_eq!(r.sep_position_at_tau, SEP_POSITION_TAU, max_relative = 1e-13);
    assert_relative_eq!(r.sep_momentum_at_tau, std::f64::consts::SQRT_2, max_relative = 1e-13);
}

#[test]
fn coherence_and_separation_at_figure_times() {
    let p = typical_params();
    assert_relative_eq!(coherence(&p, 2e-9).unwrap(), COHERENCE_2NS, max_relative = 1e-13);
    assert_relative_eq!(
        separation_position_ratio(&p, 2e-9).unwrap(),
        SEP_POSITION_2NS,
        max_relative = 1e-14
    );
    assert_relative_eq!(
        separation_position_ratio(&p, 1e-5).unwrap(),
        SEP_POSITION_10US,
        max_relative = 1e-14
    );
}
