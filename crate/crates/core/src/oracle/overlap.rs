//! Spin coherence as a direct numerical overlap of the branch packets.

use num_complex::Complex64;

use crate::error::{check_time, Result};
use crate::kinematics::kinematics;
use crate::oracle::quadrature::{integrate_oscillatory, Estimate, QuadratureSpec};
use crate::packet::PacketEvaluator;
use crate::params::{Branch, ExperimentParams, HBAR};

/// `∫ φ₊(z,t) φ₋*(z,t) dz` over `±(Δz̄ + W σ(t))`.
///
/// The chirps `∝ z²` of the two branches are identical and cancel in the
/// product, leaving a phase slope of `(2m/ħt)(Δz + (σ/σ(t))² Δz̄)`, which
/// sets the sampling density.
pub fn overlap_quadrature(params: &ExperimentParams, t: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    check_time(t)?;
    let k = kinematics(params, t)?;
    let half = k.delta_z_bar + spec.window_halfwidth_sigmas * k.sigma_t;
    let wavenumber = if t > 0.0 {
        let width_ratio_sq = (params.sigma0() / k.sigma_t).powi(2);
        2.0 * params.mass() / HBAR * (k.delta_z / t + width_ratio_sq * k.delta_z_bar / t)
    } else {
        0.0
    };

    let plus = PacketEvaluator::new(params, Branch::Plus, t)?;
    let minus = PacketEvaluator::new(params, Branch::Minus, t)?;
    let integrand = |z: f64| -> Complex64 { (plus.log_amplitude(z) + minus.log_amplitude(z).conj()).exp() };
    integrate_oscillatory(integrand, -half, half, wavenumber, k.sigma_t, spec)
}
