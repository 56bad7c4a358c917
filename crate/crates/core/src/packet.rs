//! Evolved branch wavepackets and their position densities.
//!
//! Each spin branch carries a Gaussian packet whose centre follows the
//! classical trajectory `±Δz̄(t)` and whose width spreads freely as `σ(t)`.
//! The branch-independent global phase θ(t) is set to zero and the cubic
//! phase is taken as `−f²t³/(24mħ)`; neither affects any density or overlap.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{check_time, Result};
use crate::kinematics::kinematics;
use crate::params::{Branch, ExperimentParams, HBAR};

/// Value of a branch wavefunction, units m^(-1/2).
pub type ComplexAmplitude = Complex64;

/// Initial minimum-uncertainty packet `(2πσ²)^(-1/4) exp(−z²/4σ²)`.
pub fn initial_amplitude(params: &ExperimentParams, z: f64) -> f64 {
    let sigma = params.sigma0();
    let u = z / sigma;
    (2.0 * PI).powf(-0.25) / sigma.sqrt() * (-0.25 * u * u).exp()
}

/// Coefficients of `ln φ±(z, t)` at a fixed time, for repeated evaluation.
///
/// The `1/t` phase terms are regrouped so that every coefficient stays finite
/// as `t → 0`: the `m z²/2ħt` chirp is combined with its width-dependent
/// counterpart into `(t/t_s)(z/σ(t))²/4`, `t_s = 2mσ²/ħ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PacketEvaluator {
    centre: f64,
    inv_sigma_t: f64,
    log_norm: f64,
    /// Coefficient of `(z/σ(t))²` in the phase.
    chirp: f64,
    /// Coefficient of `z` in the phase, 1/m.
    wavenumber: f64,
    /// `z`-independent phase.
    offset: f64,
}

impl PacketEvaluator {
    pub fn new(params: &ExperimentParams, branch: Branch, t: f64) -> Result<Self> {
        check_time(t)?;
        let k = kinematics(params, t)?;
        let log_norm = -0.5 * (k.sigma_t * (2.0 * PI).sqrt()).ln();
        if t == 0.0 {
            return Ok(Self {
                centre: 0.0,
                inv_sigma_t: 1.0 / k.sigma_t,
                log_norm,
                chirp: 0.0,
                wavenumber: 0.0,
                offset: 0.0,
            });
        }
        let s = branch.sign();
        let m_over_hbar = params.mass() / HBAR;
        let width_ratio_sq = (params.sigma0() / k.sigma_t).powi(2);
        let wavenumber = s * m_over_hbar * (k.delta_z / t + width_ratio_sq * (k.delta_z_bar / t));
        let offset = -0.5 * m_over_hbar * width_ratio_sq * (k.delta_z_bar / t) * k.delta_z_bar;
        let cubic = -params.force() * t / HBAR * (params.force() * t / params.mass()) * t / 24.0;
        Ok(Self {
            centre: s * k.delta_z_bar,
            inv_sigma_t: 1.0 / k.sigma_t,
            log_norm,
            chirp: 0.25 * (t / params.spreading_time()),
            wavenumber,
            offset: offset + cubic,
        })
    }

    /// `ln φ±(z, t)`, with the phase as imaginary part.
    pub fn log_amplitude(&self, z: f64) -> Complex64 {
        let u = (z - self.centre) * self.inv_sigma_t;
        let w = z * self.inv_sigma_t;
        Complex64::new(
            self.log_norm - 0.25 * u * u,
            self.chirp * w * w + self.wavenumber * z + self.offset,
        )
    }

    pub fn amplitude(&self, z: f64) -> ComplexAmplitude {
        self.log_amplitude(z).exp()
    }
}

/// Branch wavefunction `φ±(z, t)`. At `t = 0` the initial packet is returned
/// exactly.
pub fn packet_amplitude(params: &ExperimentParams, branch: Branch, z: f64, t: f64) -> Result<ComplexAmplitude> {
    check_time(t)?;
    if t == 0.0 {
        return Ok(Complex64::new(initial_amplitude(params, z), 0.0));
    }
    Ok(PacketEvaluator::new(params, branch, t)?.amplitude(z))
}

/// Position density `|φ±(z, t)|²`: a normalized Gaussian of mean `±Δz̄(t)`
/// and standard deviation `σ(t)`.
pub fn packet_density(params: &ExperimentParams, branch: Branch, z: f64, t: f64) -> Result<f64> {
    let k = kinematics(params, t)?;
    let u = (z - branch.sign() * k.delta_z_bar) / k.sigma_t;
    Ok((-0.5 * u * u).exp() / ((2.0 * PI).sqrt() * k.sigma_t))
}

/// Position density after tracing out the spin.
///
/// The spin states of the two branches are orthogonal, so the reduced
/// position density matrix is diagonal in the branch label and no
/// interference term appears.
pub fn total_position_density(params: &ExperimentParams, z: f64, t: f64) -> Result<f64> {
    let plus = packet_density(params, Branch::Plus, z, t)?;
    let minus = packet_density(params, Branch::Minus, z, t)?;
    Ok(params.alpha().norm_sqr() * plus + params.beta().norm_sqr() * minus)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kinematics::kinematics;
    use crate::params::{AmplitudePolicy, BOHR_MAGNETON};
    use approx::assert_relative_eq;

    fn typical() -> ExperimentParams {
        ExperimentParams::with_bell_coefficients(1.8e-25, BOHR_MAGNETON, 1e3, 1e-5).unwrap()
    }

    #[test]
    fn initial_packet_at_origin() {
        let p = typical();
        let a = packet_amplitude(&p, Branch::Plus, 0.0, 0.0).unwrap();
        assert_eq!(a.im, 0.0);
        assert_relative_eq!(a.re, (2.0 * PI * 1e-10f64).powf(-0.25), max_relative = 1e-14);
    }

    #[test]
    fn modulus_at_centre() {
        let p = typical();
        for t in [1e-12, 2e-9, 1e-6, 1e-5, 1e-4, 1.0] {
            let k = kinematics(&p, t).unwrap();
            for branch in [Branch::Plus, Branch::Minus] {
                let a = packet_amplitude(&p, branch, branch.sign() * k.delta_z_bar, t).unwrap();
                let expected = 1.0 / ((2.0 * PI).sqrt() * k.sigma_t);
                assert_relative_eq!(a.norm_sqr(), expected, max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn density_peak_and_one_sigma_point() {
        let p = typical();
        let t = 1e-5;
        let k = kinematics(&p, t).unwrap();
        let peak = 1.0 / ((2.0 * PI).sqrt() * k.sigma_t);
        for branch in [Branch::Plus, Branch::Minus] {
            let c = branch.sign() * k.delta_z_bar;
            assert_relative_eq!(packet_density(&p, branch, c, t).unwrap(), peak, max_relative = 1e-15);
            assert_relative_eq!(
                packet_density(&p, branch, c + k.sigma_t, t).unwrap(),
                (-0.5f64).exp() * peak,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn density_is_modulus_squared_on_grid() {
        let p = typical();
        let t = 1e-6;
        let k = kinematics(&p, t).unwrap();
        let half = k.delta_z_bar + 8.0 * k.sigma_t;
        for i in 0..1000 {
            let z = -half + 2.0 * half * i as f64 / 999.0;
            for branch in [Branch::Plus, Branch::Minus] {
                let direct = packet_amplitude(&p, branch, z, t).unwrap().norm_sqr();
                let density = packet_density(&p, branch, z, t).unwrap();
                assert!(
                    (direct - density).abs() <= 1e-13 * density.max(1e-300),
                    "z = {z}: {direct} vs {density}"
                );
            }
        }
    }

    #[test]
    fn branches_coincide_at_start() {
        let p = typical();
        for z in [-3e-5, -1e-6, 0.0, 2e-5] {
            let plus = packet_amplitude(&p, Branch::Plus, z, 0.0).unwrap();
            let minus = packet_amplitude(&p, Branch::Minus, z, 0.0).unwrap();
            assert_eq!(plus, minus);
            let total = total_position_density(&p, z, 0.0).unwrap();
            assert_relative_eq!(total, initial_amplitude(&p, z).powi(2), max_relative = 1e-14);
        }
    }

    #[test]
    fn separable_state_keeps_one_branch() {
        let p = typical()
            .with_amplitudes(
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                AmplitudePolicy::Strict,
            )
            .unwrap();
        for z in [-1e-5, 0.0, 3e-6, 4e-5] {
            assert_eq!(
                total_position_density(&p, z, 1e-5).unwrap(),
                packet_density(&p, Branch::Plus, z, 1e-5).unwrap()
            );
        }
    }

    #[test]
    fn amplitude_is_finite_for_extreme_times() {
        let p = typical();
        for t in [1e-300, 1e-20, 1e3] {
            let a = packet_amplitude(&p, Branch::Minus, 1e-6, t).unwrap();
            assert!(a.re.is_finite() && a.im.is_finite());
        }
    }
}
