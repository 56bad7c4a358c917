//! Branch packets propagated from the initial Gaussian through the
//! constant-force propagator, independently of the closed-form packets.
//!
//! For spin eigenvalue `s` the branch Hamiltonian is `p²/2m − s f z`, whose
//! propagator is
//!
//! ```text
//! K_s(z,t;z',0) = √(m/2πiħt) exp{(i/ħ)[ (m/2t)(z−z')² + (m/t)Δz_s(z−z')
//!                                      + Δp_s z' − f²t³/24m ]}
//! ```
//!
//! with `Δz_s = s f t²/2m` and `Δp_s = s f t`. The convolution
//! `∫ K_s φ(z',0) dz'` has an exponent quadratic in `z'`, so the integrand is
//! entire and decays in the whole sector between the real axis and its
//! steepest-descent direction. [`propagate_via_kernel`] moves the contour to
//! the straight steepest-descent line through the numerically located saddle,
//! where the integrand is a non-oscillating bump; the real-axis route
//! [`propagate_via_kernel_real_axis`] resolves the chirp directly and is only
//! practical when `m σ²/ħt` is modest.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{check_time, Error, Result};
use crate::kinematics::kinematics;
use crate::oracle::quadrature::{integrate_adaptive, integrate_oscillatory, Estimate, QuadratureSpec};
use crate::packet::packet_amplitude;
use crate::params::{Branch, ExperimentParams, HBAR};

/// A propagated amplitude, m^(-1/2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSample {
    pub z: f64,
    pub value: Complex64,
}

/// Exponent of `K_s(z,t;z',0) φ(z',0)` as an analytic function of `z'`, with
/// its first two derivatives.
struct ConvolutionExponent {
    z: f64,
    /// `m/ħt`
    chirp: f64,
    /// `(m/ħ) Δz_s / t`
    drift: f64,
    /// `Δp_s / ħ`
    kick: f64,
    /// `f² t³ / 24 m ħ`
    cubic: f64,
    inv_four_sigma_sq: f64,
    log_prefactor: Complex64,
}

impl ConvolutionExponent {
    fn new(params: &ExperimentParams, branch: Branch, z: f64, t: f64) -> Self {
        let s = branch.sign();
        let (m, f, sigma) = (params.mass(), params.force(), params.sigma0());
        let chirp = m / HBAR / t;
        // √(m/2πiħt) (2πσ²)^(-1/4)
        let log_prefactor = Complex64::new(
            0.5 * (chirp / (2.0 * PI)).ln() - 0.25 * (2.0 * PI * sigma * sigma).ln(),
            -PI / 4.0,
        );
        Self {
            z,
            chirp,
            drift: m / HBAR * (s * f * t / (2.0 * m)),
            kick: s * f * t / HBAR,
            cubic: f * t / HBAR * (f * t / m) * t / 24.0,
            inv_four_sigma_sq: 0.25 / (sigma * sigma),
            log_prefactor,
        }
    }

    fn value(&self, zp: Complex64) -> Complex64 {
        let d = self.z - zp;
        let phase = 0.5 * self.chirp * d * d + self.drift * d + self.kick * zp - self.cubic;
        self.log_prefactor + Complex64::i() * phase - zp * zp * self.inv_four_sigma_sq
    }

    fn first_derivative(&self, zp: Complex64) -> Complex64 {
        let d = self.z - zp;
        Complex64::i() * (-self.chirp * d - self.drift + self.kick) - zp * 2.0 * self.inv_four_sigma_sq
    }

    fn second_derivative(&self) -> Complex64 {
        Complex64::new(-2.0 * self.inv_four_sigma_sq, self.chirp)
    }
}

/// Width of the steepest-descent segment, in standard deviations of the
/// Gaussian bump along it.
fn path_halfwidth(spec: &QuadratureSpec) -> f64 {
    spec.window_halfwidth_sigmas
}

fn propagate_point(
    params: &ExperimentParams,
    branch: Branch,
    z: f64,
    t: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    let exponent = ConvolutionExponent::new(params, branch, z, t);
    let curvature = exponent.second_derivative();

    // The exponent is quadratic, so Newton's method lands on the saddle in
    // one step; the second step absorbs rounding.
    let mut saddle = Complex64::new(z, 0.0);
    for _ in 0..2 {
        saddle -= exponent.first_derivative(saddle) / curvature;
    }

    // Direction along which `curvature · w²` is real and negative.
    let direction = Complex64::from_polar(1.0, 0.5 * (PI - curvature.arg()));
    let half = path_halfwidth(spec) / curvature.norm().sqrt();
    let integrand = |s: f64| (exponent.value(saddle + direction * s)).exp() * direction;
    integrate_adaptive(integrand, -half, half, 8, spec.abs_tol, spec.max_subdivisions)
}

/// Propagated branch amplitude on `z_grid` via steepest-descent contour quadrature.
pub fn propagate_via_kernel(
    params: &ExperimentParams,
    branch: Branch,
    z_grid: &[f64],
    t: f64,
    spec: &QuadratureSpec,
) -> Result<Vec<KernelSample>> {
    check_kernel_time(t)?;
    spec.validate()?;
    z_grid
        .iter()
        .map(|&z| {
            let est = propagate_point(params, branch, z, t, spec)?;
            Ok(KernelSample { z, value: est.value })
        })
        .collect()
}

/// Propagated branch amplitude on `z_grid` by integrating along the real
/// `z'` axis over `±W σ` with every oscillation of the kernel resolved.
pub fn propagate_via_kernel_real_axis(
    params: &ExperimentParams,
    branch: Branch,
    z_grid: &[f64],
    t: f64,
    spec: &QuadratureSpec,
) -> Result<Vec<KernelSample>> {
    check_kernel_time(t)?;
    spec.validate()?;
    let sigma = params.sigma0();
    let half = spec.window_halfwidth_sigmas * sigma;
    z_grid
        .iter()
        .map(|&z| {
            let exponent = ConvolutionExponent::new(params, branch, z, t);
            let wavenumber = exponent.chirp * (z.abs() + half) + exponent.drift.abs() + exponent.kick.abs();
            let est = integrate_oscillatory(
                |zp: f64| exponent.value(Complex64::new(zp, 0.0)).exp(),
                -half,
                half,
                wavenumber,
                sigma,
                spec,
            )?;
            Ok(KernelSample { z, value: est.value })
        })
        .collect()
}

/// `∫ |ψ(z,t)|² dz` of the kernel-propagated branch over `±(Δz̄ + W σ(t))`.
pub fn kernel_norm(params: &ExperimentParams, branch: Branch, t: f64, spec: &QuadratureSpec) -> Result<Estimate> {
    check_kernel_time(t)?;
    spec.validate()?;
    let k = kinematics(params, t)?;
    let half = k.delta_z_bar + spec.window_halfwidth_sigmas * k.sigma_t;
    let mut failure = None;
    let integrand = |z: f64| match propagate_point(params, branch, z, t, spec) {
        Ok(est) => Complex64::new(est.value.norm_sqr(), 0.0),
        Err(e) => {
            failure.get_or_insert(e);
            Complex64::new(f64::NAN, 0.0)
        }
    };
    let panels = (2.0 * half / k.sigma_t).ceil() as usize;
    let result = integrate_adaptive(integrand, -half, half, panels, spec.abs_tol, spec.max_subdivisions);
    match failure {
        Some(e) => Err(e),
        None => result,
    }
}

fn check_kernel_time(t: f64) -> Result<()> {
    check_time(t)?;
    if t == 0.0 {
        return Err(Error::domain("the propagator is singular at t = 0"));
    }
    Ok(())
}

/// Agreement between kernel-propagated samples and the closed-form packet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelComparison {
    /// Largest `| |ψ|² − ρ | / ρ` over samples with `ρ > floor · peak`.
    pub max_density_rel_error: f64,
    /// Largest deviation of `arg(ψ / φ)` from its value at the sample
    /// closest to the packet centre, over the same samples, rad.
    pub max_phase_deviation: f64,
    /// The common phase `arg(ψ / φ)` at the packet centre.
    pub global_phase: f64,
    /// Grid point where `|ψ|` peaks.
    pub argmax_z: f64,
    pub compared: usize,
}

pub fn compare_with_closed_form(
    params: &ExperimentParams,
    branch: Branch,
    t: f64,
    samples: &[KernelSample],
    density_floor: f64,
) -> Result<KernelComparison> {
    if samples.is_empty() {
        return Err(Error::domain("no kernel samples to compare"));
    }
    let k = kinematics(params, t)?;
    let centre = branch.sign() * k.delta_z_bar;
    let closed: Vec<Complex64> = samples
        .iter()
        .map(|s| packet_amplitude(params, branch, s.z, t))
        .collect::<Result<_>>()?;
    let peak = closed.iter().map(|c| c.norm_sqr()).fold(0.0, f64::max);

    let reference = samples
        .iter()
        .enumerate()
        .min_by(|a, b| (a.1.z - centre).abs().total_cmp(&(b.1.z - centre).abs()))
        .map(|(i, _)| i)
        .expect("non-empty");
    let global_phase = (samples[reference].value / closed[reference]).arg();

    let mut max_density_rel_error: f64 = 0.0;
    let mut max_phase_deviation: f64 = 0.0;
    let mut compared = 0;
    for (s, c) in samples.iter().zip(&closed) {
        let rho = c.norm_sqr();
        if rho <= density_floor * peak {
            continue;
        }
        compared += 1;
        max_density_rel_error = max_density_rel_error.max((s.value.norm_sqr() - rho).abs() / rho);
        let deviation = (s.value / c * Complex64::from_polar(1.0, -global_phase)).arg();
        max_phase_deviation = max_phase_deviation.max(deviation.abs());
    }
    let argmax_z = samples
        .iter()
        .max_by(|a, b| a.value.norm().total_cmp(&b.value.norm()))
        .map(|s| s.z)
        .expect("non-empty");

    Ok(KernelComparison {
        max_density_rel_error,
        max_phase_deviation,
        global_phase,
        argmax_z,
        compared,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::BOHR_MAGNETON;

    fn grid(centre: f64, half: f64, n: usize) -> Vec<f64> {
        (0..n)
            .map(|i| centre - half + 2.0 * half * i as f64 / (n - 1) as f64)
            .collect()
    }

    #[test]
    fn rejects_zero_time() {
        let p = ExperimentParams::with_bell_coefficients(1.8e-25, BOHR_MAGNETON, 1e3, 1e-5).unwrap();
        let spec = QuadratureSpec::default();
        assert!(propagate_via_kernel(&p, Branch::Plus, &[0.0], 0.0, &spec).is_err());
        assert!(kernel_norm(&p, Branch::Plus, -1.0, &spec).is_err());
    }

    #[test]
    fn contour_and_real_axis_routes_agree() {
        // m = f = ħ, σ = 1: the kernel chirp across the initial packet spans
        // only a few hundred radians, so the real axis is tractable.
        let p = ExperimentParams::with_bell_coefficients(HBAR, HBAR, 1.0, 1.0).unwrap();
        let spec = QuadratureSpec::default();
        for t in [0.5, 3.0] {
            let k = kinematics(&p, t).unwrap();
            for branch in [Branch::Plus, Branch::Minus] {
                let zs = grid(branch.sign() * k.delta_z_bar, 4.0 * k.sigma_t, 41);
                let contour = propagate_via_kernel(&p, branch, &zs, t, &spec).unwrap();
                let real = propagate_via_kernel_real_axis(&p, branch, &zs, t, &spec).unwrap();
                for (a, b) in contour.iter().zip(&real) {
                    assert!(
                        (a.value - b.value).norm() <= 1e-8,
                        "t = {t}, z = {}: {} vs {}",
                        a.z,
                        a.value,
                        b.value
                    );
                }
            }
        }
    }

    #[test]
    fn plus_branch_moves_up() {
        let p = ExperimentParams::with_bell_coefficients(1.8e-25, BOHR_MAGNETON, 1e3, 1e-5).unwrap();
        let t = 1e-5;
        let k = kinematics(&p, t).unwrap();
        let zs = grid(0.0, k.delta_z_bar + 5.0 * k.sigma_t, 801);
        let step = zs[1] - zs[0];
        for branch in [Branch::Plus, Branch::Minus] {
            let samples = propagate_via_kernel(&p, branch, &zs, t, &QuadratureSpec::default()).unwrap();
            let cmp = compare_with_closed_form(&p, branch, t, &samples, 1e-3).unwrap();
            assert!((cmp.argmax_z - branch.sign() * k.delta_z_bar).abs() <= step);
        }
    }
}
