//! Classical kinematics shared by both spin branches.

use crate::error::{check_time, Result};
use crate::params::{ExperimentParams, HBAR};

/// Time-dependent classical quantities of one branch (magnitudes; the
/// `Minus` branch carries the opposite sign).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinematicState {
    /// Time since the particle entered the field, s.
    pub t: f64,
    /// Momentum transferred by the force, `f t`.
    pub delta_p: f64,
    /// Displacement under constant force, `f t² / 2m`.
    pub delta_z: f64,
    /// Packet-centre displacement, `t Δp / m − Δz`. Equal to `delta_z`.
    pub delta_z_bar: f64,
    /// Packet width, `√(σ² + (ħt/2mσ)²)`.
    pub sigma_t: f64,
}

impl KinematicState {
    /// Relative mismatch between `delta_z_bar` and `delta_z`.
    pub fn transcription_residual(&self) -> f64 {
        if self.delta_z == 0.0 {
            return self.delta_z_bar.abs();
        }
        ((self.delta_z_bar - self.delta_z) / self.delta_z).abs()
    }
}

/// Packet width `σ(t)`. Written as `σ √(1 + (t/t_s)²)` with `t_s = 2mσ²/ħ`
/// so no intermediate leaves the double range.
pub fn packet_width(params: &ExperimentParams, t: f64) -> f64 {
    let sigma = params.sigma0();
    let spread = t * HBAR / (2.0 * params.mass() * sigma) / sigma;
    sigma * spread.hypot(1.0)
}

pub fn kinematics(params: &ExperimentParams, t: f64) -> Result<KinematicState> {
    check_time(t)?;
    let f = params.force();
    let m = params.mass();
    let delta_p = f * t;
    let delta_z = f * t * t / (2.0 * m);
    let delta_z_bar = t * delta_p / m - delta_z;
    let state = KinematicState {
        t,
        delta_p,
        delta_z,
        delta_z_bar,
        sigma_t: packet_width(params, t),
    };
    debug_assert!(
        state.transcription_residual() <= 1e-12,
        "delta_z_bar != delta_z at t = {t}"
    );
    Ok(state)
}
