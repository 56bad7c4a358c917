//! Decoherence time and the two limiting regimes.

use std::f64::consts::SQRT_2;

use crate::error::Result;
use crate::params::{ExperimentParams, HBAR};
use crate::separation::{separation_momentum_ratio, separation_position_ratio};

/// `χ` above which a configuration is labelled momentum dominated.
pub const MOMENTUM_DOMINATED_THRESHOLD: f64 = 1e3;
/// `χ` below which a configuration is labelled spreading dominated.
pub const SPREADING_DOMINATED_THRESHOLD: f64 = 1e-3;

/// `√χ = 2√2 f m σ³ / ħ²`, grouped as dimensionless factors.
pub fn sqrt_chi(params: &ExperimentParams) -> f64 {
    let sigma = params.sigma0();
    2.0 * SQRT_2 * (params.force() * sigma / HBAR) * (params.mass() * sigma / HBAR) * sigma
}

/// Regime discriminant `χ = 8 f² m² σ⁶ / ħ⁴`.
pub fn chi(params: &ExperimentParams) -> f64 {
    sqrt_chi(params).powi(2)
}

/// Time at which `C(t)` falls to `1/e`.
///
/// Closed form `τ² = (2√2 mσ/f)(√(1+χ) − √χ)`, evaluated as
/// `(2√2 mσ/f) / (√(1+χ) + √χ)` to avoid cancellation for large `χ`.
pub fn decoherence_time(params: &ExperimentParams) -> f64 {
    let s = sqrt_chi(params);
    (tau2(params).powi(2) / (s.hypot(1.0) + s)).sqrt()
}

/// Limit of `τ` for `χ ≫ 1`: `ħ / (√2 f σ)`.
pub fn tau1(params: &ExperimentParams) -> f64 {
    HBAR / (SQRT_2 * params.force() * params.sigma0())
}

/// Limit of `τ` for `χ ≪ 1`: `√(2√2 m σ / f)`.
pub fn tau2(params: &ExperimentParams) -> f64 {
    (2.0 * SQRT_2 * params.mass() * params.sigma0() / params.force()).sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `χ ≫ 1`: momentum separation destroys coherence before the packets spread.
    MomentumDominated,
    /// `χ ≪ 1`: packet spreading has to be accounted for.
    SpreadingDominated,
    Intermediate,
}

impl Regime {
    pub fn classify(chi: f64) -> Self {
        if chi > MOMENTUM_DOMINATED_THRESHOLD {
            Regime::MomentumDominated
        } else if chi < SPREADING_DOMINATED_THRESHOLD {
            Regime::SpreadingDominated
        } else {
            Regime::Intermediate
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Regime::MomentumDominated => "MomentumDominated",
            Regime::SpreadingDominated => "SpreadingDominated",
            Regime::Intermediate => "Intermediate",
        }
    }
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceReport {
    pub chi: f64,
    pub regime: Regime,
    pub tau: f64,
    pub tau1: f64,
    pub tau2: f64,
    /// `Δz̄(τ)/σ(τ)`.
    pub sep_position_at_tau: f64,
    /// `Δp(τ)/(ħ/2σ)`.
    pub sep_momentum_at_tau: f64,
}

pub fn regime_report(params: &ExperimentParams) -> Result<CoherenceReport> {
    let chi = chi(params);
    let tau = decoherence_time(params);
    Ok(CoherenceReport {
        chi,
        regime: Regime::classify(chi),
        tau,
        tau1: tau1(params),
        tau2: tau2(params),
        sep_position_at_tau: separation_position_ratio(params, tau)?,
        sep_momentum_at_tau: separation_momentum_ratio(params, tau)?,
    })
}
