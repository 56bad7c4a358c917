//! Separation of the branch packets in position and momentum space.

use crate::error::Result;
use crate::kinematics::kinematics;
use crate::params::{ExperimentParams, HBAR};

/// Which asymptote of the position separation ratio to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeparationRegime {
    /// `σ(t) ≈ σ`: `Δz̄/σ(t) ≈ f t² / (2mσ)`.
    Short,
    /// `σ(t) ≫ σ`: `Δz̄/σ(t) ≈ f σ t / ħ`.
    Long,
}

/// `Δz̄(t)/σ(t)`: distance of each packet centre from the origin in units of
/// the current packet width.
pub fn separation_position_ratio(params: &ExperimentParams, t: f64) -> Result<f64> {
    let k = kinematics(params, t)?;
    Ok(k.delta_z_bar / k.sigma_t)
}

pub fn separation_position_approx(params: &ExperimentParams, t: f64, regime: SeparationRegime) -> Result<f64> {
    crate::error::check_time(t)?;
    let f = params.force();
    let sigma = params.sigma0();
    Ok(match regime {
        SeparationRegime::Short => f * t / (2.0 * params.mass()) * (t / sigma),
        SeparationRegime::Long => (f * t / HBAR) * sigma,
    })
}

/// `Δp(t)/(ħ/2σ) = 2 f σ t / ħ`, linear in `t`.
pub fn separation_momentum_ratio(params: &ExperimentParams, t: f64) -> Result<f64> {
    crate::error::check_time(t)?;
    Ok(2.0 * (params.force() * params.sigma0() / HBAR) * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::BOHR_MAGNETON;

    fn typical() -> ExperimentParams {
        ExperimentParams::with_bell_coefficients(1.8e-25, BOHR_MAGNETON, 1e3, 1e-5).unwrap()
    }

    #[test]
    fn zero_at_start() {
        let p = typical();
        assert_eq!(separation_position_ratio(&p, 0.0).unwrap(), 0.0);
        assert_eq!(separation_momentum_ratio(&p, 0.0).unwrap(), 0.0);
        for r in [SeparationRegime::Short, SeparationRegime::Long] {
            assert_eq!(separation_position_approx(&p, 0.0, r).unwrap(), 0.0);
        }
    }

    #[test]
    fn momentum_ratio_doubles_exactly() {
        let p = typical();
        for t in [1e-15, 3.3e-9, 7.1e-6, 0.4] {
            let one = separation_momentum_ratio(&p, t).unwrap();
            let two = separation_momentum_ratio(&p, 2.0 * t).unwrap();
            assert_eq!(two, 2.0 * one);
        }
    }

    #[test]
    fn position_ratio_is_nondecreasing() {
        let p = ExperimentParams::with_bell_coefficients(1e-26, 1e-26, 1.0, 1e-8).unwrap();
        let ts = p.spreading_time();
        let mut prev = 0.0;
        for i in 0..400 {
            let t = ts * 1e-4 * 1.05f64.powi(i);
            let r = separation_position_ratio(&p, t).unwrap();
            assert!(r >= prev);
            prev = r;
        }
    }

    #[test]
    fn rejects_negative_time() {
        let p = typical();
        assert!(separation_momentum_ratio(&p, -1.0).is_err());
        assert!(separation_position_approx(&p, -1.0, SeparationRegime::Long).is_err());
    }
}
