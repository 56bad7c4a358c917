//! Spin coherence, the reduced spin density matrix and linear entropy.

use num_complex::Complex64;

use crate::error::Result;
use crate::kinematics::kinematics;
use crate::params::{ExperimentParams, HBAR};

/// The two contributions to the decay exponent of the spin coherence,
/// `C(t) = exp(−momentum − position)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoherenceExponents {
    /// Momentum-space separation in units of the momentum spread `ħ/2σ`,
    /// dressed by the width factor: `½[½ (Δp/(ħ/2σ)) (σ/σ(t) + σ(t)/σ)]²`.
    pub momentum: f64,
    /// Position-space separation in units of the packet width: `½(Δz̄/σ(t))²`.
    pub position: f64,
}

impl CoherenceExponents {
    pub fn total(&self) -> f64 {
        self.momentum + self.position
    }
}

pub fn coherence_exponents(params: &ExperimentParams, t: f64) -> Result<CoherenceExponents> {
    let k = kinematics(params, t)?;
    let sigma = params.sigma0();
    let momentum_ratio = 2.0 * (k.delta_p / HBAR) * sigma;
    let width_factor = sigma / k.sigma_t + k.sigma_t / sigma;
    let dressed = 0.5 * momentum_ratio * width_factor;
    let position_ratio = k.delta_z_bar / k.sigma_t;
    Ok(CoherenceExponents {
        momentum: 0.5 * dressed * dressed,
        position: 0.5 * position_ratio * position_ratio,
    })
}

/// Normalized overlap `C(t) = |∫ φ₊ φ₋* dz|` of the two branch packets.
///
/// Equals 1 at `t = 0` and decays monotonically; the off-diagonal element of
/// the spin density matrix is `alpha · conj(beta) · C(t)`.
pub fn coherence(params: &ExperimentParams, t: f64) -> Result<f64> {
    Ok((-coherence_exponents(params, t)?.total()).exp())
}

/// 2×2 reduced density operator of the spin after tracing out position.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinDensityMatrix {
    pub rho_pp: f64,
    pub rho_mm: f64,
    /// `<+|ρ|->`; the lower-left element is its conjugate.
    pub rho_pm: Complex64,
}

impl SpinDensityMatrix {
    pub fn rho_mp(&self) -> Complex64 {
        self.rho_pm.conj()
    }

    pub fn trace(&self) -> f64 {
        self.rho_pp + self.rho_mm
    }

    pub fn determinant(&self) -> f64 {
        self.rho_pp * self.rho_mm - self.rho_pm.norm_sqr()
    }

    /// `Tr ρ²`.
    pub fn purity(&self) -> f64 {
        self.rho_pp * self.rho_pp + self.rho_mm * self.rho_mm + 2.0 * self.rho_pm.norm_sqr()
    }

    /// Eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> [f64; 2] {
        let half_trace = 0.5 * self.trace();
        let half_gap = (0.5 * (self.rho_pp - self.rho_mm)).hypot(self.rho_pm.norm());
        [half_trace - half_gap, half_trace + half_gap]
    }

    pub fn to_matrix(&self) -> [[Complex64; 2]; 2] {
        [
            [Complex64::new(self.rho_pp, 0.0), self.rho_pm],
            [self.rho_mp(), Complex64::new(self.rho_mm, 0.0)],
        ]
    }
}

pub fn spin_density_matrix(params: &ExperimentParams, t: f64) -> Result<SpinDensityMatrix> {
    let c = coherence(params, t)?;
    let (alpha, beta) = (params.alpha(), params.beta());
    Ok(SpinDensityMatrix {
        rho_pp: alpha.norm_sqr(),
        rho_mm: beta.norm_sqr(),
        rho_pm: alpha * beta.conj() * c,
    })
}

/// Which linear-entropy normalization to report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EntropyConvention {
    /// `1 − C(t)²`: reaches 1 once the branches are orthogonal.
    #[default]
    Paper,
    /// `1 − Tr ρ²` of the spin: at most 1/2 for a qubit.
    Purity,
}

impl std::str::FromStr for EntropyConvention {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "paper" => Ok(Self::Paper),
            "purity" => Ok(Self::Purity),
            other => Err(format!("unknown entropy convention `{other}` (expected paper|purity)")),
        }
    }
}

impl std::fmt::Display for EntropyConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Paper => "paper",
            Self::Purity => "purity",
        })
    }
}

/// Linear entropy of the spin subsystem, a measure of spin-position entanglement.
pub fn linear_entropy(params: &ExperimentParams, t: f64, convention: EntropyConvention) -> Result<f64> {
    match convention {
        EntropyConvention::Paper => {
            let c = coherence(params, t)?;
            Ok(1.0 - c * c)
        }
        EntropyConvention::Purity => {
            // 1 − Tr ρ² = 2 ρ₊₊ ρ₋₋ (1 − C²) for unit trace, without the
            // cancellation that can push 1 − Tr ρ² below zero.
            let rho = spin_density_matrix(params, t)?;
            let c = coherence(params, t)?;
            Ok(2.0 * rho.rho_pp * rho.rho_mm * (1.0 - c * c))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{AmplitudePolicy, BOHR_MAGNETON};
    use approx::assert_relative_eq;

    fn typical() -> ExperimentParams {
        ExperimentParams::with_bell_coefficients(1.8e-25, BOHR_MAGNETON, 1e3, 1e-5).unwrap()
    }

    #[test]
    fn starts_fully_coherent() {
        let p = typical();
        assert_eq!(coherence(&p, 0.0).unwrap(), 1.0);
        let rho = spin_density_matrix(&p, 0.0).unwrap();
        for row in rho.to_matrix() {
            for x in row {
                assert_relative_eq!(x.re, 0.5, max_relative = 1e-15);
                assert_eq!(x.im, 0.0);
            }
        }
        assert_relative_eq!(rho.purity(), 1.0, max_relative = 1e-15);
        assert_eq!(linear_entropy(&p, 0.0, EntropyConvention::Paper).unwrap(), 0.0);
    }

    #[test]
    fn long_times_fully_mixed() {
        let p = typical();
        let rho = spin_density_matrix(&p, 1e-3).unwrap();
        assert_eq!(rho.rho_pm, Complex64::new(0.0, 0.0));
        assert_relative_eq!(rho.rho_pp, 0.5, max_relative = 1e-15);
        assert_relative_eq!(rho.rho_mm, 0.5, max_relative = 1e-15);
        assert_eq!(linear_entropy(&p, 1e-3, EntropyConvention::Paper).unwrap(), 1.0);
        assert_relative_eq!(
            linear_entropy(&p, 1e-3, EntropyConvention::Purity).unwrap(),
            0.5,
            max_relative = 1e-15
        );
    }

    #[test]
    fn separable_state_stays_pure() {
        let p = typical()
            .with_amplitudes(
                Complex64::new(1.0, 0.0),
                Complex64::new(0.0, 0.0),
                AmplitudePolicy::Strict,
            )
            .unwrap();
        for t in [0.0, 1e-9, 1e-6] {
            let rho = spin_density_matrix(&p, t).unwrap();
            assert_eq!(
                (rho.rho_pp, rho.rho_mm, rho.rho_pm),
                (1.0, 0.0, Complex64::new(0.0, 0.0))
            );
            assert_eq!(linear_entropy(&p, t, EntropyConvention::Purity).unwrap(), 0.0);
        }
    }

    #[test]
    fn momentum_term_is_one_at_tau1() {
        // τ₁ = ħ/(√2 f σ) neglects spreading, so the momentum term alone gives e^{-1}.
        let p = typical();
        let tau1 = HBAR / (std::f64::consts::SQRT_2 * p.force() * p.sigma0());
        let e = coherence_exponents(&p, tau1).unwrap();
        assert_relative_eq!(e.momentum, 1.0, max_relative = 1e-12);
        assert!(e.position < 1e-17);
    }

    #[test]
    fn parses_convention() {
        assert_eq!("paper".parse::<EntropyConvention>().unwrap(), EntropyConvention::Paper);
        assert_eq!(
            "purity".parse::<EntropyConvention>().unwrap(),
            EntropyConvention::Purity
        );
        assert!("vonneumann".parse::<EntropyConvention>().is_err());
    }
}
