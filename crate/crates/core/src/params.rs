//! Physical inputs of the experiment.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Reduced Planck constant, J·s (CODATA 2018, exact by SI definition).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Bohr magneton, J/T (CODATA 2018). Default magnetic moment of the beam particles.
pub const BOHR_MAGNETON: f64 = 9.274_010_078_3e-24;

/// Tolerance on `|alpha|² + |beta|² = 1`.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// Spin branch, labelled by the σ_z eigenvalue `s = ±1`.
///
/// A branch feels the force `s·f`, so the `Plus` packet accelerates towards +z.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Branch::Plus => "+",
            Branch::Minus => "-",
        }
    }
}

/// How the constructor treats spin amplitudes that are not unit-normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AmplitudePolicy {
    /// Rescale `(alpha, beta)` to unit norm.
    #[default]
    Normalize,
    /// Reject amplitudes whose norm deviates from 1 by more than [`NORM_TOLERANCE`].
    Strict,
}

/// Immutable parameter record for one Stern-Gerlach configuration, in SI units.
///
/// The particle of mass `mass` starts in the product state
/// `(alpha|+> + beta|->) ⊗ |φ>` with `φ` a minimum-uncertainty Gaussian of
/// width `sigma0` centred at the origin. The field gradient couples to the
/// spin through the force `f = magnetic_moment * field_gradient`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExperimentParams {
    mass: f64,
    magnetic_moment: f64,
    field_gradient: f64,
    sigma0: f64,
    alpha: Complex64,
    beta: Complex64,
}

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(Error::invalid(name, format!("must be finite and > 0, got {value}")))
    }
}

impl ExperimentParams {
    pub fn new(
        mass: f64,
        magnetic_moment: f64,
        field_gradient: f64,
        sigma0: f64,
        alpha: Complex64,
        beta: Complex64,
        policy: AmplitudePolicy,
    ) -> Result<Self> {
        let mass = positive("mass", mass)?;
        let magnetic_moment = positive("magnetic_moment", magnetic_moment)?;
        let field_gradient = positive("field_gradient", field_gradient)?;
        let sigma0 = positive("sigma0", sigma0)?;
        let force = magnetic_moment * field_gradient;
        if !(force.is_finite() && force > 0.0) {
            return Err(Error::invalid(
                "field_gradient",
                format!("force magnetic_moment * field_gradient = {force} is not finite and > 0"),
            ));
        }
        for (name, z) in [("alpha", alpha), ("beta", beta)] {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::invalid(name, format!("must be finite, got {z}")));
            }
        }

        let norm_sqr = alpha.norm_sqr() + beta.norm_sqr();
        let (alpha, beta) = match policy {
            _ if norm_sqr == 0.0 => {
                return Err(Error::invalid("alpha", "alpha and beta are both zero"));
            }
            AmplitudePolicy::Strict if (norm_sqr - 1.0).abs() > NORM_TOLERANCE => {
                return Err(Error::invalid(
                    "alpha",
                    format!("|alpha|^2 + |beta|^2 = {norm_sqr}, expected 1"),
                ));
            }
            AmplitudePolicy::Strict => (alpha, beta),
            AmplitudePolicy::Normalize => {
                let norm = norm_sqr.sqrt();
                (alpha / norm, beta / norm)
            }
        };

        Ok(Self {
            mass,
            magnetic_moment,
            field_gradient,
            sigma0,
            alpha,
            beta,
        })
    }

    /// Equal-weight superposition `alpha = beta = 1/√2`, real amplitudes.
    pub fn with_bell_coefficients(mass: f64, magnetic_moment: f64, field_gradient: f64, sigma0: f64) -> Result<Self> {
        let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        Self::new(
            mass,
            magnetic_moment,
            field_gradient,
            sigma0,
            c,
            c,
            AmplitudePolicy::Normalize,
        )
    }

    /// Same configuration with different spin amplitudes.
    pub fn with_amplitudes(&self, alpha: Complex64, beta: Complex64, policy: AmplitudePolicy) -> Result<Self> {
        Self::new(
            self.mass,
            self.magnetic_moment,
            self.field_gradient,
            self.sigma0,
            alpha,
            beta,
            policy,
        )
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn magnetic_moment(&self) -> f64 {
        self.magnetic_moment
    }

    pub fn field_gradient(&self) -> f64 {
        self.field_gradient
    }

    pub fn sigma0(&self) -> f64 {
        self.sigma0
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    pub fn hbar(&self) -> f64 {
        HBAR
    }

    /// Magnitude of the magnetic force on either branch, `f = μ ∂B/∂z`.
    pub fn force(&self) -> f64 {
        self.magnetic_moment * self.field_gradient
    }

    /// Time after which free spreading dominates the packet width, `2mσ²/ħ`.
    pub fn spreading_time(&self) -> f64 {
        2.0 * self.mass * self.sigma0 / HBAR * self.sigma0
    }
}
