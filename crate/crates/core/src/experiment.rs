//! The typical laboratory configuration and sampled curves for export.

use num_complex::Complex64;

use crate::coherence::{coherence, linear_entropy, EntropyConvention};
use crate::decoherence::decoherence_time;
use crate::error::{check_time, Error, Result};
use crate::kinematics::kinematics;
use crate::packet::{packet_density, total_position_density};
use crate::params::{AmplitudePolicy, Branch, ExperimentParams, BOHR_MAGNETON};
use crate::separation::{separation_momentum_ratio, separation_position_ratio};

/// About 108 u: a silver atom, kg.
pub const TYPICAL_MASS: f64 = 1.8e-25;
/// T/m.
pub const TYPICAL_FIELD_GRADIENT: f64 = 1e3;
/// Initial packet width, m.
pub const TYPICAL_SIGMA: f64 = 1e-5;

pub const DEFAULT_SERIES_SAMPLES: usize = 201;
pub const DEFAULT_PROFILE_SAMPLES: usize = 1001;
/// Default series span in units of the decoherence time.
pub const DEFAULT_SERIES_SPAN_TAUS: f64 = 5.0;

/// Typical Stern-Gerlach values: silver atoms, a 10³ T/m gradient, 10 μm
/// packets, one Bohr magneton, equal spin amplitudes.
pub fn typical_params() -> ExperimentParams {
    let c = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
    ExperimentParams::new(
        TYPICAL_MASS,
        BOHR_MAGNETON,
        TYPICAL_FIELD_GRADIENT,
        TYPICAL_SIGMA,
        c,
        c,
        AmplitudePolicy::Normalize,
    )
    .expect("typical parameters are valid")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Spacing {
    #[default]
    Linear,
    Log,
}

impl std::str::FromStr for Spacing {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "linear" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            other => Err(format!("unknown spacing `{other}` (expected linear|log)")),
        }
    }
}

/// Evenly or logarithmically spaced grid including both ends.
pub fn time_grid(t_min: f64, t_max: f64, n: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if !(t_min.is_finite() && t_max.is_finite()) || t_min < 0.0 || t_min >= t_max {
        return Err(Error::domain(format!(
            "need 0 <= t_min < t_max, got [{t_min}, {t_max}]"
        )));
    }
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 samples, got {n}")));
    }
    let last = (n - 1) as f64;
    let mut grid: Vec<f64> = match spacing {
        Spacing::Linear => (0..n).map(|i| t_min + (t_max - t_min) * i as f64 / last).collect(),
        Spacing::Log => {
            if t_min == 0.0 {
                return Err(Error::domain("log spacing needs t_min > 0"));
            }
            let (a, b) = (t_min.ln(), t_max.ln());
            (0..n).map(|i| (a + (b - a) * i as f64 / last).exp()).collect()
        }
    };
    grid[0] = t_min;
    grid[n - 1] = t_max;
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::domain("time grid is not strictly increasing"));
    }
    Ok(grid)
}

/// Coherence and entanglement sampled over time.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    pub coherence: Vec<f64>,
    pub entropy_paper: Vec<f64>,
    pub entropy_purity: Vec<f64>,
    pub sep_position: Vec<f64>,
    pub sep_momentum: Vec<f64>,
}

impl TimeSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Checks equal lengths, strictly increasing times, non-increasing
    /// coherence, non-decreasing entropy and `E_L = 1 − C²` row by row.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        let n = self.times.len();
        let columns = [
            &self.coherence,
            &self.entropy_paper,
            &self.entropy_purity,
            &self.sep_position,
            &self.sep_momentum,
        ];
        if columns.iter().any(|c| c.len() != n) {
            return Err("columns differ in length".into());
        }
        for i in 1..n {
            if self.times[i] <= self.times[i - 1] {
                return Err(format!("times not increasing at row {i}"));
            }
            if self.coherence[i] > self.coherence[i - 1] {
                return Err(format!("coherence increases at row {i}"));
            }
            if self.entropy_paper[i] < self.entropy_paper[i - 1] {
                return Err(format!("entropy decreases at row {i}"));
            }
        }
        for i in 0..n {
            let c = self.coherence[i];
            if (self.entropy_paper[i] - (1.0 - c * c)).abs() > 4.0 * f64::EPSILON {
                return Err(format!("entropy_paper != 1 - coherence^2 at row {i}"));
            }
        }
        Ok(())
    }
}

pub fn coherence_series(
    params: &ExperimentParams,
    t_min: f64,
    t_max: f64,
    n: usize,
    spacing: Spacing,
) -> Result<TimeSeries> {
    let times = time_grid(t_min, t_max, n, spacing)?;
    let mut series = TimeSeries {
        times: Vec::with_capacity(n),
        coherence: Vec::with_capacity(n),
        entropy_paper: Vec::with_capacity(n),
        entropy_purity: Vec::with_capacity(n),
        sep_position: Vec::with_capacity(n),
        sep_momentum: Vec::with_capacity(n),
    };
    for t in times {
        series.coherence.push(coherence(params, t)?);
        series
            .entropy_paper
            .push(linear_entropy(params, t, EntropyConvention::Paper)?);
        series
            .entropy_purity
            .push(linear_entropy(params, t, EntropyConvention::Purity)?);
        series.sep_position.push(separation_position_ratio(params, t)?);
        series.sep_momentum.push(separation_momentum_ratio(params, t)?);
        series.times.push(t);
    }
    Ok(series)
}

/// Linear series over `[0, 5τ]` with the default sample count.
pub fn default_series(params: &ExperimentParams) -> Result<TimeSeries> {
    let t_max = DEFAULT_SERIES_SPAN_TAUS * decoherence_time(params);
    coherence_series(params, 0.0, t_max, DEFAULT_SERIES_SAMPLES, Spacing::Linear)
}

/// Position densities of both branches and their spin-traced sum at one time.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Profile {
    pub t: f64,
    pub z: Vec<f64>,
    pub density_plus: Vec<f64>,
    pub density_minus: Vec<f64>,
    pub density_total: Vec<f64>,
}

impl Profile {
    /// Trapezoidal integral of `density_total` over the grid.
    pub fn total_mass(&self) -> f64 {
        self.z
            .windows(2)
            .zip(self.density_total.windows(2))
            .map(|(z, d)| 0.5 * (z[1] - z[0]) * (d[0] + d[1]))
            .sum()
    }
}

pub fn density_profile(params: &ExperimentParams, t: f64, z_min: f64, z_max: f64, n: usize) -> Result<Profile> {
    check_time(t)?;
    if !(z_min.is_finite() && z_max.is_finite()) || z_min >= z_max {
        return Err(Error::domain(format!("need z_min < z_max, got [{z_min}, {z_max}]")));
    }
    if n < 2 {
        return Err(Error::domain(format!("need at least 2 samples, got {n}")));
    }
    let mut profile = Profile {
        t,
        ..Default::default()
    };
    let last = (n - 1) as f64;
    for i in 0..n {
        let z = if i + 1 == n {
            z_max
        } else {
            z_min + (z_max - z_min) * i as f64 / last
        };
        profile.z.push(z);
        profile.density_plus.push(packet_density(params, Branch::Plus, z, t)?);
        profile.density_minus.push(packet_density(params, Branch::Minus, z, t)?);
        profile.density_total.push(total_position_density(params, z, t)?);
    }
    Ok(profile)
}

/// `±(Δz̄(t) + 6σ(t))`: both packets with negligible tail mass outside.
pub fn default_profile_window(params: &ExperimentParams, t: f64) -> Result<(f64, f64)> {
    let k = kinematics(params, t)?;
    let half = k.delta_z_bar + 6.0 * k.sigma_t;
    Ok((-half, half))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn typical_values() {
        let p = typical_params();
        assert_eq!(p.mass(), 1.8e-25);
        assert_eq!(p.field_gradient(), 1e3);
        assert_eq!(p.sigma0(), 1e-5);
        assert_eq!(p.magnetic_moment(), BOHR_MAGNETON);
        assert_eq!(p.alpha(), p.beta());
    }

    #[test]
    fn two_point_series_from_zero() {
        let s = coherence_series(&typical_params(), 0.0, 1e-9, 2, Spacing::Linear).unwrap();
        assert_eq!(s.coherence[0], 1.0);
        assert_eq!(s.entropy_paper[0], 0.0);
        s.check_invariants().unwrap();
    }

    #[test]
    fn invalid_grids() {
        let p = typical_params();
        assert!(coherence_series(&p, 1e-9, 1e-9, 10, Spacing::Linear).is_err());
        assert!(coherence_series(&p, 0.0, 1e-9, 1, Spacing::Linear).is_err());
        assert!(coherence_series(&p, 0.0, 1e-9, 10, Spacing::Log).is_err());
        assert!(coherence_series(&p, -1.0, 1e-9, 10, Spacing::Linear).is_err());
        assert!(density_profile(&p, 0.0, 1.0, -1.0, 10).is_err());
        assert!(density_profile(&p, 0.0, -1.0, 1.0, 1).is_err());
        assert!(density_profile(&p, -1.0, -1.0, 1.0, 10).is_err());
    }

    #[test]
    fn log_grid_endpoints_are_exact() {
        let g = time_grid(1e-12, 1e-4, 50, Spacing::Log).unwrap();
        assert_eq!((g[0], g[49]), (1e-12, 1e-4));
        assert!((g[1] / g[0] - (1e8f64).powf(1.0 / 49.0)).abs() < 1e-12);
    }

    #[test]
    fn branches_coincide_at_start() {
        let p = typical_params();
        let (lo, hi) = default_profile_window(&p, 0.0).unwrap();
        assert!((hi - 6e-5).abs() < 1e-19 && lo == -hi);
        let prof = density_profile(&p, 0.0, lo, hi, 101).unwrap();
        assert_eq!(prof.density_plus, prof.density_minus);
    }
}
