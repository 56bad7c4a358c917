//! Adaptive Gauss-Kronrod (10/21) quadrature for complex integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Tolerances and sampling controls shared by every oracle integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    /// Absolute error target for each integral.
    pub abs_tol: f64,
    /// Upper bound on the number of panels an integral may use.
    pub max_subdivisions: usize,
    /// Integration window half-width beyond the packet centre, in units of `σ(t)`.
    pub window_halfwidth_sigmas: f64,
    /// Minimum number of integrand samples per oscillation wavelength.
    pub min_points_per_oscillation: f64,
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self {
            abs_tol: 1e-9,
            max_subdivisions: 1 << 20,
            window_halfwidth_sigmas: 12.0,
            min_points_per_oscillation: 20.0,
        }
    }
}

impl QuadratureSpec {
    pub fn validate(&self) -> Result<()> {
        if !(self.abs_tol.is_finite() && self.abs_tol > 0.0) {
            return Err(Error::invalid("abs_tol", format!("must be > 0, got {}", self.abs_tol)));
        }
        if self.max_subdivisions == 0 {
            return Err(Error::invalid("max_subdivisions", "must be at least 1"));
        }
        if !(self.window_halfwidth_sigmas.is_finite() && self.window_halfwidth_sigmas >= 6.0) {
            return Err(Error::invalid(
                "window_halfwidth_sigmas",
                format!("must be >= 6, got {}", self.window_halfwidth_sigmas),
            ));
        }
        if !(self.min_points_per_oscillation.is_finite() && self.min_points_per_oscillation >= 8.0) {
            return Err(Error::invalid(
                "min_points_per_oscillation",
                format!("must be >= 8, got {}", self.min_points_per_oscillation),
            ));
        }
        Ok(())
    }
}

/// A converged integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Estimate {
    pub value: Complex64,
    /// Bound on the absolute error, always `<= abs_tol` for a returned estimate.
    pub error: f64,
    pub subdivisions: usize,
    pub evaluations: usize,
}

// Kronrod abscissae on [0, 1); odd indices are the 10-point Gauss nodes.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689,
    0.973_906_528_517_171_720_077_964_012_084,
    0.930_157_491_355_708_226_001_207_180_060,
    0.865_063_366_688_984_510_732_096_688_423,
    0.780_817_726_586_416_897_063_717_578_345,
    0.679_409_568_299_024_406_234_327_365_115,
    0.562_757_134_668_604_683_339_000_099_273,
    0.433_395_394_129_247_190_799_265_943_166,
    0.294_392_862_701_460_198_131_126_603_104,
    0.148_874_338_981_631_210_884_826_001_130,
    0.0,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062,
    0.032_558_162_307_964_727_478_818_972_459,
    0.054_755_896_574_351_996_031_381_300_245,
    0.075_039_674_810_919_952_767_043_140_916,
    0.093_125_454_583_697_605_535_065_465_083,
    0.109_387_158_802_297_641_899_210_590_326,
    0.123_491_976_262_065_851_077_958_109_831,
    0.134_709_217_311_473_325_928_054_001_772,
    0.142_775_938_577_060_080_797_094_273_139,
    0.147_739_104_901_338_491_374_841_515_972,
    0.149_445_554_002_916_905_664_936_468_390,
];

#[allow(clippy::excessive_precision)]
const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893,
    0.149_451_349_150_580_593_145_776_339_658,
    0.219_086_362_515_982_043_995_534_934_228,
    0.269_266_719_309_996_355_091_226_921_569,
    0.295_524_224_714_752_870_173_892_994_651,
];

/// Number of integrand evaluations per panel.
pub const POINTS_PER_PANEL: usize = 21;

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: Complex64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gauss_kronrod<F: FnMut(f64) -> Complex64>(f: &mut F, a: f64, b: f64) -> Panel {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut values = [Complex64::new(0.0, 0.0); POINTS_PER_PANEL];
    values[20] = f(centre);
    for j in 0..10 {
        let dx = half * XGK[j];
        values[2 * j] = f(centre - dx);
        values[2 * j + 1] = f(centre + dx);
    }

    let mut kronrod = values[20] * WGK[10];
    let mut gauss = Complex64::new(0.0, 0.0);
    let mut abs_sum = WGK[10] * values[20].norm();
    for j in 0..10 {
        let (lo, hi) = (values[2 * j], values[2 * j + 1]);
        kronrod += (lo + hi) * WGK[j];
        abs_sum += WGK[j] * (lo.norm() + hi.norm());
        if j % 2 == 1 {
            gauss += (lo + hi) * WG[j / 2];
        }
    }
    // QUADPACK error heuristic: scale |K - G| against the variation of f.
    let mean = kronrod * 0.5;
    let mut asc = WGK[10] * (values[20] - mean).norm();
    for j in 0..10 {
        asc += WGK[j] * ((values[2 * j] - mean).norm() + (values[2 * j + 1] - mean).norm());
    }
    let h = half.abs();
    let (abs_sum, asc) = (abs_sum * h, asc * h);
    let mut error = ((kronrod - gauss) * half).norm();
    if asc != 0.0 && error != 0.0 {
        error = asc * (200.0 * error / asc).powf(1.5).min(1.0);
    }
    let roundoff = 50.0 * f64::EPSILON * abs_sum;
    Panel {
        a,
        b,
        value: kronrod * half,
        error: error.max(roundoff),
    }
}

fn finish(panels: &BinaryHeap<Panel>, evaluations: usize) -> Estimate {
    let mut value = Complex64::new(0.0, 0.0);
    let mut error = 0.0;
    for p in panels.iter() {
        value += p.value;
        error += p.error;
    }
    Estimate {
        value,
        error,
        subdivisions: panels.len(),
        evaluations,
    }
}

/// Integrates `f` over `[a, b]`, starting from `initial_panels` equal panels
/// and bisecting the worst panel until the summed error estimate drops
/// below `abs_tol`.
///
/// An initial partition finer than `max_subdivisions` is an immediate
/// convergence failure; the coarser `max_subdivisions` partition supplies
/// the reported best estimate.
pub fn integrate_adaptive<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    initial_panels: usize,
    abs_tol: f64,
    max_subdivisions: usize,
) -> Result<Estimate> {
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(Error::domain(format!("invalid integration interval [{a}, {b}]")));
    }
    let max_subdivisions = max_subdivisions.max(1);
    let start = initial_panels.clamp(1, max_subdivisions);
    let width = (b - a) / start as f64;
    let mut panels: BinaryHeap<Panel> = (0..start)
        .map(|i| {
            let lo = a + width * i as f64;
            let hi = if i + 1 == start { b } else { a + width * (i + 1) as f64 };
            gauss_kronrod(&mut f, lo, hi)
        })
        .collect();
    let mut evaluations = start * POINTS_PER_PANEL;
    let mut total_error: f64 = panels.iter().map(|p| p.error).sum();

    if initial_panels <= max_subdivisions {
        while total_error > abs_tol && panels.len() < max_subdivisions {
            let worst = panels.pop().expect("at least one panel");
            let mid = 0.5 * (worst.a + worst.b);
            if mid <= worst.a || mid >= worst.b {
                panels.push(worst);
                break;
            }
            let left = gauss_kronrod(&mut f, worst.a, mid);
            let right = gauss_kronrod(&mut f, mid, worst.b);
            evaluations += 2 * POINTS_PER_PANEL;
            total_error += left.error + right.error - worst.error;
            panels.push(left);
            panels.push(right);
        }
    }

    let estimate = finish(&panels, evaluations);
    if estimate.error <= abs_tol && initial_panels <= max_subdivisions {
        Ok(estimate)
    } else {
        Err(Error::ConvergenceFailure {
            estimate: estimate.value,
            error: estimate.error,
            tolerance: abs_tol,
            subdivisions: estimate.subdivisions,
        })
    }
}

/// Largest number of modulus samples used to trim negligible tails.
const MAX_SCAN_POINTS: usize = 1 << 16;

/// Fraction of the tolerance budget given to the trimmed tails.
const TAIL_BUDGET: f64 = 1e-3;

/// Integrates an oscillatory integrand `f` over `[a, b]`.
///
/// `wavenumber` bounds the local phase slope of `f` and sets the initial
/// panel width so that each wavelength receives at least
/// `min_points_per_oscillation` samples; `envelope_scale` is the length over
/// which `|f|` varies. Regions where `|f|` is below `TAIL_BUDGET · abs_tol /
/// (b − a)` are located on a modulus scan and excluded, their mass added to
/// the error bound.
pub fn integrate_oscillatory<F: FnMut(f64) -> Complex64>(
    mut f: F,
    a: f64,
    b: f64,
    wavenumber: f64,
    envelope_scale: f64,
    spec: &QuadratureSpec,
) -> Result<Estimate> {
    spec.validate()?;
    if !(envelope_scale.is_finite() && envelope_scale > 0.0) || !(wavenumber.is_finite() && wavenumber >= 0.0) {
        return Err(Error::domain(
            "oscillatory quadrature needs a finite envelope scale and wavenumber",
        ));
    }
    let length = b - a;
    let (mut lo, mut hi, mut tail_bound, mut scan_evals) = (a, b, 0.0, 0);

    let step = envelope_scale / 8.0;
    let samples = (length / step).ceil() as usize + 1;
    if length > 0.0 && samples <= MAX_SCAN_POINTS {
        let h = length / (samples - 1) as f64;
        let threshold = TAIL_BUDGET * spec.abs_tol / length;
        let moduli: Vec<f64> = (0..samples).map(|i| f(a + h * i as f64).norm()).collect();
        scan_evals = samples;
        let first = moduli.iter().position(|&v| v > threshold);
        let last = moduli.iter().rposition(|&v| v > threshold);
        match (first, last) {
            (Some(i), Some(j)) => {
                let (i, j) = (i.saturating_sub(1), (j + 1).min(samples - 1));
                lo = a + h * i as f64;
                hi = if j == samples - 1 { b } else { a + h * j as f64 };
                let excluded: f64 = moduli[..i].iter().chain(&moduli[j + 1..]).sum();
                tail_bound = h * excluded + TAIL_BUDGET * spec.abs_tol;
            }
            _ => {
                let mass: f64 = moduli.iter().sum::<f64>() * h;
                return Ok(Estimate {
                    value: Complex64::new(0.0, 0.0),
                    error: mass + TAIL_BUDGET * spec.abs_tol,
                    subdivisions: 0,
                    evaluations: scan_evals,
                });
            }
        }
    }

    let core = hi - lo;
    let per_panel_wavelengths = POINTS_PER_PANEL as f64 / spec.min_points_per_oscillation;
    let oscillation_panels = core * wavenumber / (2.0 * PI) / per_panel_wavelengths;
    let envelope_panels = core / envelope_scale;
    let initial = oscillation_panels.max(envelope_panels).ceil().max(1.0);
    let initial = if initial > usize::MAX as f64 {
        usize::MAX
    } else {
        initial as usize
    };

    let result = integrate_adaptive(
        &mut f,
        lo,
        hi,
        initial,
        spec.abs_tol - tail_bound,
        spec.max_subdivisions,
    );
    match result {
        Ok(mut est) => {
            est.error += tail_bound;
            est.evaluations += scan_evals;
            Ok(est)
        }
        Err(Error::ConvergenceFailure {
            estimate,
            error,
            subdivisions,
            ..
        }) => Err(Error::ConvergenceFailure {
            estimate,
            error: error + tail_bound,
            tolerance: spec.abs_tol,
            subdivisions,
        }),
        Err(e) => Err(e),
    }
}
