//! Decoherence time by bracketing and bisection on `C(t) − 1/e`.

use crate::coherence::coherence;
use crate::decoherence::{tau1, tau2};
use crate::error::{Error, Result};
use crate::params::ExperimentParams;

/// Iteration cap for the bisection phase.
pub const MAX_BISECTION_ITERATIONS: usize = 200;
const MAX_DOUBLINGS: usize = 2048;

#[derive(Debug, Clone, PartialEq)]
pub struct BisectionOutcome {
    /// Midpoint of the final bracket.
    pub root: f64,
    pub bracket: (f64, f64),
    pub iterations: usize,
    /// Bracket width before the first and after each bisection step.
    pub widths: Vec<f64>,
}

/// Root of a decreasing function on `[lo, hi]` with `g(lo) > 0 >= g(hi)`,
/// bisected until the bracket is narrower than `tol_rel · lo`.
pub fn bisect_decreasing<G: FnMut(f64) -> Result<f64>>(
    mut g: G,
    mut lo: f64,
    mut hi: f64,
    tol_rel: f64,
) -> Result<BisectionOutcome> {
    if !(tol_rel.is_finite() && tol_rel > 0.0) {
        return Err(Error::invalid("tol_rel", format!("must be > 0, got {tol_rel}")));
    }
    // The bracket is held as `lo + width` so that every step halves the
    // width exactly.
    let mut width = hi - lo;
    let mut widths = vec![width];
    let mut iterations = 0;
    while width > tol_rel * lo && iterations < MAX_BISECTION_ITERATIONS {
        let half = 0.5 * width;
        let mid = lo + half;
        if mid <= lo || mid >= lo + width {
            break;
        }
        if g(mid)? > 0.0 {
            lo = mid;
        }
        width = half;
        iterations += 1;
        widths.push(width);
    }
    hi = lo + width;
    Ok(BisectionOutcome {
        root: lo + 0.5 * width,
        bracket: (lo, hi),
        iterations,
        widths,
    })
}

/// Decoherence time found numerically: starting from `min(τ₁, τ₂)/100`, the
/// upper end is doubled until `C(t) < 1/e`, then the bracket is bisected.
pub fn decoherence_time_bisection(params: &ExperimentParams, tol_rel: f64) -> Result<BisectionOutcome> {
    if !(tol_rel.is_finite() && tol_rel > 0.0) {
        return Err(Error::invalid("tol_rel", format!("must be > 0, got {tol_rel}")));
    }
    let target = (-1.0f64).exp();
    let g = |t: f64| Ok(coherence(params, t)? - target);

    let mut lo = 0.0;
    let mut hi = tau1(params).min(tau2(params)) / 100.0;
    let mut doublings = 0;
    while g(hi)? > 0.0 {
        lo = hi;
        hi *= 2.0;
        doublings += 1;
        if doublings > MAX_DOUBLINGS || !hi.is_finite() {
            return Err(Error::domain("coherence never dropped below 1/e while bracketing"));
        }
    }
    bisect_decreasing(g, lo, hi, tol_rel)
}
