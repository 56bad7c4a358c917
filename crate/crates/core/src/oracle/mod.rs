//! Numerical cross-checks for the closed forms: quadrature overlap, kernel
//! propagation and root bisection. Nothing here evaluates the closed-form
//! coherence or decoherence time.

pub mod bisection;
pub mod kernel;
pub mod overlap;
pub mod quadrature;

pub use bisection::{bisect_decreasing, decoherence_time_bisection, BisectionOutcome};
pub use kernel::{
    compare_with_closed_form, kernel_norm, propagate_via_kernel, propagate_via_kernel_real_axis, KernelComparison,
    KernelSample,
};
pub use overlap::overlap_quadrature;
pub use quadrature::{integrate_adaptive, integrate_oscillatory, Estimate, QuadratureSpec};
