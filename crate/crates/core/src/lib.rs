//! Spin coherence and spin-position entanglement in the Stern-Gerlach
//! experiment.
//!
//! A spin-1/2 particle prepared as `(alpha|+> + beta|->) ⊗ |φ>` crosses a
//! field gradient. The two spin branches are pushed apart in momentum and
//! position, the spin becomes entangled with the coordinate, and the
//! off-diagonal element of the reduced spin density matrix decays. This
//! crate evaluates the closed forms for that decay and checks each of them
//! against independent numerics in [`oracle`].
//!
//! ```
//! use sgcoherence::{experiment::typical_params, decoherence::regime_report, Regime};
//!
//! let report = regime_report(&typical_params()).unwrap();
//! assert_eq!(report.regime, Regime::MomentumDominated);
//! assert!(report.tau > 5e-10 && report.tau < 1.5e-9);
//! ```

pub mod coherence;
pub mod decoherence;
pub mod error;
pub mod experiment;
pub mod kinematics;
pub mod oracle;
pub mod packet;
pub mod params;
pub mod separation;
pub mod validation;

pub use coherence::{
    coherence, coherence_exponents, linear_entropy, spin_density_matrix, CoherenceExponents, EntropyConvention,
    SpinDensityMatrix,
};
pub use decoherence::{chi, decoherence_time, regime_report, tau1, tau2, CoherenceReport, Regime};
pub use error::{Error, Result};
pub use experiment::{
    coherence_series, default_profile_window, default_series, density_profile, time_grid, typical_params, Profile,
    Spacing, TimeSeries, TYPICAL_FIELD_GRADIENT, TYPICAL_MASS, TYPICAL_SIGMA,
};
pub use kinematics::{kinematics, packet_width, KinematicState};
pub use packet::{packet_amplitude, packet_density, total_position_density, ComplexAmplitude, PacketEvaluator};
pub use params::{AmplitudePolicy, Branch, ExperimentParams, BOHR_MAGNETON, HBAR};
pub use separation::{
    separation_momentum_ratio, separation_position_approx, separation_position_ratio, SeparationRegime,
};
