//! Simulation and parameter estimation for continuous-wave waveguide-OPA
//! squeezed-light systems with all-optical (OPA-amplified) detection.
//!
//! The toolkit covers the working loop of characterizing a fiber-pigtailed
//! waveguide squeezer:
//!
//! * [`noise`] — quadrature-variance algebra: dB conversion, loss
//!   channels and their inversion, serial loss budgets, phase projection.
//! * [`opa`] — the generation OPA: squeezing versus pump power under a
//!   lumped loss, SHG-coefficient scaling with device length, and the
//!   pump power that optimizes what a finite-gain detector can see.
//! * [`detection`] — finite-gain all-optical readout, the full
//!   generation-to-detection chain, on-chip level inference and
//!   loss-budget decomposition.
//! * [`spectral`] — broadband spectra: sideband mapping, quasi-phase-
//!   matching envelopes, fiber-dispersion ripples, detector roll-off.
//! * [`estimation`] — fitting the SHG coefficient and effective loss to
//!   pump-sweep data, with a pinned-PRNG synthetic-data generator.
//! * [`modes`] — transverse-mode overlap integrals and the parity
//!   selection rule behind quasi-single-mode operation, plus multimode
//!   noise mixing.
//! * [`cli`] — the config-driven command layer behind the `sqzchain`
//!   binary.
//!
//! Conventions: noise levels are linear variance ratios with vacuum = 1
//! (dB only at the boundaries); losses are fractions in `[0, 1)`; the
//! detection gain is the linear power gain (20 dB corresponds to 100).
//! All core operations are pure functions of immutable values and safe
//! for unrestricted concurrent use.
//!
//! The `examples/` directory has one runnable example per capability;
//! start with `loss_budget` and `pump_sweep`.

pub mod cli;
pub mod detection;
pub mod error;
pub mod estimation;
pub mod modes;
pub mod noise;
pub mod opa;
pub mod rng;
pub mod spectral;

pub use detection::{
    antisqueeze_suppression, chain_forward, infer_onchip, measured_levels, per_side_loss,
    ChainConfig, MeasuredLevels,
};
pub use error::{Error, Result};
pub use estimation::{fit_opa_params, residual_rms, synth_sweep, FitResult, SweepObservation};
pub use modes::{multimode_noise, triple_overlap, TransverseMode};
pub use noise::{
    compose_losses, from_decibels, to_decibels, LossBudget, LossElement, NoiseLevels,
};
pub use opa::{
    opa_output, optimal_pump, pump_sweep, shg_coeff_from_normalized, OpaParams,
};
pub use spectral::{
    beta2_from_dispersion, fiber_phase, qpm_envelope, sideband_frequency, synthesize_spectrum,
    DetectorRolloff, FiberSegment, PhaseMatchingEnvelope, SpectralGrid, SpectrumRow,
};
