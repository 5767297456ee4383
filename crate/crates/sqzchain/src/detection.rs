//! All-optical detection through a second, amplifying OPA.
//!
//! Instead of electrical homodyning, the squeezed beam is sent through a
//! high-gain phase-sensitive amplifier and plain optical intensities are
//! read out. With the detector's linear power gain `G`, the normalized
//! intensities are a convex mixture of the true noise pair:
//!
//! ```text
//! R'_-+ = I_-+ / I_0 = R_+- / (1 + G^2)  +  G^2 * R_-+ / (1 + G^2)
//! ```
//!
//! so a 20 dB detector (`G = 100`) suppresses the anti-squeezed leakage
//! into the squeezed reading by `1 / (1 + G^2) ~ 1/10000`. The mixture
//! preserves the branch sum exactly, which makes finite-gain effects easy
//! to test for.
//!
//! The full generation-to-detection chain lumps all optical loss into a
//! single channel between the two OPAs (squeezing generated in the middle
//! of the first, detected in the middle of the second); the per-stage
//! budget is kept only for inference and decomposition.

use crate::error::{Error, Result};
use crate::noise::{check_loss_fraction, from_decibels, to_decibels, LossBudget, NoiseLevels};
use crate::opa::{opa_output, OpaParams};

/// Gains above this are treated as the infinite-gain limit; at 1e12 the
/// mixture is within 1e-10 of the true levels, and the arithmetic stays
/// finite.
pub const GAIN_CAP: f64 = 1e12;

/// Intensity ratios read out of the amplifying OPA, relative to the
/// amplified vacuum: `rp_minus = I_- / I_0`, `rp_plus = I_+ / I_0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasuredLevels {
    rp_minus: f64,
    rp_plus: f64,
}

impl MeasuredLevels {
    /// Measured squeezed-branch ratio (linear).
    pub fn rp_minus(&self) -> f64 {
        self.rp_minus
    }

    /// Measured anti-squeezed-branch ratio (linear).
    pub fn rp_plus(&self) -> f64 {
        self.rp_plus
    }

    /// Measured squeezed branch in dB relative to vacuum.
    pub fn rp_minus_db(&self) -> f64 {
        to_decibels(self.rp_minus).expect("invariant: rp_minus > 0")
    }

    /// Measured anti-squeezed branch in dB relative to vacuum.
    pub fn rp_plus_db(&self) -> f64 {
        to_decibels(self.rp_plus).expect("invariant: rp_plus > 0")
    }
}

/// Full generation-to-detection chain.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainConfig {
    /// Generation-OPA parameters.
    pub generator: OpaParams,
    /// Detector linear power gain `G` (>= 1; 20 dB corresponds to 100).
    pub detection_power_gain: f64,
    /// Single lumped loss between generation and detection, in `[0, 1)`.
    /// `chain_forward` uses this, not `generator.effective_loss`.
    pub effective_chain_loss: f64,
    /// Per-stage breakdown of the detection path, used only for
    /// inference and decomposition.
    pub detection_budget: LossBudget,
}

impl ChainConfig {
    pub fn new(
        generator: OpaParams,
        detection_power_gain: f64,
        effective_chain_loss: f64,
        detection_budget: LossBudget,
    ) -> Result<Self> {
        generator.validate()?;
        if detection_power_gain.is_nan() || detection_power_gain < 1.0 {
            return Err(Error::Domain(format!(
                "detection power gain must be >= 1, got {detection_power_gain}"
            )));
        }
        check_loss_fraction(effective_chain_loss)?;
        Ok(Self {
            generator,
            detection_power_gain,
            effective_chain_loss,
            detection_budget,
        })
    }
}

/// Mix a true noise pair through a finite-gain detector.
///
/// `g_power >= 1`; values above [`GAIN_CAP`] (including `+inf`) are capped.
/// The branch sum is preserved exactly: `rp_minus + rp_plus = r_minus + r_plus`.
pub fn measured_levels(levels: NoiseLevels, g_power: f64) -> Result<MeasuredLevels> {
    if g_power.is_nan() || g_power < 1.0 {
        return Err(Error::Domain(format!(
            "detection power gain must be >= 1, got {g_power}"
        )));
    }
    let g = g_power.min(GAIN_CAP);
    let g2 = g * g;
    let denom = 1.0 + g2;
    Ok(MeasuredLevels {
        rp_minus: (levels.r_plus() + g2 * levels.r_minus()) / denom,
        rp_plus: (levels.r_minus() + g2 * levels.r_plus()) / denom,
    })
}

/// Fraction of the opposite branch leaking into a reading: `1 / (1 + G^2)`.
///
/// At `G = 100` (20 dB) the original anti-squeezing is suppressed to about
/// 1/10000 in the squeezed-branch readout.
pub fn antisqueeze_suppression(g_power: f64) -> Result<f64> {
    if !g_power.is_finite() || g_power < 0.0 {
        return Err(Error::Domain(format!(
            "gain must be finite and >= 0, got {g_power}"
        )));
    }
    Ok(1.0 / (1.0 + g_power * g_power))
}

/// Generation, lumped chain loss, then finite-gain detection.
///
/// The squeezer runs with `chain.effective_chain_loss` in place of the
/// generator's own loss figure (mid-point loss convention), and the result
/// goes through [`measured_levels`] at the chain's detection gain.
pub fn chain_forward(chain: &ChainConfig, pump_w: f64) -> Result<MeasuredLevels> {
    let levels = opa_output(
        chain.generator.shg_coeff_per_watt,
        pump_w,
        chain.effective_chain_loss,
    )?;
    measured_levels(levels, chain.detection_power_gain)
}

/// Infer the on-chip squeezing level (dB) from a measured level (dB <= 0)
/// and the downstream detection loss.
///
/// Inverts the detection loss channel on the measured linear level. Fails
/// with a nonphysical-inversion error when the measured level sits at or
/// below the loss floor.
pub fn infer_onchip(measured_db: f64, detection_loss: f64) -> Result<f64> {
    if !measured_db.is_finite() || measured_db > 0.0 {
        return Err(Error::Domain(format!(
            "measured squeezing must be a finite dB value <= 0, got {measured_db}"
        )));
    }
    check_loss_fraction(detection_loss)?;
    let measured = from_decibels(measured_db)?;
    if measured <= detection_loss {
        return Err(Error::Nonphysical(format!(
            "measured level {measured:.6} is at or below the detection-loss floor {detection_loss}"
        )));
    }
    to_decibels((measured - detection_loss) / (1.0 - detection_loss))
}

/// Split a measured total loss into the waveguide part plus two equal
/// coupling sides: `1 - sqrt((1 - total) / (1 - waveguide))`.
///
/// Recomposing `[waveguide, side, side]` reproduces `total`.
pub fn per_side_loss(total_loss: f64, waveguide_loss: f64) -> Result<f64> {
    check_loss_fraction(total_loss)?;
    check_loss_fraction(waveguide_loss)?;
    if waveguide_loss > total_loss {
        return Err(Error::Domain(format!(
            "waveguide loss {waveguide_loss} exceeds total loss {total_loss}"
        )));
    }
    Ok(1.0 - ((1.0 - total_loss) / (1.0 - waveguide_loss)).sqrt())
}
