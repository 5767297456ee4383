//! Wavelength-resolved synthesis of broadband squeezing spectra.
//!
//! Three effects shape an optical-spectrum-analyzer trace of a waveguide
//! squeezer away from its center wavelength:
//!
//! * the quasi-phase-matching envelope `sinc^2(dk * L / 2)` of the
//!   generation OPA, which weakens the squeeze parameter off-center,
//! * group-velocity dispersion in the fiber pigtails, which rotates the
//!   squeezing ellipse by `theta(Omega) = theta_0 + beta2 / 2 * Omega^2 * L`
//!   per segment and rips the spectrum into squeezing/anti-squeezing
//!   crossings, and
//! * the gain roll-off of the detection OPA, which lowers the amplified
//!   vacuum trace at large detuning.
//!
//! The synthesized spectra are qualitative: the pigtail lengths and
//! dispersion of a given module are usually unpublished, so ripple
//! positions cannot be fit quantitatively. The center-row behavior,
//! wavelength-flat limits and crossing counts are the testable content.

use crate::detection::{ChainConfig, GAIN_CAP};
use crate::error::{Error, Result};
use crate::noise::from_decibels;
use crate::opa::levels_from_squeeze;

/// Vacuum speed of light, m/s (exact).
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 299_792_458.0;

/// Wavelength sample points around a center wavelength.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralGrid {
    center_wavelength_nm: f64,
    wavelengths_nm: Vec<f64>,
}

impl SpectralGrid {
    /// Strictly monotone (either direction) list of positive wavelengths.
    pub fn new(center_wavelength_nm: f64, wavelengths_nm: Vec<f64>) -> Result<Self> {
        if !(center_wavelength_nm.is_finite() && center_wavelength_nm > 0.0) {
            return Err(Error::Domain(format!(
                "center wavelength must be > 0 nm, got {center_wavelength_nm}"
            )));
        }
        if wavelengths_nm.iter().any(|w| !w.is_finite() || *w <= 0.0) {
            return Err(Error::Domain(
                "all grid wavelengths must be finite and > 0".into(),
            ));
        }
        let increasing = wavelengths_nm.windows(2).all(|w| w[0] < w[1]);
        let decreasing = wavelengths_nm.windows(2).all(|w| w[0] > w[1]);
        if !(increasing || decreasing) {
            return Err(Error::Domain(
                "grid wavelengths must be strictly monotone".into(),
            ));
        }
        Ok(Self {
            center_wavelength_nm,
            wavelengths_nm,
        })
    }

    /// Evenly spaced grid of `points >= 2` samples over `[min, max]`.
    pub fn linspace(center_nm: f64, min_nm: f64, max_nm: f64, points: usize) -> Result<Self> {
        if points < 2 {
            return Err(Error::Domain(format!(
                "grid needs at least 2 points, got {points}"
            )));
        }
        if !(min_nm.is_finite() && max_nm.is_finite() && min_nm > 0.0 && max_nm > min_nm) {
            return Err(Error::Domain(format!(
                "invalid wavelength range [{min_nm}, {max_nm}] nm"
            )));
        }
        let step = (max_nm - min_nm) / (points - 1) as f64;
        let wavelengths = (0..points).map(|i| min_nm + step * i as f64).collect();
        Self::new(center_nm, wavelengths)
    }

    pub fn center_wavelength_nm(&self) -> f64 {
        self.center_wavelength_nm
    }

    pub fn wavelengths_nm(&self) -> &[f64] {
        &self.wavelengths_nm
    }
}

/// One fiber span with group-velocity dispersion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiberSegment {
    /// Physical length, m (>= 0).
    pub length_m: f64,
    /// Dispersion parameter D at the reference wavelength, ps/(nm km).
    /// Standard single-mode fiber is about 17 near 1545 nm.
    pub dispersion_ps_nm_km: f64,
    /// Wavelength where D is quoted, nm.
    pub reference_wavelength_nm: f64,
    /// Static phase offset, rad.
    pub static_phase_rad: f64,
}

impl FiberSegment {
    pub fn new(
        length_m: f64,
        dispersion_ps_nm_km: f64,
        reference_wavelength_nm: f64,
        static_phase_rad: f64,
    ) -> Result<Self> {
        if !(length_m.is_finite() && length_m >= 0.0) {
            return Err(Error::Domain(format!(
                "fiber length must be >= 0 m, got {length_m}"
            )));
        }
        if !dispersion_ps_nm_km.is_finite() || !static_phase_rad.is_finite() {
            return Err(Error::Domain(
                "fiber dispersion and static phase must be finite".into(),
            ));
        }
        if !(reference_wavelength_nm.is_finite() && reference_wavelength_nm > 0.0) {
            return Err(Error::Domain(format!(
                "reference wavelength must be > 0 nm, got {reference_wavelength_nm}"
            )));
        }
        Ok(Self {
            length_m,
            dispersion_ps_nm_km,
            reference_wavelength_nm,
            static_phase_rad,
        })
    }
}

/// Linearized quasi-phase-matching envelope: `dk(lambda) = slope * (lambda - center)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseMatchingEnvelope {
    /// Wavelength of exact phase matching, nm.
    pub center_wavelength_nm: f64,
    /// d(dk)/d(lambda) around the center, rad/m per nm.
    pub mismatch_slope_rad_per_m_per_nm: f64,
    /// Interaction length, m (> 0).
    pub length_m: f64,
}

impl PhaseMatchingEnvelope {
    pub fn new(
        center_wavelength_nm: f64,
        mismatch_slope_rad_per_m_per_nm: f64,
        length_m: f64,
    ) -> Result<Self> {
        if !(length_m.is_finite() && length_m > 0.0) {
            return Err(Error::Domain(format!(
                "interaction length must be > 0 m, got {length_m}"
            )));
        }
        if !center_wavelength_nm.is_finite() || !mismatch_slope_rad_per_m_per_nm.is_finite() {
            return Err(Error::Domain(
                "envelope center and slope must be finite".into(),
            ));
        }
        Ok(Self {
            center_wavelength_nm,
            mismatch_slope_rad_per_m_per_nm,
            length_m,
        })
    }

    /// Flat envelope (no roll-off with wavelength).
    pub fn flat(center_wavelength_nm: f64) -> Self {
        Self {
            center_wavelength_nm,
            mismatch_slope_rad_per_m_per_nm: 0.0,
            length_m: 0.045,
        }
    }

    /// Envelope value at a wavelength, in `[0, 1]`.
    pub fn value_at(&self, wavelength_nm: f64) -> f64 {
        let delta_k =
            self.mismatch_slope_rad_per_m_per_nm * (wavelength_nm - self.center_wavelength_nm);
        qpm_envelope(delta_k, self.length_m).expect("invariant: length > 0")
    }
}

/// Detection-OPA gain with its own roll-off envelope.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DetectorRolloff {
    /// Power gain at the envelope center, dB (>= 0).
    pub peak_gain_db: f64,
    /// Envelope multiplying the linear power gain off-center.
    pub envelope: PhaseMatchingEnvelope,
}

impl DetectorRolloff {
    pub fn new(peak_gain_db: f64, envelope: PhaseMatchingEnvelope) -> Result<Self> {
        if !(peak_gain_db.is_finite() && peak_gain_db >= 0.0) {
            return Err(Error::Domain(format!(
                "peak gain must be >= 0 dB, got {peak_gain_db}"
            )));
        }
        Ok(Self {
            peak_gain_db,
            envelope,
        })
    }

    /// Wavelength-independent gain.
    pub fn flat(peak_gain_db: f64, center_wavelength_nm: f64) -> Result<Self> {
        Self::new(peak_gain_db, PhaseMatchingEnvelope::flat(center_wavelength_nm))
    }

    /// Linear power gain at a wavelength, floored at 1 (an unpumped OPA
    /// passes light with unit power gain) and capped at [`GAIN_CAP`].
    pub fn gain_at(&self, wavelength_nm: f64) -> f64 {
        let peak = from_decibels(self.peak_gain_db).expect("invariant: finite dB");
        (peak * self.envelope.value_at(wavelength_nm)).clamp(1.0, GAIN_CAP)
    }
}

/// One synthesized spectrum sample. All levels are linear variance ratios.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumRow {
    /// Sample wavelength, nm.
    pub wavelength_nm: f64,
    /// Sideband frequency `|c/lambda - c/lambda0|`, THz.
    pub sideband_thz: f64,
    /// Amplified-vacuum trace relative to its value at the center
    /// wavelength: `(1 + G(lambda)^2) / (1 + G(center)^2)`.
    pub vacuum_level: f64,
    /// Squeezed-branch readout relative to the local vacuum trace.
    pub squeezed_level: f64,
    /// Anti-squeezed-branch readout relative to the local vacuum trace.
    pub antisqueezed_level: f64,
}

/// Sideband frequency of `wavelength_nm` relative to `center_nm`, in THz.
pub fn sideband_frequency(wavelength_nm: f64, center_nm: f64) -> Result<f64> {
    for (label, w) in [("wavelength", wavelength_nm), ("center", center_nm)] {
        if !w.is_finite() || w <= 0.0 {
            return Err(Error::Domain(format!("{label} must be > 0 nm, got {w}")));
        }
    }
    let f = SPEED_OF_LIGHT_M_PER_S / (wavelength_nm * 1e-9);
    let f0 = SPEED_OF_LIGHT_M_PER_S / (center_nm * 1e-9);
    Ok((f - f0).abs() / 1e12)
}

/// Quasi-phase-matching efficiency `sinc^2(dk * L / 2)` with
/// `sinc(x) = sin(x) / x`, `sinc(0) = 1`.
pub fn qpm_envelope(delta_k_rad_per_m: f64, length_m: f64) -> Result<f64> {
    if !(length_m.is_finite() && length_m > 0.0) {
        return Err(Error::Domain(format!(
            "interaction length must be > 0 m, got {length_m}"
        )));
    }
    if !delta_k_rad_per_m.is_finite() {
        return Err(Error::Domain(format!(
            "phase mismatch must be finite, got {delta_k_rad_per_m}"
        )));
    }
    let x = delta_k_rad_per_m * length_m / 2.0;
    if x == 0.0 {
        return Ok(1.0);
    }
    let sinc = x.sin() / x;
    Ok(sinc * sinc)
}

/// Group-velocity dispersion from the fiber D parameter:
/// `beta2 = -D * lambda^2 / (2 pi c)`, returned in ps^2/km.
pub fn beta2_from_dispersion(d_ps_nm_km: f64, wavelength_nm: f64) -> Result<f64> {
    if !(wavelength_nm.is_finite() && wavelength_nm > 0.0) {
        return Err(Error::Domain(format!(
            "wavelength must be > 0 nm, got {wavelength_nm}"
        )));
    }
    if !d_ps_nm_km.is_finite() {
        return Err(Error::Domain(format!(
            "dispersion must be finite, got {d_ps_nm_km}"
        )));
    }
    // D in SI: 1 ps/(nm km) = 1e-6 s/m^2; beta2 back to ps^2/km: 1 s^2/m = 1e27 ps^2/km
    let d_si = d_ps_nm_km * 1e-6;
    let lambda_m = wavelength_nm * 1e-9;
    let beta2_si = -d_si * lambda_m * lambda_m
        / (2.0 * std::f64::consts::PI * SPEED_OF_LIGHT_M_PER_S);
    Ok(beta2_si * 1e27)
}

/// Quadratic dispersion phase of one fiber segment at sideband angular
/// frequency `Omega` (rad/s): `theta = theta_0 + beta2 / 2 * Omega^2 * L`.
pub fn fiber_phase(sideband_rad_per_s: f64, segment: &FiberSegment) -> Result<f64> {
    if !sideband_rad_per_s.is_finite() {
        return Err(Error::Domain(format!(
            "sideband frequency must be finite, got {sideband_rad_per_s}"
        )));
    }
    let beta2_si = beta2_from_dispersion(
        segment.dispersion_ps_nm_km,
        segment.reference_wavelength_nm,
    )? * 1e-27;
    Ok(segment.static_phase_rad
        + 0.5 * beta2_si * sideband_rad_per_s * sideband_rad_per_s * segment.length_m)
}

/// Total dispersion phase over several segments.
pub fn total_fiber_phase(sideband_rad_per_s: f64, segments: &[FiberSegment]) -> Result<f64> {
    segments
        .iter()
        .map(|s| fiber_phase(sideband_rad_per_s, s))
        .sum()
}

/// Synthesize an optical-spectrum-analyzer style squeezing spectrum.
///
/// Per wavelength: the generation squeeze parameter `sqrt(a P)` is scaled
/// by `sqrt` of the generation envelope, the chain loss is applied inside
/// the squeezer as in [`chain_forward`](crate::detection::chain_forward),
/// the accumulated fiber phase rotates the readout quadratures, and the
/// detection mixes them with the rolled-off local gain.
///
/// The detection gain across the band comes from `rolloff`; for the center
/// row to reproduce `chain_forward` exactly, `rolloff.peak_gain_db` must
/// equal the chain's detection gain in dB and the fiber static phases must
/// sum to zero.
///
/// Rows come back in grid order. Output is qualitative (see module docs).
pub fn synthesize_spectrum(
    chain: &ChainConfig,
    grid: &SpectralGrid,
    gen_pm: &PhaseMatchingEnvelope,
    fibers: &[FiberSegment],
    rolloff: &DetectorRolloff,
    pump_w: f64,
) -> Result<Vec<SpectrumRow>> {
    if !(pump_w.is_finite() && pump_w >= 0.0) {
        return Err(Error::Domain(format!(
            "pump power must be finite and >= 0, got {pump_w}"
        )));
    }
    chain.generator.validate()?;
    let center = grid.center_wavelength_nm();
    let squeeze0 = (chain.generator.shg_coeff_per_watt * pump_w).sqrt();
    let gain0 = from_decibels(rolloff.peak_gain_db)?.clamp(1.0, GAIN_CAP);
    let vacuum0 = 1.0 + gain0 * gain0;

    let mut rows = Vec::with_capacity(grid.wavelengths_nm().len());
    for &wavelength in grid.wavelengths_nm() {
        let sideband_thz = sideband_frequency(wavelength, center)?;
        let omega = 2.0 * std::f64::consts::PI * sideband_thz * 1e12;

        let squeeze = squeeze0 * gen_pm.value_at(wavelength).sqrt();
        let levels = levels_from_squeeze(squeeze, chain.effective_chain_loss)?;

        let theta = total_fiber_phase(omega, fibers)?;
        let locked = levels.project_phase(theta);
        let orthogonal = levels.project_phase(theta + std::f64::consts::FRAC_PI_2);

        let gain = rolloff.gain_at(wavelength);
        let g2 = gain * gain;
        let denom = 1.0 + g2;
        rows.push(SpectrumRow {
            wavelength_nm: wavelength,
            sideband_thz,
            vacuum_level: denom / vacuum0,
            squeezed_level: (g2 * locked + orthogonal) / denom,
            antisqueezed_level: (g2 * orthogonal + locked) / denom,
        });
    }
    Ok(rows)
}
