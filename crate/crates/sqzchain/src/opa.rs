//! Forward model of the squeezed-light generation OPA.
//!
//! A single-pass waveguide OPA pumped with power `P` (undepleted, classical
//! pump) squeezes one quadrature and anti-squeezes the other. With an
//! effective optical loss `rho` lumped into the device, the output noise
//! pair relative to vacuum is
//!
//! ```text
//! R_-+ = rho + (1 - rho) * exp(-+ 2 * sqrt(a * P))
//! ```
//!
//! where `a` is the second-harmonic conversion coefficient in 1/W. The pump
//! enters only through the squeeze parameter `sqrt(a * P)`; the model holds
//! as long as the loss is pump-independent, which is exactly the device
//! property the toolkit is built to check. An optional additive
//! pump-dependent loss hook exists on [`OpaParams`] and defaults to zero so
//! that `rho(P) = const` stays a testable statement rather than a baked-in
//! assumption.

use crate::error::{Error, Result};
use crate::noise::{check_loss_fraction, NoiseLevels};

/// Generation-OPA device parameters.
///
/// The public API carries the SHG coefficient in 1/W (the conventional
/// "%/W" figure divided by 100); the CLI does that conversion at its
/// boundary.
#[derive(Debug, Clone, PartialEq)]
pub struct OpaParams {
    /// Total SHG coefficient `a` in 1/W (e.g. 8.23 for 823 %/W).
    pub shg_coeff_per_watt: f64,
    /// Effective lumped optical loss, in `[0, 1)`.
    pub effective_loss: f64,
    /// Waveguide interaction length in cm.
    pub length_cm: f64,
    /// Phase-matching center wavelength in nm.
    pub center_wavelength_nm: f64,
    /// Linearized phase-mismatch slope `d(dk)/d(lambda)` in rad/m per nm,
    /// used by the spectral model's sinc^2 envelope.
    pub pm_mismatch_slope_rad_per_m_per_nm: f64,
    /// Additive pump-dependent loss per watt of pump (1/W). Zero models a
    /// pump-durable device; the total loss at pump `P` is
    /// `effective_loss + pump_loss_per_watt * P`, clamped below 1.
    pub pump_loss_per_watt: f64,
}

impl OpaParams {
    /// Parameters with only the quantities the pump-power model needs;
    /// spectral fields default to 1545.3 nm center and a flat envelope.
    pub fn new(shg_coeff_per_watt: f64, effective_loss: f64, length_cm: f64) -> Result<Self> {
        let params = Self {
            shg_coeff_per_watt,
            effective_loss,
            length_cm,
            center_wavelength_nm: 1545.3,
            pm_mismatch_slope_rad_per_m_per_nm: 0.0,
            pump_loss_per_watt: 0.0,
        };
        params.validate()?;
        Ok(params)
    }

    pub fn validate(&self) -> Result<()> {
        if !self.shg_coeff_per_watt.is_finite() || self.shg_coeff_per_watt < 0.0 {
            return Err(Error::Domain(format!(
                "SHG coefficient must be finite and >= 0, got {}",
                self.shg_coeff_per_watt
            )));
        }
        check_loss_fraction(self.effective_loss)?;
        if !self.length_cm.is_finite() || self.length_cm <= 0.0 {
            return Err(Error::Domain(format!(
                "waveguide length must be > 0 cm, got {}",
                self.length_cm
            )));
        }
        if !self.pump_loss_per_watt.is_finite() || self.pump_loss_per_watt < 0.0 {
            return Err(Error::Domain(format!(
                "pump-dependent loss rate must be finite and >= 0, got {}",
                self.pump_loss_per_watt
            )));
        }
        Ok(())
    }

    /// Effective loss at pump power `pump_w`, including the (default-zero)
    /// pump-dependent term, clamped strictly below 1.
    pub fn loss_at_pump(&self, pump_w: f64) -> f64 {
        let rho = self.effective_loss + self.pump_loss_per_watt * pump_w;
        rho.min(1.0 - 1e-15)
    }
}

/// Noise pair for a given squeeze parameter `s = sqrt(a * P)` and loss.
///
/// This is the shared core of [`opa_output`] and the spectral synthesis,
/// where the squeeze parameter is additionally scaled by the
/// phase-matching envelope.
pub fn levels_from_squeeze(squeeze_param: f64, rho: f64) -> Result<NoiseLevels> {
    if !squeeze_param.is_finite() || squeeze_param < 0.0 {
        return Err(Error::Domain(format!(
            "squeeze parameter must be finite and >= 0, got {squeeze_param}"
        )));
    }
    check_loss_fraction(rho)?;
    let r_minus = rho + (1.0 - rho) * (-2.0 * squeeze_param).exp();
    let r_plus = rho + (1.0 - rho) * (2.0 * squeeze_param).exp();
    NoiseLevels::new(r_minus, r_plus)
}

/// Squeezed / anti-squeezed output of the generation OPA.
///
/// `a` in 1/W, `pump_w` in W, `rho` the lumped loss fraction. Zero pump
/// returns exact vacuum; the product `R_- * R_+` is >= 1 with equality
/// iff `rho = 0` or `pump_w = 0`.
pub fn opa_output(a: f64, pump_w: f64, rho: f64) -> Result<NoiseLevels> {
    if !a.is_finite() || a < 0.0 {
        return Err(Error::Domain(format!(
            "SHG coefficient must be finite and >= 0, got {a}"
        )));
    }
    if !pump_w.is_finite() || pump_w < 0.0 {
        return Err(Error::Domain(format!(
            "pump power must be finite and >= 0, got {pump_w}"
        )));
    }
    levels_from_squeeze((a * pump_w).sqrt(), rho)
}

/// Scale a normalized SHG efficiency (%/(W cm^2)) to a device total (%/W):
/// `a_norm * L^2`.
pub fn shg_coeff_from_normalized(a_norm_percent_per_w_cm2: f64, length_cm: f64) -> Result<f64> {
    if !a_norm_percent_per_w_cm2.is_finite() || a_norm_percent_per_w_cm2 < 0.0 {
        return Err(Error::Domain(format!(
            "normalized SHG efficiency must be finite and >= 0, got {a_norm_percent_per_w_cm2}"
        )));
    }
    if !length_cm.is_finite() || length_cm <= 0.0 {
        return Err(Error::Domain(format!(
            "length must be > 0 cm, got {length_cm}"
        )));
    }
    Ok(a_norm_percent_per_w_cm2 * length_cm * length_cm)
}

/// Pump power that minimizes the *measured* squeezed level through a
/// detection OPA of power gain `g_power`:
///
/// ```text
/// P* = (ln g_power)^2 / (4 a)
/// ```
///
/// Below `P*` the true squeezing is weak; beyond it the anti-squeezed
/// leakage `R_+ / (1 + G^2)` grows faster than `R_-` falls. The optimum is
/// independent of the loss `rho`, which only shifts the measurable floor.
pub fn optimal_pump(a: f64, g_power: f64, rho: f64) -> Result<f64> {
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::Domain(format!(
            "optimal pump needs a > 0, got {a}"
        )));
    }
    if !g_power.is_finite() || g_power < 1.0 {
        return Err(Error::Domain(format!(
            "detection power gain must be >= 1, got {g_power}"
        )));
    }
    check_loss_fraction(rho)?;
    let ln_g = g_power.ln();
    Ok(ln_g * ln_g / (4.0 * a))
}

/// Evaluate [`opa_output`] over a list of pump powers, preserving order.
pub fn pump_sweep(params: &OpaParams, pumps_w: &[f64]) -> Result<Vec<(f64, NoiseLevels)>> {
    params.validate()?;
    pumps_w
        .iter()
        .map(|&p| {
            let levels = opa_output(params.shg_coeff_per_watt, p, params.loss_at_pump(p))?;
            Ok((p, levels))
        })
        .collect()
}
