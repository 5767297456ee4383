//! Quadrature-noise algebra relative to the vacuum level.
//!
//! All quantities here are linear variance ratios with the vacuum (shot)
//! noise normalized to 1: a squeezed quadrature has variance below 1, its
//! anti-squeezed partner above 1. Decibels are an I/O view only; every
//! computation stays linear so chained conversions do not accumulate
//! exp/log error.
//!
//! The loss model is the beam-splitter channel: a stage with loss fraction
//! `rho` mixes in vacuum and maps a variance `r` to
//!
//! ```text
//! r  ->  rho + (1 - rho) * r
//! ```
//!
//! Serial stages compose as `1 - prod(1 - rho_i)` and the channel can be
//! inverted exactly as long as the measured level sits above the
//! loss-induced vacuum floor.

use crate::error::{Error, Result};

/// A pair of quadrature noise variances relative to vacuum = 1.
///
/// The constructor orders the pair so `r_minus <= r_plus`; the minus
/// branch is always the (more) squeezed quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseLevels {
    r_minus: f64,
    r_plus: f64,
}

impl NoiseLevels {
    /// Build a noise pair from two linear variance ratios.
    ///
    /// Both must be finite and strictly positive. The arguments may come in
    /// either order; they are sorted so that `r_minus() <= r_plus()`.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        for (label, v) in [("first", a), ("second", b)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Domain(format!(
                    "noise level ({label} component) must be finite and > 0, got {v}"
                )));
            }
        }
        let (r_minus, r_plus) = if a <= b { (a, b) } else { (b, a) };
        Ok(Self { r_minus, r_plus })
    }

    /// The vacuum state: both quadratures at the shot-noise level.
    pub fn vacuum() -> Self {
        Self {
            r_minus: 1.0,
            r_plus: 1.0,
        }
    }

    /// Squeezed-branch variance (linear, <= `r_plus`).
    pub fn r_minus(&self) -> f64 {
        self.r_minus
    }

    /// Anti-squeezed-branch variance (linear, >= `r_minus`).
    pub fn r_plus(&self) -> f64 {
        self.r_plus
    }

    /// Squeezed branch in dB relative to vacuum (negative when squeezed).
    pub fn r_minus_db(&self) -> f64 {
        to_decibels(self.r_minus).expect("invariant: r_minus > 0")
    }

    /// Anti-squeezed branch in dB relative to vacuum.
    pub fn r_plus_db(&self) -> f64 {
        to_decibels(self.r_plus).expect("invariant: r_plus > 0")
    }

    /// Send both quadratures through a loss channel of fraction `rho`.
    ///
    /// Each variance maps as `r -> rho + (1 - rho) * r`, pulling the pair
    /// affinely toward vacuum. Ordering is preserved. `rho` must lie in
    /// `[0, 1)`.
    pub fn apply_loss(&self, rho: f64) -> Result<Self> {
        check_loss_fraction(rho)?;
        Ok(Self {
            r_minus: rho + (1.0 - rho) * self.r_minus,
            r_plus: rho + (1.0 - rho) * self.r_plus,
        })
    }

    /// Invert a loss channel of fraction `rho`: `r -> (r - rho) / (1 - rho)`.
    ///
    /// Fails with a nonphysical-inversion error if either component sits at
    /// or below `rho` — such a level cannot be the output of the channel for
    /// any physical input.
    pub fn remove_loss(&self, rho: f64) -> Result<Self> {
        check_loss_fraction(rho)?;
        for (label, v) in [("r_minus", self.r_minus), ("r_plus", self.r_plus)] {
            if v <= rho {
                return Err(Error::Nonphysical(format!(
                    "cannot remove loss {rho}: measured {label} = {v} is at or below \
                     the loss-induced vacuum floor"
                )));
            }
        }
        Ok(Self {
            r_minus: (self.r_minus - rho) / (1.0 - rho),
            r_plus: (self.r_plus - rho) / (1.0 - rho),
        })
    }

    /// Variance of the quadrature at angle `theta` from the squeezed axis:
    /// `r_minus * cos^2(theta) + r_plus * sin^2(theta)`.
    ///
    /// Pi-periodic in `theta` and bounded by `[r_minus, r_plus]`.
    pub fn project_phase(&self, theta: f64) -> f64 {
        let c = theta.cos();
        let s = theta.sin();
        self.r_minus * c * c + self.r_plus * s * s
    }
}

/// One serial loss stage with a short label.
#[derive(Debug, Clone, PartialEq)]
pub struct LossElement {
    name: String,
    fraction: f64,
}

impl LossElement {
    /// A named loss stage; `fraction` must lie in `[0, 1)`.
    pub fn new(name: impl Into<String>, fraction: f64) -> Result<Self> {
        check_loss_fraction(fraction)?;
        Ok(Self {
            name: name.into(),
            fraction,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn fraction(&self) -> f64 {
        self.fraction
    }
}

/// An ordered list of serial loss stages.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LossBudget {
    elements: Vec<LossElement>,
}

impl LossBudget {
    /// Empty budget (no loss).
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, element: LossElement) {
        self.elements.push(element);
    }

    /// Budget of anonymous stages, named `loss1`, `loss2`, ...
    pub fn from_fractions(fractions: &[f64]) -> Result<Self> {
        let mut budget = Self::new();
        for (i, &f) in fractions.iter().enumerate() {
            budget.push(LossElement::new(format!("loss{}", i + 1), f)?);
        }
        Ok(budget)
    }

    pub fn elements(&self) -> &[LossElement] {
        &self.elements
    }
}

/// Convert a linear variance ratio to decibels: `10 * log10(r)`.
///
/// `r` must be finite and strictly positive.
pub fn to_decibels(r: f64) -> Result<f64> {
    if !r.is_finite() || r <= 0.0 {
        return Err(Error::Domain(format!(
            "dB conversion requires a finite ratio > 0, got {r}"
        )));
    }
    Ok(10.0 * r.log10())
}

/// Convert a signed dB value to a linear variance ratio: `10^(x / 10)`.
pub fn from_decibels(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::Domain(format!(
            "dB conversion requires a finite value, got {x}"
        )));
    }
    Ok(10f64.powf(x / 10.0))
}

/// Total loss of serial stages: `1 - prod(1 - rho_i)`.
///
/// Independent of element order; the empty budget composes to 0.
pub fn compose_losses(budget: &LossBudget) -> f64 {
    let transmission: f64 = budget
        .elements
        .iter()
        .map(|e| 1.0 - e.fraction)
        .product();
    1.0 - transmission
}

pub(crate) fn check_loss_fraction(rho: f64) -> Result<()> {
    if !rho.is_finite() || !(0.0..1.0).contains(&rho) {
        return Err(Error::Domain(format!(
            "loss fraction must lie in [0, 1), got {rho}"
        )));
    }
    Ok(())
}
