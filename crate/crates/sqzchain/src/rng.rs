//! Deterministic random numbers for synthetic measurement noise.
//!
//! The generator is pinned to a fixed, published algorithm so that
//! identical seeds reproduce identical synthetic data sets everywhere,
//! including re-implementations in other languages:
//!
//! * **SplitMix64** (Steele, Lea, Flood; the `splitmix64` reference
//!   sequence): 64-bit state advanced by the golden-gamma constant
//!   `0x9e3779b97f4a7c15`, output mixed with the standard two-round
//!   xor-shift-multiply finalizer.
//! * **Uniforms** in the open interval (0, 1): the top 53 bits of an
//!   output word, offset by half an ulp: `((x >> 11) + 0.5) * 2^-53`.
//! * **Gaussians** via the Box-Muller transform: each pair of uniforms
//!   `(u1, u2)` yields `z0 = sqrt(-2 ln u1) cos(2 pi u2)` and
//!   `z1 = sqrt(-2 ln u1) sin(2 pi u2)`, returned in that order.

/// SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    /// Next raw 64-bit word.
    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw in the open interval (0, 1).
    pub fn next_uniform(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / (1u64 << 53) as f64)
    }
}

/// Standard-normal stream over SplitMix64 via Box-Muller.
#[derive(Debug, Clone)]
pub struct GaussianSource {
    rng: SplitMix64,
    spare: Option<f64>,
}

impl GaussianSource {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: SplitMix64::new(seed),
            spare: None,
        }
    }

    /// Next standard-normal draw. Draws two uniforms per Box-Muller pair;
    /// the sine branch is cached and returned on the following call.
    pub fn next_normal(&mut self) -> f64 {
        if let Some(z) = self.spare.take() {
            return z;
        }
        let u1 = self.rng.next_uniform();
        let u2 = self.rng.next_uniform();
        let radius = (-2.0 * u1.ln()).sqrt();
        let angle = 2.0 * std::f64::consts::PI * u2;
        self.spare = Some(radius * angle.sin());
        radius * angle.cos()
    }
}
