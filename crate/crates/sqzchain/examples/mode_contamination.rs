//! Why a quasi-single-mode waveguide squeezes better: parity selection
//! and the price of multimode contamination.
//!
//! Pair generation into modes (m, n) is driven by the pump's triple
//! overlap with those profiles. A symmetric (Gaussian-like) pump has even
//! parity, so any combination with odd total order integrates to zero —
//! the antisymmetric second mode cannot be pumped against the
//! fundamental. If higher-order content does reach the detector, its
//! anti-squeezed quadrature mixes in and erodes the observed squeezing.
//!
//! Run with: `cargo run --example mode_contamination`

use sqzchain::{multimode_noise, triple_overlap, NoiseLevels, TransverseMode};

fn main() -> sqzchain::Result<()> {
    let pump = TransverseMode::new(0, 1.0)?;
    println!("triple overlaps with a symmetric pump (orders up to 3):");
    println!("  (m, n)   overlap");
    for m in 0..4u32 {
        for n in m..4u32 {
            let value = triple_overlap(
                &pump,
                &TransverseMode::new(m, 1.0)?,
                &TransverseMode::new(n, 1.0)?,
            );
            let marker = if value.abs() < 1e-9 { "parity-forbidden" } else { "" };
            println!("  ({m}, {n})   {value:>10.6}  {marker}");
        }
    }

    // the fundamental alone: 10 dB of squeezing
    let fundamental = NoiseLevels::new(0.1, 10.0)?;
    println!();
    println!(
        "fundamental mode alone: {:.2} dB / {:+.2} dB",
        fundamental.r_minus_db(),
        fundamental.r_plus_db()
    );

    // mix in 10% of vacuum (harmless) versus 10% of an anti-squeezed
    // higher-order contaminant (ruinous)
    let with_vacuum = multimode_noise(&[(fundamental, 0.9), (NoiseLevels::vacuum(), 0.1)])?;
    println!(
        "with 10% vacuum contamination:        {:.2} dB",
        with_vacuum.r_minus_db()
    );
    let contaminant = NoiseLevels::new(10.0, 10.0)?;
    let with_antisqueezed = multimode_noise(&[(fundamental, 0.9), (contaminant, 0.1)])?;
    println!(
        "with 10% anti-squeezed contamination: {:+.2} dB (squeezing destroyed)",
        with_antisqueezed.r_minus_db()
    );
    Ok(())
}
