//! Infer the squeezing level at the waveguide output from a detected
//! level and the known detection loss.
//!
//! A measured level is the on-chip level pulled toward vacuum by every
//! loss stage after generation; removing a known loss inverts that
//! channel. The inversion fails loudly if the requested level sits at or
//! below the loss floor, where no physical input could explain it.
//!
//! Run with: `cargo run --example onchip_inference`

use sqzchain::{from_decibels, infer_onchip, NoiseLevels};

fn main() -> sqzchain::Result<()> {
    let measured_db = -6.4;
    let detection_loss = 0.15; // two 8% coupling stages

    let onchip_db = infer_onchip(measured_db, detection_loss)?;
    println!(
        "measured {measured_db} dB through {:.0}% detection loss",
        detection_loss * 100.0
    );
    println!("on-chip squeezing: {onchip_db:.2} dB");

    // forward check: pushing the inferred level back through the loss
    // reproduces the measurement
    let onchip = NoiseLevels::new(from_decibels(onchip_db)?, 100.0)?;
    let roundtrip = onchip.apply_loss(detection_loss)?;
    println!("round trip: {:.2} dB", roundtrip.r_minus_db());

    // sensitivity: one extra tenth of a dB at the detector is worth
    // roughly three tenths on chip at these levels
    for db in [-6.3, -6.4, -6.5] {
        println!("  measured {db:>5.1} dB -> on-chip {:>6.2} dB", infer_onchip(db, detection_loss)?);
    }

    // a level below the loss floor has no physical preimage
    match infer_onchip(-9.0, detection_loss) {
        Err(err) => println!("infer_onchip(-9.0 dB, 0.15): {err}"),
        Ok(_) => unreachable!("below the floor"),
    }
    Ok(())
}
