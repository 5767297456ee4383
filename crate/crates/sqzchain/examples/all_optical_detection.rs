//! Finite-gain effects in all-optical squeezing detection.
//!
//! An amplifying OPA in front of a plain intensity detector replaces the
//! electrical homodyne: one quadrature is amplified by the power gain G,
//! the orthogonal one attenuated, so the normalized intensities mix the
//! true noise pair with weights G^2/(1+G^2) and 1/(1+G^2). The readout is
//! always pessimistic about squeezing, and the branch sum is conserved.
//!
//! Run with: `cargo run --example all_optical_detection`

use sqzchain::{antisqueeze_suppression, measured_levels, to_decibels, NoiseLevels};

fn main() -> sqzchain::Result<()> {
    // generated light at the fitted device optimum
    let levels = NoiseLevels::new(0.2179, 79.21)?;
    println!(
        "true levels: {:.2} dB / {:+.2} dB",
        levels.r_minus_db(),
        levels.r_plus_db()
    );
    println!();
    println!("gain [dB]   suppression    detected R'- [dB]   penalty [dB]");
    for gain_db in [10.0, 15.0, 20.0, 25.0, 30.0, 40.0] {
        let gain = 10f64.powf(gain_db / 10.0);
        let detected = measured_levels(levels, gain)?;
        println!(
            "  {gain_db:>5.1}     {:>10.3e}       {:>8.2}         {:>6.3}",
            antisqueeze_suppression(gain)?,
            detected.rp_minus_db(),
            detected.rp_minus_db() - levels.r_minus_db()
        );
    }

    // the mixture conserves the branch sum at any gain
    let detected = measured_levels(levels, 100.0)?;
    println!();
    println!(
        "branch sum: true {:.6} = detected {:.6}",
        levels.r_minus() + levels.r_plus(),
        detected.rp_minus() + detected.rp_plus()
    );

    // with 20 dB of gain the anti-squeezing bleeds in at 1/(1+G^2)
    let leak = antisqueeze_suppression(100.0)? * levels.r_plus();
    println!(
        "anti-squeezed leakage into the squeezed reading at 20 dB: {:.5} ({:.2} dB of the floor)",
        leak,
        to_decibels(leak)?
    );
    Ok(())
}
