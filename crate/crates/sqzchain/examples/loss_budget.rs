//! Loss-budget bookkeeping for a fiber-pigtailed OPA module.
//!
//! Composes the ideal module budget (coupling optics on each side plus
//! the waveguide), compares it with the measured insertion loss, and
//! decomposes the measured total back into per-side coupling losses.
//!
//! Run with: `cargo run --example loss_budget`

use sqzchain::{compose_losses, per_side_loss, LossBudget, LossElement};

fn main() -> sqzchain::Result<()> {
    // ideal budget: 6% of optics per side around a 7% waveguide
    let mut ideal = LossBudget::new();
    ideal.push(LossElement::new("input optics", 0.06)?);
    ideal.push(LossElement::new("waveguide", 0.07)?);
    ideal.push(LossElement::new("output optics", 0.06)?);

    println!("ideal module budget:");
    for element in ideal.elements() {
        println!("  {:<14} {:>5.1}%", element.name(), element.fraction() * 100.0);
    }
    let ideal_total = compose_losses(&ideal);
    println!("  {:<14} {:>5.1}%  (serial composition)", "total", ideal_total * 100.0);

    // the measured insertion loss came out at 21%; split the excess
    // symmetrically over the two coupling sides
    let measured_total = 0.21;
    let waveguide = 0.07;
    let side = per_side_loss(measured_total, waveguide)?;
    println!();
    println!(
        "measured total {:.1}% with a {:.1}% waveguide -> {:.2}% per coupling side",
        measured_total * 100.0,
        waveguide * 100.0,
        side * 100.0
    );

    // the detection path sees one output side and one input side
    let detection = LossBudget::from_fractions(&[side, side])?;
    println!(
        "detection path (output side + input side): {:.2}%",
        compose_losses(&detection) * 100.0
    );
    Ok(())
}
