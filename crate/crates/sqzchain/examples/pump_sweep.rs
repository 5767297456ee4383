//! Squeezing versus pump power for a generation OPA, seen both directly
//! and through a finite-gain detection OPA.
//!
//! The true squeezed level falls monotonically toward the loss floor as
//! the pump grows, but what a finite-gain detector reads turns around:
//! past the optimum pump, anti-squeezed leakage dominates. The optimum
//! has a closed form, checked here against the sweep.
//!
//! Run with: `cargo run --example pump_sweep`

use sqzchain::{
    chain_forward, measured_levels, optimal_pump, pump_sweep, ChainConfig, LossBudget, OpaParams,
};

fn main() -> sqzchain::Result<()> {
    // fitted device: 823 %/W total SHG coefficient, 21% chain loss
    let a = 8.23;
    let rho = 0.21;
    let gain = 100.0; // 20 dB detection OPA

    let params = OpaParams::new(a, rho, 4.5)?;
    let pumps: Vec<f64> = (0..=14).map(|i| i as f64 * 0.05).collect();

    println!("pump [W]   true R- [dB]   true R+ [dB]   detected R'- [dB]");
    for (pump, levels) in pump_sweep(&params, &pumps)? {
        let detected = measured_levels(levels, gain)?;
        println!(
            "  {pump:>5.2}    {:>9.2}      {:>9.2}        {:>9.2}",
            levels.r_minus_db(),
            levels.r_plus_db(),
            detected.rp_minus_db()
        );
    }

    let p_star = optimal_pump(a, gain, rho)?;
    let chain = ChainConfig::new(params, gain, rho, LossBudget::new())?;
    let best = chain_forward(&chain, p_star)?;
    let true_at_best = sqzchain::opa_output(a, p_star, rho)?;
    println!();
    println!(
        "optimal pump {p_star:.4} W: detected squeezing {:.2} dB (true level {:.2} dB)",
        best.rp_minus_db(),
        true_at_best.r_minus_db()
    );
    println!(
        "raising the gain to 26 dB moves the optimum to {:.4} W",
        optimal_pump(a, 400.0, rho)?
    );
    Ok(())
}
