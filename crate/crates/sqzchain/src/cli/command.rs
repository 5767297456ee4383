//! The five commands behind the `sqzchain` binary.
//!
//! Each command reads its inputs from a [`RunConfig`] (plus an optional
//! data CSV for `fit`), and produces a human-readable summary and a CSV
//! document. Output is deterministic: identical config, data and seed
//! give byte-identical results.

use std::fmt;
use std::str::FromStr;

use crate::cli::config::RunConfig;
use crate::cli::table::{write_csv, Cell, Table};
use crate::detection::{chain_forward, infer_onchip, per_side_loss, ChainConfig};
use crate::error::{Error, Result};
use crate::estimation::{fit_opa_params, synth_sweep, SweepObservation};
use crate::noise::{compose_losses, from_decibels, to_decibels, LossBudget};
use crate::opa::{opa_output, optimal_pump, OpaParams};
use crate::spectral::{
    synthesize_spectrum, DetectorRolloff, FiberSegment, PhaseMatchingEnvelope, SpectralGrid,
};

/// Command selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CommandName {
    Sweep,
    Fit,
    Spectrum,
    Budget,
    Infer,
}

impl FromStr for CommandName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sweep" => Ok(Self::Sweep),
            "fit" => Ok(Self::Fit),
            "spectrum" => Ok(Self::Spectrum),
            "budget" => Ok(Self::Budget),
            "infer" => Ok(Self::Infer),
            other => Err(Error::ConfigValue(format!(
                "unknown command `{other}`; expected sweep, fit, spectrum, budget or infer"
            ))),
        }
    }
}

impl fmt::Display for CommandName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::Sweep => "sweep",
            Self::Fit => "fit",
            Self::Spectrum => "spectrum",
            Self::Budget => "budget",
            Self::Infer => "infer",
        };
        f.write_str(name)
    }
}

/// What a command run produces.
#[derive(Debug, Clone, PartialEq)]
pub struct CommandOutcome {
    /// Human-readable summary, ends with a newline.
    pub summary: String,
    /// CSV document (may be a single data row for `budget` / `infer`).
    pub csv: String,
}

/// Run one command against a parsed config.
///
/// `data_csv` is the text of the `--data` file where required (`fit`);
/// `seed` feeds the synthetic-noise generator where one is used (`sweep`
/// with a nonzero `noise_sigma_db`).
pub fn run_command(
    command: CommandName,
    config: &RunConfig,
    data_csv: Option<&str>,
    seed: u64,
) -> Result<CommandOutcome> {
    match command {
        CommandName::Sweep => run_sweep(config, seed),
        CommandName::Fit => run_fit(config, data_csv),
        CommandName::Spectrum => run_spectrum(config),
        CommandName::Budget => run_budget(config),
        CommandName::Infer => run_infer(config),
    }
}

/// SHG coefficient in 1/W from the config: either the device total
/// `shg_percent_per_watt`, or `shg_normalized_percent_per_watt_cm2`
/// scaled by `length_cm` squared. Exactly one route must be configured.
fn shg_coeff_per_watt(config: &RunConfig) -> Result<f64> {
    let total = config.scalar("chain", "shg_percent_per_watt");
    let normalized = config.scalar("chain", "shg_normalized_percent_per_watt_cm2");
    match (total, normalized) {
        (Some(_), Some(_)) => Err(Error::ConfigValue(
            "[chain] shg_percent_per_watt and shg_normalized_percent_per_watt_cm2 \
             are mutually exclusive"
                .into(),
        )),
        (Some(percent), None) => Ok(percent / 100.0),
        (None, Some(norm)) => {
            let length = config.require_scalar("chain", "length_cm")?;
            Ok(crate::opa::shg_coeff_from_normalized(norm, length)? / 100.0)
        }
        (None, None) => Err(Error::ConfigMissingKey(
            "[chain] shg_percent_per_watt (or shg_normalized_percent_per_watt_cm2 \
             with length_cm) is required by this command"
                .into(),
        )),
    }
}

fn detection_gain(config: &RunConfig) -> Result<f64> {
    let gain_db = config.require_scalar("chain", "gain_db")?;
    let g = from_decibels(gain_db)?;
    if g < 1.0 {
        return Err(Error::ConfigValue(format!(
            "[chain] gain_db must give a linear power gain >= 1, got {gain_db} dB"
        )));
    }
    Ok(g)
}

fn sweep_pumps(config: &RunConfig) -> Result<Vec<f64>> {
    let explicit = config.list("sweep", "pumps_w");
    let range_keys = [
        config.scalar("sweep", "pump_min_w"),
        config.scalar("sweep", "pump_max_w"),
        config.integer("sweep", "pump_count").map(|v| v as f64),
    ];
    let any_range = range_keys.iter().any(Option::is_some);
    match (explicit, any_range) {
        (Some(_), true) => Err(Error::ConfigValue(
            "[sweep] pumps_w and the pump_min_w/pump_max_w/pump_count range \
             are mutually exclusive"
                .into(),
        )),
        (Some(pumps), false) => Ok(pumps.to_vec()),
        (None, _) => {
            let min = config.require_scalar("sweep", "pump_min_w")?;
            let max = config.require_scalar("sweep", "pump_max_w")?;
            let count = config
                .integer("sweep", "pump_count")
                .ok_or_else(|| Error::ConfigMissingKey(
                    "[sweep] pump_count is required with pump_min_w/pump_max_w".into(),
                ))?;
            if max < min {
                return Err(Error::ConfigValue(format!(
                    "[sweep] pump_max_w {max} is below pump_min_w {min}"
                )));
            }
            if count == 1 {
                return Ok(vec![min]);
            }
            let step = (max - min) / (count - 1) as f64;
            Ok((0..count).map(|i| min + step * i as f64).collect())
        }
    }
}

fn run_sweep(config: &RunConfig, seed: u64) -> Result<CommandOutcome> {
    let a = shg_coeff_per_watt(config)?;
    let rho = config.require_scalar("chain", "rho")?;
    let gain = detection_gain(config)?;
    let pumps = sweep_pumps(config)?;
    let sigma = config.scalar("sweep", "noise_sigma_db").unwrap_or(0.0);

    let measured = synth_sweep(a, rho, gain, &pumps, sigma, seed)?;

    let mut table = Table::new(&[
        "pump_w",
        "r_minus_db",
        "r_plus_db",
        "rp_minus_db",
        "rp_plus_db",
    ]);
    for obs in &measured {
        let levels = opa_output(a, obs.pump_w, rho)?;
        table.push_row(vec![
            obs.pump_w.into(),
            levels.r_minus_db().into(),
            levels.r_plus_db().into(),
            obs.measured_minus_db.into(),
            obs.measured_plus_db.into(),
        ]);
    }

    let mut summary = String::new();
    summary.push_str(&format!(
        "sweep: a = {:.6} 1/W ({:.1} %/W), rho = {:.6} ({:.1}%), gain = {:.2} dB (G = {:.4})\n",
        a,
        a * 100.0,
        rho,
        rho * 100.0,
        to_decibels(gain)?,
        gain,
    ));
    summary.push_str(&format!(
        "points: {} over [{:.6}, {:.6}] W, noise sigma = {} dB, seed = {}\n",
        pumps.len(),
        pumps.iter().cloned().fold(f64::INFINITY, f64::min),
        pumps.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
        sigma,
        seed,
    ));
    if a > 0.0 {
        let p_star = optimal_pump(a, gain, rho)?;
        let best = chain_forward(
            &ChainConfig::new(OpaParams::new(a, rho, 4.5)?, gain, rho, LossBudget::new())?,
            p_star,
        )?;
        summary.push_str(&format!(
            "model optimum: P* = {:.6} W, measured squeezing there = {:.2} dB\n",
            p_star,
            best.rp_minus_db(),
        ));
    }
    Ok(CommandOutcome {
        summary,
        csv: write_csv(&table)?,
    })
}

/// Parse `fit` input data: columns `pump_w, rp_minus_db, rp_plus_db[, weight]`.
fn parse_sweep_csv(text: &str) -> Result<Vec<SweepObservation>> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::DataFormat("data CSV is empty".into()))?;
    let columns: Vec<&str> = header.split(',').map(str::trim).collect();
    let with_weight = match columns.as_slice() {
        ["pump_w", "rp_minus_db", "rp_plus_db"] => false,
        ["pump_w", "rp_minus_db", "rp_plus_db", "weight"] => true,
        // sweep-command output can be fed straight back into fit
        ["pump_w", "r_minus_db", "r_plus_db", "rp_minus_db", "rp_plus_db"] => {
            return parse_sweep_command_output(lines);
        }
        _ => {
            return Err(Error::DataFormat(format!(
                "unexpected data header `{header}`; expected \
                 pump_w,rp_minus_db,rp_plus_db[,weight]"
            )))
        }
    };
    let mut observations = Vec::new();
    for (idx, line) in lines {
        let cells = parse_numeric_row(line, idx + 1, if with_weight { 4 } else { 3 })?;
        let obs = if with_weight {
            SweepObservation::with_weight(cells[0], cells[1], cells[2], cells[3])
        } else {
            SweepObservation::new(cells[0], cells[1], cells[2])
        }?;
        observations.push(obs);
    }
    Ok(observations)
}

fn parse_sweep_command_output<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
) -> Result<Vec<SweepObservation>> {
    let mut observations = Vec::new();
    for (idx, line) in lines {
        let cells = parse_numeric_row(line, idx + 1, 5)?;
        observations.push(SweepObservation::new(cells[0], cells[3], cells[4])?);
    }
    Ok(observations)
}

fn parse_numeric_row(line: &str, line_no: usize, expected: usize) -> Result<Vec<f64>> {
    let cells: Vec<&str> = line.split(',').map(str::trim).collect();
    if cells.len() != expected {
        return Err(Error::DataFormat(format!(
            "data line {line_no}: expected {expected} columns, got {}",
            cells.len()
        )));
    }
    cells
        .iter()
        .map(|c| {
            c.parse::<f64>().map_err(|_| {
                Error::DataFormat(format!("data line {line_no}: `{c}` is not a number"))
            })
        })
        .collect()
}

fn run_fit(config: &RunConfig, data_csv: Option<&str>) -> Result<CommandOutcome> {
    let gain = detection_gain(config)?;
    let text = data_csv.ok_or_else(|| {
        Error::DataFormat("fit requires a --data CSV of pump-sweep observations".into())
    })?;
    let observations = parse_sweep_csv(text)?;
    let fit = fit_opa_params(&observations, gain)?;

    let mut table = Table::new(&[
        "a_per_watt",
        "rho",
        "residual_rms_db",
        "converged",
        "a_stderr",
        "rho_stderr",
    ]);
    table.push_row(vec![
        fit.a_per_watt.into(),
        fit.rho.into(),
        fit.residual_rms_db.into(),
        if fit.converged { "true" } else { "false" }.into(),
        fit.parameter_stderr.0.into(),
        fit.parameter_stderr.1.into(),
    ]);

    let summary = format!(
        "fit: {} observations at gain {:.2} dB\n\
         a = {:.6} 1/W ({:.1} %/W), stderr {:.3} 1/W\n\
         rho = {:.6} ({:.2}%), stderr {:.5}\n\
         residual rms = {:.6} dB, converged = {} ({} iterations)\n",
        observations.len(),
        to_decibels(gain)?,
        fit.a_per_watt,
        fit.a_per_watt * 100.0,
        fit.parameter_stderr.0,
        fit.rho,
        fit.rho * 100.0,
        fit.parameter_stderr.1,
        fit.residual_rms_db,
        fit.converged,
        fit.iterations,
    );
    Ok(CommandOutcome {
        summary,
        csv: write_csv(&table)?,
    })
}

fn run_spectrum(config: &RunConfig) -> Result<CommandOutcome> {
    let a = shg_coeff_per_watt(config)?;
    let rho = config.require_scalar("chain", "rho")?;
    let gain = detection_gain(config)?;
    let gain_db = config.require_scalar("chain", "gain_db")?;

    let center = config.require_scalar("spectrum", "center_wavelength_nm")?;
    let min = config.require_scalar("spectrum", "lambda_min_nm")?;
    let max = config.require_scalar("spectrum", "lambda_max_nm")?;
    let points = config
        .integer("spectrum", "points")
        .ok_or_else(|| Error::ConfigMissingKey("[spectrum] points is required".into()))?;
    let pump = config.require_scalar("spectrum", "pump_w")?;

    let grid = SpectralGrid::linspace(center, min, max, points)?;
    let gen_pm = PhaseMatchingEnvelope::new(
        center,
        config
            .scalar("spectrum", "gen_slope_rad_per_m_per_nm")
            .unwrap_or(0.0),
        config.scalar("spectrum", "gen_length_m").unwrap_or(0.045),
    )?;
    let rolloff = DetectorRolloff::new(
        gain_db,
        PhaseMatchingEnvelope::new(
            center,
            config
                .scalar("spectrum", "rolloff_slope_rad_per_m_per_nm")
                .unwrap_or(0.0),
            config
                .scalar("spectrum", "rolloff_length_m")
                .unwrap_or(0.045),
        )?,
    )?;
    let fibers = fiber_segments(config, center)?;

    let generator = OpaParams {
        shg_coeff_per_watt: a,
        effective_loss: rho,
        length_cm: config.scalar("chain", "length_cm").unwrap_or(4.5),
        center_wavelength_nm: center,
        pm_mismatch_slope_rad_per_m_per_nm: gen_pm.mismatch_slope_rad_per_m_per_nm,
        pump_loss_per_watt: 0.0,
    };
    let chain = ChainConfig::new(generator, gain, rho, LossBudget::new())?;
    let rows = synthesize_spectrum(&chain, &grid, &gen_pm, &fibers, &rolloff, pump)?;

    let mut table = Table::new(&[
        "wavelength_nm",
        "sideband_thz",
        "vacuum_db",
        "squeezed_db",
        "antisqueezed_db",
    ]);
    table.comment(
        "qualitative model: ripple positions depend on unpublished pigtail parameters",
    );
    for row in &rows {
        table.push_row(vec![
            row.wavelength_nm.into(),
            row.sideband_thz.into(),
            to_decibels(row.vacuum_level)?.into(),
            to_decibels(row.squeezed_level)?.into(),
            to_decibels(row.antisqueezed_level)?.into(),
        ]);
    }

    let center_row = rows
        .iter()
        .min_by(|x, y| x.sideband_thz.total_cmp(&y.sideband_thz))
        .expect("grid has >= 2 points");
    let total_fiber: f64 = fibers.iter().map(|f| f.length_m).sum();
    let summary = format!(
        "spectrum (qualitative model): {} points over [{:.3}, {:.3}] nm, center {:.3} nm\n\
         pump = {:.6} W, gain = {:.2} dB, fibers = {} segment(s), {:.3} m total\n\
         near center: squeezed {:.2} dB, anti-squeezed {:.2} dB\n",
        rows.len(),
        min,
        max,
        center,
        pump,
        gain_db,
        fibers.len(),
        total_fiber,
        to_decibels(center_row.squeezed_level)?,
        to_decibels(center_row.antisqueezed_level)?,
    );
    Ok(CommandOutcome {
        summary,
        csv: write_csv(&table)?,
    })
}

/// Assemble fiber segments from the parallel lists under `[fibers]`.
fn fiber_segments(config: &RunConfig, default_reference_nm: f64) -> Result<Vec<FiberSegment>> {
    let lengths = match config.list("fibers", "length_m") {
        Some(l) => l,
        None => return Ok(Vec::new()),
    };
    let n = lengths.len();
    let dispersions = config.require_list("fibers", "dispersion_ps_nm_km")?;
    let references = config.list("fibers", "reference_wavelength_nm");
    let phases = config.list("fibers", "static_phase_rad");
    for (key, list) in [
        ("dispersion_ps_nm_km", Some(dispersions)),
        ("reference_wavelength_nm", references),
        ("static_phase_rad", phases),
    ] {
        if let Some(list) = list {
            if list.len() != n {
                return Err(Error::ConfigValue(format!(
                    "[fibers] {key} has {} entries but length_m has {n}",
                    list.len()
                )));
            }
        }
    }
    (0..n)
        .map(|i| {
            FiberSegment::new(
                lengths[i],
                dispersions[i],
                references.map_or(default_reference_nm, |r| r[i]),
                phases.map_or(0.0, |p| p[i]),
            )
        })
        .collect()
}

fn run_budget(config: &RunConfig) -> Result<CommandOutcome> {
    let losses = config.require_list("budget", "losses")?;
    let budget = LossBudget::from_fractions(losses)?;
    let total = compose_losses(&budget);

    let mut summary = format!(
        "budget: {} stage(s): {}\n",
        losses.len(),
        losses
            .iter()
            .map(|l| format!("{:.1}%", l * 100.0))
            .collect::<Vec<_>>()
            .join(" + "),
    );
    summary.push_str(&format!(
        "total: {:.1}% (fraction {:.9})\n",
        total * 100.0,
        total
    ));

    let mut headers = vec!["total_fraction", "total_percent"];
    let mut row: Vec<Cell> = vec![total.into(), (total * 100.0).into()];

    let decomposition = match (
        config.scalar("budget", "total_loss"),
        config.scalar("budget", "waveguide_loss"),
    ) {
        (Some(t), Some(w)) => Some(per_side_loss(t, w)?),
        (None, None) => None,
        _ => {
            return Err(Error::ConfigMissingKey(
                "[budget] total_loss and waveguide_loss must be given together".into(),
            ))
        }
    };
    if let Some(side) = decomposition {
        summary.push_str(&format!(
            "per-side coupling loss: {:.1}% (fraction {:.9})\n",
            side * 100.0,
            side
        ));
        headers.push("per_side_fraction");
        row.push(side.into());
    }

    let mut table = Table::new(&headers);
    table.push_row(row);
    Ok(CommandOutcome {
        summary,
        csv: write_csv(&table)?,
    })
}

fn run_infer(config: &RunConfig) -> Result<CommandOutcome> {
    let measured_db = config.require_scalar("chain", "measured_db")?;
    let detection_loss = config.require_scalar("chain", "detection_loss")?;
    let onchip_db = infer_onchip(measured_db, detection_loss)?;
    let onchip_linear = from_decibels(onchip_db)?;

    let summary = format!(
        "measured: {:.2} dB through detection loss {:.1}%\n\
         on-chip: {:.2} dB (linear {:.9})\n",
        measured_db,
        detection_loss * 100.0,
        onchip_db,
        onchip_linear,
    );

    let mut table = Table::new(&[
        "measured_db",
        "detection_loss",
        "onchip_db",
        "onchip_linear",
    ]);
    table.push_row(vec![
        measured_db.into(),
        detection_loss.into(),
        onchip_db.into(),
        onchip_linear.into(),
    ]);
    Ok(CommandOutcome {
        summary,
        csv: write_csv(&table)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::config::parse_config;

    fn run(command: &str, config_text: &str) -> Result<CommandOutcome> {
        let config = parse_config(config_text).unwrap();
        run_command(command.parse().unwrap(), &config, None, 0)
    }

    #[test]
    fn infer_reports_the_onchip_level() {
        let out = run(
            "infer",
            "[chain]\nmeasured_db = -6.4\ndetection_loss = 0.15\n",
        )
        .unwrap();
        assert!(out.summary.contains("on-chip: -10.31 dB"), "{}", out.summary);
        assert!(out.csv.starts_with("measured_db,detection_loss,onchip_db,onchip_linear\n"));
        assert!(out.csv.contains("-10.3131511"));
    }

    #[test]
    fn budget_composes_the_module_stages() {
        let out = run("budget", "[budget]\nlosses = 0.06, 0.07, 0.06\n").unwrap();
        assert!(out.summary.contains("total: 17.8%"), "{}", out.summary);
        assert!(out.csv.contains("0.178252000"));
    }

    #[test]
    fn budget_with_decomposition() {
        let out = run(
            "budget",
            "[budget]\nlosses = 0.08, 0.08\ntotal_loss = 0.21\nwaveguide_loss = 0.07\n",
        )
        .unwrap();
        assert!(out.summary.contains("total: 15.4%"), "{}", out.summary);
        assert!(
            out.summary.contains("per-side coupling loss: 7.8%"),
            "{}",
            out.summary
        );
        assert!(out.csv.contains("per_side_fraction"));
    }

    #[test]
    fn sweep_of_a_single_zero_pump_is_one_vacuum_row() {
        let out = run(
            "sweep",
            "[chain]\nshg_percent_per_watt = 823\nrho = 0.21\ngain_db = 20\n\
             [sweep]\npumps_w = 0\n",
        )
        .unwrap();
        let lines: Vec<&str> = out.csv.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[1], "0,0,0,0,0");
    }

    #[test]
    fn sweep_range_form_and_gain_conversion() {
        let out = run(
            "sweep",
            "[chain]\nshg_percent_per_watt = 823\nrho = 0.21\ngain_db = 20\n\
             [sweep]\npump_min_w = 0.1\npump_max_w = 0.5\npump_count = 5\n",
        )
        .unwrap();
        assert!(out.summary.contains("G = 100"), "{}", out.summary);
        assert_eq!(out.csv.lines().count(), 6);
    }

    #[test]
    fn fit_round_trips_sweep_output() {
        let sweep = run(
            "sweep",
            "[chain]\nshg_percent_per_watt = 823\nrho = 0.21\ngain_db = 20\n\
             [sweep]\npump_min_w = 0.05\npump_max_w = 0.6\npump_count = 12\n",
        )
        .unwrap();
        let config = parse_config("[chain]\ngain_db = 20\n").unwrap();
        let fit = run_command(CommandName::Fit, &config, Some(&sweep.csv), 0).unwrap();
        assert!(fit.summary.contains("a = 8.23"), "{}", fit.summary);
        assert!(fit.summary.contains("rho = 0.21"), "{}", fit.summary);
        assert!(fit.csv.contains("true"));
    }

    #[test]
    fn fit_without_data_is_a_data_error() {
        let config = parse_config("[chain]\ngain_db = 20\n").unwrap();
        let err = run_command(CommandName::Fit, &config, None, 0).unwrap_err();
        assert_eq!(err.code(), "E_DATA");
    }

    #[test]
    fn spectrum_emits_the_qualitative_marker_and_center_row() {
        let out = run(
            "spectrum",
            "[chain]\nshg_percent_per_watt = 823\nrho = 0.21\ngain_db = 20\n\
             [spectrum]\ncenter_wavelength_nm = 1545.3\nlambda_min_nm = 1490\n\
             lambda_max_nm = 1600.6\npoints = 101\npump_w = 0.6442\n\
             [fibers]\nlength_m = 10\ndispersion_ps_nm_km = 17\n",
        )
        .unwrap();
        assert!(out.csv.starts_with("# qualitative model"), "{}", out.csv);
        assert!(out
            .csv
            .lines()
            .nth(1)
            .unwrap()
            .starts_with("wavelength_nm,sideband_thz,vacuum_db"));
        // grid step 1.106 nm: 1490 + 50 * 1.106 = 1545.3 exactly on a sample
        let center_line = out
            .csv
            .lines()
            .find(|l| l.starts_with("1545.30000"))
            .expect("center row present");
        let cells: Vec<f64> = center_line
            .split(',')
            .map(|c| c.parse().unwrap())
            .collect();
        assert!((cells[1] - 0.0).abs() < 1e-9, "sideband at center");
        assert!((cells[2] - 0.0).abs() < 1e-9, "vacuum 0 dB at center");
        assert!((cells[3] + 6.4627910102517845).abs() < 1e-6, "{}", cells[3]);
    }

    #[test]
    fn missing_required_keys_are_reported() {
        let err = run("infer", "").unwrap_err();
        assert_eq!(err.code(), "E_CONFIG_MISSING_KEY");
        let err = run("sweep", "[chain]\nrho = 0.21\ngain_db = 20\n[sweep]\npumps_w = 0\n")
            .unwrap_err();
        assert_eq!(err.code(), "E_CONFIG_MISSING_KEY");
    }

    #[test]
    fn nonphysical_inference_propagates() {
        let err = run(
            "infer",
            "[chain]\nmeasured_db = -9.0\ndetection_loss = 0.15\n",
        )
        .unwrap_err();
        assert_eq!(err.code(), "E_NONPHYSICAL");
    }
}
