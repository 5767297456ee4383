//! End-to-end tests of the `sqzchain` binary: exit codes, error-code
//! prefixes on stderr, and byte-identical output for identical inputs.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn sqzchain(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sqzchain"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, content).unwrap();
    path.to_str().unwrap().to_owned()
}

const CHAIN: &str = "[chain]\nshg_percent_per_watt = 823\nrho = 0.21\ngain_db = 20\n";

#[test]
fn infer_prints_the_paper_numbers_and_exits_zero() {
    let dir = TempDir::new().unwrap();
    let config = write(
        dir.path(),
        "infer.cfg",
        "[chain]\nmeasured_db = -6.4\ndetection_loss = 0.15\n",
    );
    let out = sqzchain(&["infer", "--config", &config], dir.path());
    assert!(out.status.success(), "{out:?}");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("on-chip: -10.31 dB"), "{stdout}");
    // no --out: the one-row CSV follows the summary
    assert!(stdout.contains("measured_db,detection_loss,onchip_db,onchip_linear"));
}

#[test]
fn budget_summary_matches_the_module_arithmetic() {
    let dir = TempDir::new().unwrap();
    let config = write(dir.path(), "budget.cfg", "[budget]\nlosses = 0.06, 0.07, 0.06\n");
    let out = sqzchain(&["budget", "--config", &config], dir.path());
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("total: 17.8%"), "{stdout}");
}

#[test]
fn config_errors_exit_2_with_machine_code() {
    let dir = TempDir::new().unwrap();
    let config = write(dir.path(), "bad.cfg", "[chain]\nrho = 1.2\n");
    let out = sqzchain(&["infer", "--config", &config], dir.path());
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("E_CONFIG_RANGE"), "{stderr}");

    // unknown key
    let config = write(dir.path(), "unknown.cfg", "[chain]\nrho_eff = 0.2\n");
    let out = sqzchain(&["infer", "--config", &config], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("E_CONFIG_UNKNOWN_KEY"));

    // missing file
    let out = sqzchain(&["infer", "--config", "does-not-exist.cfg"], dir.path());
    assert_eq!(out.status.code(), Some(2));

    // unknown command
    let config = write(dir.path(), "ok.cfg", "[budget]\nlosses = 0.1\n");
    let out = sqzchain(&["explode", "--config", &config], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn nonphysical_errors_exit_3_with_machine_code() {
    let dir = TempDir::new().unwrap();
    let config = write(
        dir.path(),
        "floor.cfg",
        "[chain]\nmeasured_db = -9.0\ndetection_loss = 0.15\n",
    );
    let out = sqzchain(&["infer", "--config", &config], dir.path());
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("E_NONPHYSICAL"), "{stderr}");
}

#[test]
fn sweep_then_fit_through_files_recovers_the_parameters() {
    let dir = TempDir::new().unwrap();
    let sweep_cfg = write(
        dir.path(),
        "sweep.cfg",
        &format!(
            "{CHAIN}[sweep]\npump_min_w = 0.05\npump_max_w = 0.6\npump_count = 12\n\
             noise_sigma_db = 0.1\n"
        ),
    );
    let data = dir.path().join("sweep.csv");
    let out = sqzchain(
        &[
            "sweep",
            "--config",
            &sweep_cfg,
            "--out",
            data.to_str().unwrap(),
            "--seed",
            "42",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    assert!(data.exists());

    let fit_cfg = write(dir.path(), "fit.cfg", "[chain]\ngain_db = 20\n");
    let fit_out = dir.path().join("fit.csv");
    let out = sqzchain(
        &[
            "fit",
            "--config",
            &fit_cfg,
            "--data",
            data.to_str().unwrap(),
            "--out",
            fit_out.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{out:?}");
    let csv = fs::read_to_string(&fit_out).unwrap();
    let row = csv.lines().nth(1).unwrap();
    let cells: Vec<&str> = row.split(',').collect();
    let a: f64 = cells[0].parse().unwrap();
    let rho: f64 = cells[1].parse().unwrap();
    assert!((a - 8.23).abs() < 0.05 * 8.23, "a = {a}");
    assert!((rho - 0.21).abs() < 0.05 * 0.21, "rho = {rho}");
    assert_eq!(cells[3], "true");
}

#[test]
fn identical_inputs_give_byte_identical_outputs() {
    let dir = TempDir::new().unwrap();
    let config = write(
        dir.path(),
        "sweep.cfg",
        &format!("{CHAIN}[sweep]\npumps_w = 0.1, 0.3, 0.6\nnoise_sigma_db = 0.2\n"),
    );
    let run = |out_name: &str| {
        let out_path = dir.path().join(out_name);
        let out = sqzchain(
            &[
                "sweep",
                "--config",
                &config,
                "--out",
                out_path.to_str().unwrap(),
                "--seed",
                "7",
            ],
            dir.path(),
        );
        assert!(out.status.success());
        (out.stdout, fs::read(out_path).unwrap())
    };
    let (stdout_a, csv_a) = run("a.csv");
    let (stdout_b, csv_b) = run("b.csv");
    assert_eq!(stdout_a, stdout_b);
    assert_eq!(csv_a, csv_b);

    // a different seed changes the noisy columns
    let other = sqzchain(
        &[
            "sweep",
            "--config",
            &config,
            "--out",
            dir.path().join("c.csv").to_str().unwrap(),
            "--seed",
            "8",
        ],
        dir.path(),
    );
    assert!(other.status.success());
    assert_ne!(csv_a, fs::read(dir.path().join("c.csv")).unwrap());
}

#[test]
fn spectrum_csv_is_marked_qualitative() {
    let dir = TempDir::new().unwrap();
    let config = write(
        dir.path(),
        "spectrum.cfg",
        &format!(
            "{CHAIN}[spectrum]\ncenter_wavelength_nm = 1545.3\nlambda_min_nm = 1490\n\
             lambda_max_nm = 1600\npoints = 56\npump_w = 0.6442\n\
             [fibers]\nlength_m = 10, 5\ndispersion_ps_nm_km = 17, 17\n"
        ),
    );
    let out_path = dir.path().join("spectrum.csv");
    let out = sqzchain(
        &[
            "spectrum",
            "--config",
            &config,
            "--out",
            out_path.to_str().unwrap(),
        ],
        dir.path(),
    );
    assert!(out.status.success(), "{out:?}");
    let csv = fs::read_to_string(&out_path).unwrap();
    assert!(csv.starts_with("# qualitative model"), "{csv}");
    assert_eq!(csv.lines().count(), 2 + 56);
    assert!(!csv.contains('\r'));
}
