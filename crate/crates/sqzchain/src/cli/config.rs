//! Key-value run configuration with a closed schema.
//!
//! Format: `[section]` headers, `key = value` lines, `#` starts a comment
//! anywhere. Values are decimal numbers with optional exponent; list keys
//! take comma-separated numbers. Unknown sections or keys are rejected,
//! as are values outside their documented range — silently ignoring a
//! misspelled `rho` would be worse than failing loudly.
//!
//! Units are fixed per key and never inferred: pump powers in W, losses
//! as fractions in `[0, 1)` (never percent, never dB), gains in dB,
//! wavelengths in nm, fiber lengths in m, dispersion in ps/(nm km).

use std::collections::BTreeMap;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
enum KeyKind {
    Scalar,
    /// Scalar that must be a nonnegative integer.
    Integer,
    List,
}

struct KeySpec {
    section: &'static str,
    key: &'static str,
    kind: KeyKind,
    /// Human-readable range description, used in error messages.
    range: &'static str,
    check: fn(f64) -> bool,
}

fn any(_: f64) -> bool {
    true
}
fn nonnegative(v: f64) -> bool {
    v >= 0.0
}
fn positive(v: f64) -> bool {
    v > 0.0
}
fn loss_fraction(v: f64) -> bool {
    (0.0..1.0).contains(&v)
}
fn nonpositive(v: f64) -> bool {
    v <= 0.0
}

/// The complete config schema. Every key a command may read is here;
/// everything else is rejected at parse time.
const SCHEMA: &[KeySpec] = &[
    // [chain] - generation OPA, lumped loss and detection gain
    KeySpec { section: "chain", key: "shg_percent_per_watt", kind: KeyKind::Scalar, range: ">= 0", check: nonnegative },
    KeySpec { section: "chain", key: "shg_normalized_percent_per_watt_cm2", kind: KeyKind::Scalar, range: ">= 0", check: nonnegative },
    KeySpec { section: "chain", key: "length_cm", kind: KeyKind::Scalar, range: "> 0", check: positive },
    KeySpec { section: "chain", key: "rho", kind: KeyKind::Scalar, range: "in [0, 1)", check: loss_fraction },
    KeySpec { section: "chain", key: "gain_db", kind: KeyKind::Scalar, range: ">= 0", check: nonnegative },
    KeySpec { section: "chain", key: "measured_db", kind: KeyKind::Scalar, range: "<= 0", check: nonpositive },
    KeySpec { section: "chain", key: "detection_loss", kind: KeyKind::Scalar, range: "in [0, 1)", check: loss_fraction },
    // [sweep] - pump powers, either an explicit list or a range
    KeySpec { section: "sweep", key: "pumps_w", kind: KeyKind::List, range: ">= 0", check: nonnegative },
    KeySpec { section: "sweep", key: "pump_min_w", kind: KeyKind::Scalar, range: ">= 0", check: nonnegative },
    KeySpec { section: "sweep", key: "pump_max_w", kind: KeyKind::Scalar, range: ">= 0", check: nonnegative },
    KeySpec { section: "sweep", key: "pump_count", kind: KeyKind::Integer, range: ">= 1", check: positive },
    KeySpec { section: "sweep", key: "noise_sigma_db", kind: KeyKind::Scalar, range: ">= 0", check: nonnegative },
    // [spectrum] - wavelength grid, envelopes and pump
    KeySpec { section: "spectrum", key: "lambda_min_nm", kind: KeyKind::Scalar, range: "> 0", check: positive },
    KeySpec { section: "spectrum", key: "lambda_max_nm", kind: KeyKind::Scalar, range: "> 0", check: positive },
    KeySpec { section: "spectrum", key: "points", kind: KeyKind::Integer, range: ">= 2", check: |v| v >= 2.0 },
    KeySpec { section: "spectrum", key: "center_wavelength_nm", kind: KeyKind::Scalar, range: "> 0", check: positive },
    KeySpec { section: "spectrum", key: "pump_w", kind: KeyKind::Scalar, range: ">= 0", check: nonnegative },
    KeySpec { section: "spectrum", key: "gen_slope_rad_per_m_per_nm", kind: KeyKind::Scalar, range: "finite", check: any },
    KeySpec { section: "spectrum", key: "gen_length_m", kind: KeyKind::Scalar, range: "> 0", check: positive },
    KeySpec { section: "spectrum", key: "rolloff_slope_rad_per_m_per_nm", kind: KeyKind::Scalar, range: "finite", check: any },
    KeySpec { section: "spectrum", key: "rolloff_length_m", kind: KeyKind::Scalar, range: "> 0", check: positive },
    // [fibers] - parallel lists, one entry per segment
    KeySpec { section: "fibers", key: "length_m", kind: KeyKind::List, range: ">= 0", check: nonnegative },
    KeySpec { section: "fibers", key: "dispersion_ps_nm_km", kind: KeyKind::List, range: "finite", check: any },
    KeySpec { section: "fibers", key: "reference_wavelength_nm", kind: KeyKind::List, range: "> 0", check: positive },
    KeySpec { section: "fibers", key: "static_phase_rad", kind: KeyKind::List, range: "finite", check: any },
    // [budget] - serial loss stages and decomposition inputs
    KeySpec { section: "budget", key: "losses", kind: KeyKind::List, range: "in [0, 1)", check: loss_fraction },
    KeySpec { section: "budget", key: "total_loss", kind: KeyKind::Scalar, range: "in [0, 1)", check: loss_fraction },
    KeySpec { section: "budget", key: "waveguide_loss", kind: KeyKind::Scalar, range: "in [0, 1)", check: loss_fraction },
];

fn lookup(section: &str, key: &str) -> Option<&'static KeySpec> {
    SCHEMA.iter().find(|s| s.section == section && s.key == key)
}

fn known_section(section: &str) -> bool {
    SCHEMA.iter().any(|s| s.section == section)
}

/// A parsed, schema-validated configuration document.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct RunConfig {
    values: BTreeMap<(String, String), Vec<f64>>,
}

impl RunConfig {
    /// Optional scalar; `None` when the key is absent.
    pub fn scalar(&self, section: &str, key: &str) -> Option<f64> {
        self.values
            .get(&(section.to_owned(), key.to_owned()))
            .map(|v| v[0])
    }

    /// Required scalar; missing-key error otherwise.
    pub fn require_scalar(&self, section: &str, key: &str) -> Result<f64> {
        self.scalar(section, key).ok_or_else(|| {
            Error::ConfigMissingKey(format!("[{section}] {key} is required by this command"))
        })
    }

    /// Optional list; `None` when the key is absent.
    pub fn list(&self, section: &str, key: &str) -> Option<&[f64]> {
        self.values
            .get(&(section.to_owned(), key.to_owned()))
            .map(|v| v.as_slice())
    }

    /// Required list; missing-key error otherwise.
    pub fn require_list(&self, section: &str, key: &str) -> Result<&[f64]> {
        self.list(section, key).ok_or_else(|| {
            Error::ConfigMissingKey(format!("[{section}] {key} is required by this command"))
        })
    }

    /// Optional integer-valued scalar as usize.
    pub fn integer(&self, section: &str, key: &str) -> Option<usize> {
        self.scalar(section, key).map(|v| v as usize)
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Parse and validate configuration text. See the module docs for the
/// format; every error carries its category and, for syntax and
/// unknown-key failures, the offending line number.
pub fn parse_config(text: &str) -> Result<RunConfig> {
    let mut config = RunConfig::default();
    let mut section: Option<String> = None;

    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }

        if let Some(rest) = line.strip_prefix('[') {
            let name = rest.strip_suffix(']').ok_or_else(|| Error::ConfigSyntax {
                line: line_no,
                message: format!("section header `{line}` is missing its closing `]`"),
            })?;
            let name = name.trim();
            if name.is_empty() || name.contains(|c: char| !c.is_ascii_alphanumeric() && c != '_') {
                return Err(Error::ConfigSyntax {
                    line: line_no,
                    message: format!("invalid section name `{name}`"),
                });
            }
            if !known_section(name) {
                return Err(Error::ConfigUnknownKey {
                    line: line_no,
                    message: format!("unknown section [{name}]"),
                });
            }
            section = Some(name.to_owned());
            continue;
        }

        let (key, value_text) = line.split_once('=').ok_or_else(|| Error::ConfigSyntax {
            line: line_no,
            message: format!("expected `key = value`, got `{line}`"),
        })?;
        let key = key.trim();
        if key.is_empty() {
            return Err(Error::ConfigSyntax {
                line: line_no,
                message: "empty key before `=`".into(),
            });
        }
        let section_name = section.as_deref().ok_or_else(|| Error::ConfigSyntax {
            line: line_no,
            message: format!("key `{key}` appears before any [section] header"),
        })?;
        let key_spec = lookup(section_name, key).ok_or_else(|| Error::ConfigUnknownKey {
            line: line_no,
            message: format!("unknown key `{key}` in section [{section_name}]"),
        })?;

        let numbers = parse_numbers(value_text, key_spec, line_no)?;
        let map_key = (section_name.to_owned(), key.to_owned());
        if config.values.contains_key(&map_key) {
            return Err(Error::ConfigSyntax {
                line: line_no,
                message: format!("duplicate key `{key}` in section [{section_name}]"),
            });
        }
        config.values.insert(map_key, numbers);
    }
    Ok(config)
}

fn parse_numbers(value_text: &str, key_spec: &KeySpec, line_no: usize) -> Result<Vec<f64>> {
    let parts: Vec<&str> = match key_spec.kind {
        KeyKind::List => value_text.split(',').collect(),
        _ => vec![value_text],
    };
    let mut numbers = Vec::with_capacity(parts.len());
    for part in parts {
        let token = part.trim();
        if token.is_empty() {
            return Err(Error::ConfigSyntax {
                line: line_no,
                message: format!("empty number in value for `{}`", key_spec.key),
            });
        }
        let value: f64 = token.parse().map_err(|_| Error::ConfigSyntax {
            line: line_no,
            message: format!("cannot parse `{token}` as a number for `{}`", key_spec.key),
        })?;
        if !value.is_finite() {
            return Err(Error::ConfigSyntax {
                line: line_no,
                message: format!("`{}` must be a finite number, got `{token}`", key_spec.key),
            });
        }
        if key_spec.kind == KeyKind::Integer && value.fract() != 0.0 {
            return Err(Error::ConfigValue(format!(
                "line {line_no}: [{}] {} must be an integer, got {value}",
                key_spec.section, key_spec.key
            )));
        }
        if !(key_spec.check)(value) {
            return Err(Error::ConfigValue(format!(
                "line {line_no}: [{}] {} must be {}, got {value}",
                key_spec.section, key_spec.key, key_spec.range
            )));
        }
        numbers.push(value);
    }
    Ok(numbers)
}
