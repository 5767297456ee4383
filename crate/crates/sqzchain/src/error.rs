//! Error types shared across the crate.
//!
//! Every variant carries a stable machine-readable code (the `E_*` prefix in
//! its display form) so callers and scripts can dispatch on failures without
//! parsing prose. The CLI maps codes to process exit status: configuration
//! and input-parsing failures exit with 2, numeric and nonphysical failures
//! with 3.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All failure modes of the library and CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violated a precondition (negative pump power, loss
    /// fraction outside `[0, 1)`, non-finite input, ...).
    #[error("E_DOMAIN: {0}")]
    Domain(String),

    /// A loss inversion was requested for a level at or below the
    /// loss-induced vacuum floor; no physical input state can explain it.
    #[error("E_NONPHYSICAL: {0}")]
    Nonphysical(String),

    /// Too few independent observations to determine the parameters.
    #[error("E_UNDERDETERMINED: {0}")]
    Underdetermined(String),

    /// Observations carry no information about the parameters at all
    /// (every pump power is zero, so every model output is vacuum).
    #[error("E_SINGULAR: {0}")]
    SingularInformation(String),

    /// Malformed config text (bad section header, missing `=`, unparsable
    /// number). Carries the 1-based line number.
    #[error("E_CONFIG_SYNTAX: line {line}: {message}")]
    ConfigSyntax { line: usize, message: String },

    /// A key that is not part of the config schema.
    #[error("E_CONFIG_UNKNOWN_KEY: line {line}: {message}")]
    ConfigUnknownKey { line: usize, message: String },

    /// A key required by the invoked command is absent.
    #[error("E_CONFIG_MISSING_KEY: {0}")]
    ConfigMissingKey(String),

    /// A config value parsed but fails its range or consistency check.
    #[error("E_CONFIG_RANGE: {0}")]
    ConfigValue(String),

    /// Malformed input data (CSV) supplied to a command.
    #[error("E_DATA: {0}")]
    DataFormat(String),

    /// Internal invariant breach (ragged table rows, ...).
    #[error("E_INTERNAL: {0}")]
    Internal(String),
}

impl Error {
    /// Stable machine-readable code for this error category.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "E_DOMAIN",
            Error::Nonphysical(_) => "E_NONPHYSICAL",
            Error::Underdetermined(_) => "E_UNDERDETERMINED",
            Error::SingularInformation(_) => "E_SINGULAR",
            Error::ConfigSyntax { .. } => "E_CONFIG_SYNTAX",
            Error::ConfigUnknownKey { .. } => "E_CONFIG_UNKNOWN_KEY",
            Error::ConfigMissingKey(_) => "E_CONFIG_MISSING_KEY",
            Error::ConfigValue(_) => "E_CONFIG_RANGE",
            Error::DataFormat(_) => "E_DATA",
            Error::Internal(_) => "E_INTERNAL",
        }
    }

    /// Process exit status the CLI uses for this error.
    ///
    /// 2 = configuration / input parsing, 3 = numeric / nonphysical.
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::ConfigSyntax { .. }
            | Error::ConfigUnknownKey { .. }
            | Error::ConfigMissingKey(_)
            | Error::ConfigValue(_)
            | Error::DataFormat(_) => 2,
            _ => 3,
        }
    }
}
