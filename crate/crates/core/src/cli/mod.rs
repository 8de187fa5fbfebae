//! Batch front end behind the `eomq` binary.

mod config;
mod emit;
mod run;

pub use config::{
    parse_config, Command, ConfigError, Format, Job, MeanFieldJob, RunConfig, StateKind, VerifySettings, MAX_MODE,
    MAX_SAMPLES, MAX_TONE,
};
pub use emit::{emit, SPECTRUM_HEADER};
pub use run::{
    run, MeanFieldReport, Outcome, PairRow, PhasorRow, SampleRow, Sectors, SpectrumReport, SpectrumRow,
    TwoPhotonReport, VerifyReport,
};

use crate::phase_modulator::Model;
use std::path::{Path, PathBuf};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("engine error: {0}")]
    Engine(#[from] crate::error::Error),
    #[error("config command `{found}` does not match requested `{requested}`")]
    CommandMismatch {
        requested: &'static str,
        found: &'static str,
    },
    #[error("verification failed")]
    VerifyFailed,
}

impl CliError {
    /// 2 for I/O failures, 1 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Write { .. } => 2,
            _ => 1,
        }
    }
}

/// Command-line overrides applied on top of the document.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub format: Option<Format>,
    pub model: Option<Model>,
    pub tolerance_scale: Option<f64>,
}

pub fn load_config(path: &Path) -> Result<RunConfig, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(parse_config(&text)?)
}

/// Parses (when a path is given), runs and renders one invocation.
///
/// The rendered document is returned even when verification fails, so the
/// caller can still write the report; the flag is `false` in that case.
pub fn execute(requested: Command, config: Option<&Path>, overrides: &Overrides) -> Result<(String, bool), CliError> {
    let mut cfg = match config {
        Some(path) => load_config(path)?,
        None if requested == Command::Verify => RunConfig::verify_only(),
        None => {
            return Err(ConfigError::Schema {
                path: "--config".into(),
                message: format!("`{}` needs a configuration file", requested.name()),
            }
            .into())
        }
    };
    if cfg.command != requested {
        return Err(CliError::CommandMismatch {
            requested: requested.name(),
            found: cfg.command.name(),
        });
    }
    if let Some(format) = overrides.format {
        cfg.format = format;
    }
    if let Some(model) = overrides.model {
        cfg.set_model(model);
    }
    if let Some(scale) = overrides.tolerance_scale {
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(ConfigError::Schema {
                path: "--tolerance-scale".into(),
                message: "must be a positive finite number".into(),
            }
            .into());
        }
        cfg.verify.tolerance_scale = scale;
    }
    let outcomes = run(&cfg)?;
    let ok = outcomes.iter().all(Outcome::succeeded);
    Ok((emit(&outcomes, cfg.format, cfg.swept), ok))
}
