use thiserror::Error;

/// Errors raised by the physics engine.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("mode index must be >= 1, got {0}")]
    InvalidMode(i64),
    #[error("RF tone index must be >= 1, got {0}")]
    InvalidTone(i64),
    #[error("sideband order must be >= 1, got {0}")]
    InvalidOrder(i64),
    #[error("offset r0 = {r0} outside [0, {tone})")]
    InvalidOffset { r0: i64, tone: u64 },
    #[error("{name} = {value} outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
    #[error("generator is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("matrix dimension must be positive")]
    EmptyMatrix,
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("sideband mode {mode} falls off the positive lattice")]
    OffLattice { mode: i64 },
    #[error("duplicate tone index {0} within one modulator")]
    DuplicateTone(u64),
    #[error("input port must be 1 or 2, got {0}")]
    InvalidPort(u8),
    #[error("{0}")]
    Unsupported(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
