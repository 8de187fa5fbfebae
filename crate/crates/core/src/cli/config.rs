//! JSON run configuration.
//!
//! Parsing has three stages, each with its own error class: JSON syntax,
//! document shape and value ranges (reported with the field path), and
//! cross-field physics consistency.

use crate::eom::{dsb_settings, ssb_settings, Arm, EomConfig, Port, Preset, SsbSide};
use crate::error::Error;
use crate::lattice::{LatticeScale, ModeIndex, RfTone};
use crate::phase_modulator::{Model, MultitonePmConfig, PmConfig, SidebandConvention, ToneDrive, Truncation};
use crate::splitters::{splitter_coeffs, SplitterSpec};
use crate::verify::DEFAULT_SEED;
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::fmt;

/// Largest accepted input mode; keeps ladder arithmetic far from overflow.
pub const MAX_MODE: i64 = 1 << 40;
pub const MAX_TONE: i64 = 1 << 20;
pub const MAX_SAMPLES: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ConfigError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("physics error at `{path}`: {message}")]
    Physics { path: String, message: String },
}

impl ConfigError {
    fn schema(path: impl Into<String>, message: impl fmt::Display) -> Self {
        ConfigError::Schema {
            path: path.into(),
            message: message.to_string(),
        }
    }

    fn physics(path: impl Into<String>, message: impl fmt::Display) -> Self {
        ConfigError::Physics {
            path: path.into(),
            message: message.to_string(),
        }
    }

    fn within(self, prefix: &str) -> Self {
        let join = |p: String| {
            if p == "." {
                prefix.to_string()
            } else {
                format!("{prefix}.{p}")
            }
        };
        match self {
            ConfigError::Schema { path, message } => ConfigError::Schema {
                path: join(path),
                message,
            },
            ConfigError::Physics { path, message } => ConfigError::Physics {
                path: join(path),
                message,
            },
            other => other,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Spectrum,
    Coherent,
    TwoPhoton,
    MeanField,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Spectrum => "spectrum",
            Command::Coherent => "coherent",
            Command::TwoPhoton => "two-photon",
            Command::MeanField => "mean-field",
            Command::Verify => "verify",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StateKind {
    Photon,
    Coherent,
    TwoPhoton,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SplittersDoc {
    input: SplitterSpec<f64>,
    output: SplitterSpec<f64>,
}

fn zero() -> f64 {
    0.0
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ToneDoc {
    index: f64,
    #[serde(default = "zero")]
    rf_phase: f64,
    tone: i64,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum ArmDoc {
    Identity,
    Tone {
        #[serde(default = "zero")]
        bias: f64,
        index: f64,
        #[serde(default = "zero")]
        rf_phase: f64,
        tone: i64,
    },
    Multitone {
        #[serde(default = "zero")]
        bias: f64,
        tones: Vec<ToneDoc>,
        #[serde(default)]
        convention: SidebandConvention,
    },
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArmsDoc {
    pm1: Option<ArmDoc>,
    pm2: Option<ArmDoc>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum DriveDoc {
    Dsb { index: f64, tone: i64 },
    Ssb { index: f64, tone: i64, cancel: SsbSide },
}

fn one_u8() -> u8 {
    1
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct InputDoc {
    #[serde(default = "one_u8")]
    port: u8,
    mode: i64,
    state: Option<StateKind>,
    /// `[re, im]`.
    alpha: Option<[f64; 2]>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TruncationDoc {
    epsilon: Option<f64>,
    margin: Option<usize>,
}

fn one() -> f64 {
    1.0
}

fn tau() -> f64 {
    std::f64::consts::TAU
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MeanFieldDoc {
    #[serde(default = "one_u8")]
    port: u8,
    #[serde(default = "zero")]
    start: f64,
    end: f64,
    samples: usize,
    #[serde(default = "one")]
    speed: f64,
    #[serde(default = "tau")]
    length: f64,
    #[serde(default = "one")]
    field_scale: f64,
}

/// One fully merged point of a document.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct PointDoc {
    command: Command,
    description: Option<String>,
    preset: Option<Preset>,
    splitters: Option<SplittersDoc>,
    arms: Option<ArmsDoc>,
    drive: Option<DriveDoc>,
    input: Option<InputDoc>,
    model: Option<Model>,
    truncation: Option<TruncationDoc>,
    format: Option<Format>,
    mean_field: Option<MeanFieldDoc>,
    seed: Option<u64>,
    tolerance_scale: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeanFieldJob {
    pub port: Port,
    pub start: f64,
    pub end: f64,
    pub samples: usize,
    pub scale: LatticeScale<f64>,
    pub field_scale: f64,
}

/// Everything needed to evaluate one point.
#[derive(Debug, Clone, PartialEq)]
pub struct Job {
    pub eom: EomConfig<f64>,
    pub input: Port,
    pub n0: ModeIndex,
    pub alpha: Complex<f64>,
    pub model: Model,
    pub truncation: Truncation<f64>,
    pub mean_field: Option<MeanFieldJob>,
}

impl Job {
    pub fn has_multitone(&self) -> bool {
        self.eom.arms().iter().any(|a| matches!(a, Arm::Multitone(_)))
    }

    /// Greatest common divisor of all tones in use; sideband orders are
    /// reported in units of it.
    pub fn order_unit(&self) -> u64 {
        let mut g = 0u64;
        for arm in self.eom.arms() {
            match arm {
                Arm::Identity => {}
                Arm::Tone(p) => g = gcd(g, p.tone.get()),
                Arm::Multitone(mt) => {
                    for t in &mt.tones {
                        g = gcd(g, t.tone.get());
                    }
                }
            }
        }
        g.max(1)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifySettings {
    pub seed: u64,
    pub tolerance_scale: f64,
}

impl Default for VerifySettings {
    fn default() -> Self {
        Self {
            seed: DEFAULT_SEED,
            tolerance_scale: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub description: Option<String>,
    pub format: Format,
    /// True when the document carried a `sweep` list; output is then split
    /// into one block per point.
    pub swept: bool,
    pub points: Vec<Job>,
    pub verify: VerifySettings,
}

impl RunConfig {
    /// Configuration for `verify` without a document.
    pub fn verify_only() -> Self {
        Self {
            command: Command::Verify,
            description: None,
            format: Format::Csv,
            swept: false,
            points: Vec::new(),
            verify: VerifySettings::default(),
        }
    }

    pub fn set_model(&mut self, model: Model) {
        for job in &mut self.points {
            job.model = model;
        }
    }
}

fn syntax(err: serde_json::Error) -> ConfigError {
    ConfigError::Syntax {
        line: err.line(),
        column: err.column(),
        message: err.to_string(),
    }
}

/// Recursively overlays `patch` onto `base`; objects merge key by key,
/// anything else replaces.
fn merge(base: &mut Value, patch: &Value) {
    match (base, patch) {
        (Value::Object(b), Value::Object(p)) => {
            for (k, v) in p {
                match b.get_mut(k) {
                    Some(slot) => merge(slot, v),
                    None => {
                        b.insert(k.clone(), v.clone());
                    }
                }
            }
        }
        (slot, p) => *slot = p.clone(),
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig, ConfigError> {
    let mut doc: Value = serde_json::from_str(text).map_err(syntax)?;
    let obj = doc
        .as_object_mut()
        .ok_or_else(|| ConfigError::schema(".", "document must be a JSON object"))?;
    if !obj.contains_key("command") {
        return Err(ConfigError::schema("command", "missing field `command`"));
    }
    let sweep = obj.remove("sweep");

    let overrides = match sweep {
        None => None,
        Some(Value::Array(items)) if !items.is_empty() => Some(items),
        Some(Value::Array(_)) => return Err(ConfigError::schema("sweep", "sweep list is empty")),
        Some(_) => return Err(ConfigError::schema("sweep", "expected a list of override objects")),
    };

    let mut points = Vec::new();
    match &overrides {
        None => points.push((parse_point(doc.clone())?, None)),
        Some(items) => {
            for (i, item) in items.iter().enumerate() {
                let prefix = format!("sweep[{i}]");
                let Value::Object(o) = item else {
                    return Err(ConfigError::schema(prefix, "expected an object"));
                };
                if o.contains_key("command") || o.contains_key("sweep") {
                    return Err(ConfigError::schema(
                        prefix,
                        "`command` and `sweep` cannot be overridden",
                    ));
                }
                let mut merged = doc.clone();
                merge(&mut merged, item);
                points.push((parse_point(merged).map_err(|e| e.within(&prefix))?, Some(prefix)));
            }
        }
    }

    let first = &points[0].0;
    let command = first.command;
    let format = first.format;
    let verify = VerifySettings {
        seed: first.seed.unwrap_or(DEFAULT_SEED),
        tolerance_scale: first.tolerance_scale.unwrap_or(1.0),
    };
    let description = first.description.clone();
    if command == Command::Verify {
        if overrides.is_some() {
            return Err(ConfigError::schema("sweep", "verify does not take a sweep"));
        }
        if !(verify.tolerance_scale > 0.0 && verify.tolerance_scale.is_finite()) {
            return Err(ConfigError::schema(
                "tolerance_scale",
                "must be a positive finite number",
            ));
        }
        return Ok(RunConfig {
            command,
            description,
            format: format.unwrap_or_default(),
            swept: false,
            points: Vec::new(),
            verify,
        });
    }
    Ok(RunConfig {
        command,
        description,
        format: format.unwrap_or_default(),
        swept: overrides.is_some(),
        points: points
            .iter()
            .map(|(p, prefix)| match prefix {
                Some(prefix) => resolve(p).map_err(|e| e.within(prefix)),
                None => resolve(p),
            })
            .collect::<Result<_, _>>()?,
        verify,
    })
}

fn parse_point(doc: Value) -> Result<PointDoc, ConfigError> {
    serde_path_to_error::deserialize(doc).map_err(|e| {
        let path = e.path().to_string();
        ConfigError::schema(path, e.into_inner())
    })
}

fn range(path: &str, e: Error) -> ConfigError {
    match e {
        Error::OutOfRange { name, value, range } => {
            ConfigError::schema(format!("{path}.{name}"), format!("{value} outside {range}"))
        }
        other => ConfigError::schema(path, other),
    }
}

fn tone_at(path: &str, n: i64) -> Result<RfTone, ConfigError> {
    if n > MAX_TONE {
        return Err(ConfigError::schema(path, format!("tone {n} exceeds {MAX_TONE}")));
    }
    RfTone::new(n).map_err(|e| ConfigError::schema(path, e))
}

fn arm(path: &str, doc: &ArmDoc) -> Result<Arm<f64>, ConfigError> {
    match *doc {
        ArmDoc::Identity => Ok(Arm::Identity),
        ArmDoc::Tone {
            bias,
            index,
            rf_phase,
            tone,
        } => {
            let tone = tone_at(&format!("{path}.tone"), tone)?;
            Ok(Arm::Tone(
                PmConfig::new(bias, index, rf_phase, tone).map_err(|e| range(path, e))?,
            ))
        }
        ArmDoc::Multitone {
            bias,
            ref tones,
            convention,
        } => {
            let mut drives = Vec::with_capacity(tones.len());
            for (i, t) in tones.iter().enumerate() {
                let p = format!("{path}.tones[{i}]");
                drives.push(ToneDrive {
                    index: t.index,
                    rf_phase: t.rf_phase,
                    tone: tone_at(&format!("{p}.tone"), t.tone)?,
                });
                PmConfig::new(0.0, t.index, t.rf_phase, drives[i].tone).map_err(|e| range(&p, e))?;
            }
            let cfg = MultitonePmConfig {
                bias,
                tones: drives,
                convention,
            };
            cfg.validate().map_err(|e| match e {
                Error::DuplicateTone(_) => ConfigError::schema(format!("{path}.tones"), e),
                other => range(path, other),
            })?;
            Ok(Arm::Multitone(cfg))
        }
    }
}

fn port_at(path: &str, p: u8) -> Result<Port, ConfigError> {
    Port::new(p).map_err(|e| ConfigError::schema(path, e))
}

fn resolve(doc: &PointDoc) -> Result<Job, ConfigError> {
    let command = doc.command;

    let (splitter_in, splitter_out, preset) = match (&doc.preset, &doc.splitters) {
        (Some(_), Some(_)) => return Err(ConfigError::schema("splitters", "give either `preset` or `splitters`")),
        (None, None) => {
            return Err(ConfigError::schema(
                "preset",
                "one of `preset` or `splitters` is required",
            ))
        }
        (Some(p), None) => {
            let (i, o) = p.splitters();
            (i, o, Some(*p))
        }
        (None, Some(s)) => {
            s.input.validate().map_err(|e| range("splitters.input", e))?;
            s.output.validate().map_err(|e| range("splitters.output", e))?;
            let i = splitter_coeffs(&s.input).map_err(|e| range("splitters.input", e))?;
            let o = splitter_coeffs(&s.output).map_err(|e| range("splitters.output", e))?;
            (i, o, None)
        }
    };

    let (pm1, pm2) = match (&doc.drive, &doc.arms) {
        (Some(_), Some(_)) => return Err(ConfigError::physics("drive", "`drive` and `arms` are exclusive")),
        (Some(drive), None) => {
            if preset.is_some_and(|p| !p.is_dual()) {
                return Err(ConfigError::physics("drive", "dsb/ssb drive needs a dual-drive preset"));
            }
            let pair = match *drive {
                DriveDoc::Dsb { index, tone } => dsb_settings(index, tone_at("drive.tone", tone)?),
                DriveDoc::Ssb { index, tone, cancel } => ssb_settings(index, tone_at("drive.tone", tone)?, cancel),
            }
            .map_err(|e| range("drive", e))?;
            (Arm::Tone(pair.0), Arm::Tone(pair.1))
        }
        (None, Some(arms)) => {
            let pm1 = arms.pm1.as_ref().map_or(Ok(Arm::Identity), |a| arm("arms.pm1", a))?;
            let pm2 = arms.pm2.as_ref().map_or(Ok(Arm::Identity), |a| arm("arms.pm2", a))?;
            if preset.is_some_and(|p| !p.is_dual()) && !pm2.is_identity() {
                return Err(ConfigError::physics(
                    "arms.pm2",
                    "single-drive preset has no upper-arm modulator",
                ));
            }
            (pm1, pm2)
        }
        (None, None) => {
            let skeleton = preset.map_or_else(|| Preset::YbDual.config(), |p| p.config());
            (skeleton.pm1, skeleton.pm2)
        }
    };
    let eom = EomConfig::new(splitter_in, splitter_out, pm1, pm2);

    let input = doc
        .input
        .as_ref()
        .ok_or_else(|| ConfigError::schema("input", "missing field `input`"))?;
    if !(1..=MAX_MODE).contains(&input.mode) {
        return Err(ConfigError::schema(
            "input.mode",
            format!("{} outside [1, {MAX_MODE}]", input.mode),
        ));
    }
    let n0 = ModeIndex::new(input.mode).map_err(|e| ConfigError::schema("input.mode", e))?;
    let port = port_at("input.port", input.port)?;

    let expected = match command {
        Command::Spectrum => StateKind::Photon,
        Command::Coherent | Command::MeanField => StateKind::Coherent,
        Command::TwoPhoton => StateKind::TwoPhoton,
        Command::Verify => StateKind::Photon,
    };
    if let Some(kind) = input.state {
        if kind != expected {
            return Err(ConfigError::physics(
                "input.state",
                format!("state {kind:?} does not fit command `{}`", command.name()),
            ));
        }
    }
    let alpha = match (expected, input.alpha) {
        (StateKind::Coherent, Some([re, im])) if re.is_finite() && im.is_finite() => Complex::new(re, im),
        (StateKind::Coherent, Some(_)) => return Err(ConfigError::schema("input.alpha", "must be finite")),
        (StateKind::Coherent, None) => return Err(ConfigError::schema("input.alpha", "coherent input needs `alpha`")),
        (_, Some(_)) => {
            return Err(ConfigError::physics(
                "input.alpha",
                format!("`alpha` has no meaning for command `{}`", command.name()),
            ))
        }
        (_, None) => Complex::new(1.0, 0.0),
    };

    let mut truncation = Truncation::default();
    if let Some(t) = &doc.truncation {
        if let Some(eps) = t.epsilon {
            truncation.epsilon = eps;
        }
        if let Some(m) = t.margin {
            if m > 1000 {
                return Err(ConfigError::schema("truncation.margin", format!("{m} exceeds 1000")));
            }
            truncation.margin = m;
        }
        truncation.validate().map_err(|e| range("truncation", e))?;
    }

    let mean_field = match (&doc.mean_field, command) {
        (Some(mf), Command::MeanField) => {
            if mf.samples == 0 || mf.samples > MAX_SAMPLES {
                return Err(ConfigError::schema(
                    "mean_field.samples",
                    format!("{} outside [1, {MAX_SAMPLES}]", mf.samples),
                ));
            }
            if !(mf.start.is_finite() && mf.end.is_finite()) {
                return Err(ConfigError::schema("mean_field", "time bounds must be finite"));
            }
            if !mf.field_scale.is_finite() {
                return Err(ConfigError::schema("mean_field.field_scale", "must be finite"));
            }
            Some(MeanFieldJob {
                port: port_at("mean_field.port", mf.port)?,
                start: mf.start,
                end: mf.end,
                samples: mf.samples,
                scale: LatticeScale::new(mf.speed, mf.length).map_err(|e| range("mean_field", e))?,
                field_scale: mf.field_scale,
            })
        }
        (None, Command::MeanField) => {
            return Err(ConfigError::schema(
                "mean_field",
                "mean-field command needs `mean_field` settings",
            ))
        }
        (Some(_), _) => {
            return Err(ConfigError::physics(
                "mean_field",
                format!("settings unused by command `{}`", command.name()),
            ))
        }
        (None, _) => None,
    };

    let job = Job {
        eom,
        input: port,
        n0,
        alpha,
        model: doc.model.unwrap_or_default(),
        truncation,
        mean_field,
    };

    let kinds = job.eom.arms().map(|a| match a {
        Arm::Identity => 0,
        Arm::Tone(_) => 1,
        Arm::Multitone(_) => 2,
    });
    if kinds.contains(&1) && kinds.contains(&2) {
        return Err(ConfigError::physics(
            "arms",
            "single-tone and multitone arms cannot be mixed",
        ));
    }
    if job.has_multitone() {
        if matches!(command, Command::Spectrum | Command::TwoPhoton) {
            return Err(ConfigError::physics(
                "arms",
                format!("multitone arms only support coherent inputs, not `{}`", command.name()),
            ));
        }
        for (a, arm) in job.eom.arms().into_iter().enumerate() {
            if let Arm::Multitone(mt) = arm {
                for (i, t) in mt.tones.iter().enumerate() {
                    if t.tone.get() >= n0.get() {
                        return Err(ConfigError::physics(
                            format!("arms.pm{}.tones[{i}].tone", a + 1),
                            format!("lower sideband of mode {n0} falls off the lattice"),
                        ));
                    }
                }
            }
        }
    }
    Ok(job)
}

#[cfg(test)]
mod tests {
    use super::*;

    const DSB: &str = r#"{
        "command": "spectrum",
        "preset": "yb_dual",
        "drive": {"kind": "dsb", "index": 0.5, "tone": 3},
        "input": {"port": 1, "mode": 100}
    }"#;

    #[test]
    fn minimal_dsb_document() {
        let cfg = parse_config(DSB).unwrap();
        assert_eq!(cfg.command, Command::Spectrum);
        assert_eq!(cfg.points.len(), 1);
        let job = &cfg.points[0];
        assert_eq!(job.n0.get(), 100);
        assert_eq!(job.order_unit(), 3);
        let Arm::Tone(p2) = job.eom.pm2 else {
            panic!("pm2 should be driven")
        };
        assert_eq!(p2.rf_phase, std::f64::consts::PI);
    }

    #[test]
    fn splitter_range_is_a_schema_error_with_path() {
        let doc = r#"{"command": "spectrum",
            "splitters": {"input": {"kind": "dc", "k": 1.5}, "output": {"kind": "yb", "k": 0.5}},
            "input": {"mode": 10}}"#;
        match parse_config(doc) {
            Err(ConfigError::Schema { path, .. }) => assert_eq!(path, "splitters.input.k"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_command() {
        let err = parse_config(r#"{"preset": "yb_dual", "input": {"mode": 4}}"#).unwrap_err();
        assert!(matches!(err, ConfigError::Schema { ref path, .. } if path == "command"));
    }

    #[test]
    fn syntax_error_has_location() {
        let err = parse_config("{\n  \"command\": \"spectrum\",\n  oops\n}").unwrap_err();
        assert!(matches!(err, ConfigError::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn unknown_field_reports_path() {
        let doc = r#"{"command": "spectrum", "preset": "yb_dual",
            "arms": {"pm1": {"kind": "tone", "index": 0.1, "tone": 2, "volts": 3}},
            "input": {"mode": 10}}"#;
        match parse_config(doc).unwrap_err() {
            ConfigError::Schema { path, message } => {
                assert_eq!(path, "arms.pm1");
                assert!(message.contains("volts"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn physics_errors() {
        let single_dsb = DSB.replace("yb_dual", "yb_single");
        assert!(matches!(parse_config(&single_dsb), Err(ConfigError::Physics { .. })));
        let with_alpha = DSB.replace("\"mode\": 100", "\"mode\": 100, \"alpha\": [1, 0]");
        assert!(matches!(parse_config(&with_alpha), Err(ConfigError::Physics { .. })));
        let coherent = DSB.replace("spectrum", "coherent");
        assert!(matches!(parse_config(&coherent), Err(ConfigError::Schema { .. })));
    }

    #[test]
    fn bad_values() {
        let zero_mode = DSB.replace("\"mode\": 100", "\"mode\": 0");
        assert!(matches!(parse_config(&zero_mode), Err(ConfigError::Schema { ref path, .. }) if path == "input.mode"));
        let big_index = DSB.replace("0.5", "75.0");
        assert!(matches!(parse_config(&big_index), Err(ConfigError::Schema { ref path, .. }) if path == "drive.index"));
        let bad_preset = DSB.replace("yb_dual", "mzm");
        assert!(matches!(parse_config(&bad_preset), Err(ConfigError::Schema { ref path, .. }) if path == "preset"));
        assert!(parse_config("[]").is_err());
        assert!(parse_config("").is_err());
    }

    #[test]
    fn sweep_points_merge_overrides() {
        let doc = DSB.replace(
            "\"input\"",
            "\"sweep\": [{\"drive\": {\"index\": 0.1}}, {\"input\": {\"mode\": 50}}], \"input\"",
        );
        let cfg = parse_config(&doc).unwrap();
        assert!(cfg.swept);
        assert_eq!(cfg.points.len(), 2);
        let Arm::Tone(p) = cfg.points[0].eom.pm1 else { panic!() };
        assert_eq!(p.index, 0.1);
        assert_eq!(cfg.points[1].n0.get(), 50);

        let bad = DSB.replace("\"input\"", "\"sweep\": [{\"input\": {\"mode\": -2}}], \"input\"");
        match parse_config(&bad).unwrap_err() {
            ConfigError::Schema { path, .. } => assert_eq!(path, "sweep[0].input.mode"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn verify_document() {
        let cfg = parse_config(r#"{"command": "verify", "seed": 3, "tolerance_scale": 2}"#).unwrap();
        assert_eq!(cfg.command, Command::Verify);
        assert_eq!(cfg.verify.seed, 3);
        assert_eq!(cfg.verify.tolerance_scale, 2.0);
        assert!(parse_config(r#"{"command": "verify", "tolerance_scale": -1}"#).is_err());
    }

    #[test]
    fn multitone_checks() {
        let doc = r#"{"command": "spectrum", "preset": "yb_dual",
            "arms": {"pm1": {"kind": "multitone", "tones": [{"index": 0.01, "tone": 3}]}},
            "input": {"mode": 10}}"#;
        assert!(matches!(parse_config(doc), Err(ConfigError::Physics { .. })));
        let low = doc
            .replace("spectrum", "coherent")
            .replace("\"mode\": 10", "\"mode\": 3, \"alpha\": [1, 0]");
        match parse_config(&low).unwrap_err() {
            ConfigError::Physics { path, .. } => assert_eq!(path, "arms.pm1.tones[0].tone"),
            other => panic!("{other:?}"),
        }
        let dup = r#"{"command": "coherent", "preset": "yb_dual",
            "arms": {"pm1": {"kind": "multitone", "tones": [{"index": 0.01, "tone": 3}, {"index": 0.02, "tone": 3}]}},
            "input": {"mode": 10, "alpha": [1, 0]}}"#;
        assert!(matches!(parse_config(dup), Err(ConfigError::Schema { ref path, .. }) if path == "arms.pm1.tones"));
    }
}
