//! Full amplitude modulator: input splitter, two phase-modulated arms and
//! output splitter.
//!
//! Everything here works on transformed creation operators. A photon in
//! input port `p` reaches arm `a` with weight `M_in[a][p]`, is scattered by
//! that arm into a multimode row, and leaves through output port `o` with
//! weight `M_out[o][a]`.

mod mean_field;
mod oracle;
mod presets;
mod two_photon;

pub use mean_field::{mean_field, MeanFieldSeries, Phasor, TimeGrid};
pub use oracle::{composition_oracle, suggested_lattice_size};
pub use presets::{dsb_settings, ssb_settings, Preset, SsbSide};
pub use two_photon::{port_entanglement, two_photon_dc_closed_form, two_photon_output, Slot, TwoPhotonState};

use crate::error::{Error, Result};
use crate::lattice::ModeIndex;
use crate::phase_modulator::{pm_multitone_row, pm_scatter_row, Model, MultitonePmConfig, PmConfig, Truncation};
use crate::scalar::Real;
use crate::spectrum::PortSpectrum;
use crate::splitters::SplitterCoeffs;
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Input or output port of the modulator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Port {
    One,
    Two,
}

impl Port {
    pub fn new(p: u8) -> Result<Self> {
        match p {
            1 => Ok(Port::One),
            2 => Ok(Port::Two),
            other => Err(Error::InvalidPort(other)),
        }
    }

    /// Zero-based index.
    pub fn index(self) -> usize {
        match self {
            Port::One => 0,
            Port::Two => 1,
        }
    }

    pub fn number(self) -> u8 {
        self.index() as u8 + 1
    }

    pub const BOTH: [Port; 2] = [Port::One, Port::Two];
}

impl TryFrom<u8> for Port {
    type Error = Error;
    fn try_from(p: u8) -> Result<Self> {
        Self::new(p)
    }
}

impl From<Port> for u8 {
    fn from(p: Port) -> u8 {
        p.number()
    }
}

/// What sits in one interferometer arm.
#[derive(Debug, Clone, PartialEq)]
pub enum Arm<T> {
    /// No modulator: amplitude one, no frequency change.
    Identity,
    Tone(PmConfig<T>),
    Multitone(MultitonePmConfig<T>),
}

impl<T: Real> Arm<T> {
    /// Scattered row `S a†_{n0} S†` of this arm.
    pub fn row(&self, n0: ModeIndex, tr: &Truncation<T>, model: Model) -> Result<PortSpectrum<T>> {
        match self {
            Arm::Identity => Ok(PortSpectrum::single(n0, Complex::new(T::one(), T::zero()))),
            Arm::Tone(cfg) => pm_scatter_row(n0, cfg, tr, model),
            Arm::Multitone(cfg) => pm_multitone_row(n0, cfg),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Arm::Identity => Ok(()),
            Arm::Tone(cfg) => cfg.validate(),
            Arm::Multitone(cfg) => cfg.validate(),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Arm::Identity)
    }
}

/// Splitters and arm contents of one modulator. `pm1` is the lower arm.
#[derive(Debug, Clone, PartialEq)]
pub struct EomConfig<T> {
    pub splitter_in: SplitterCoeffs<T>,
    pub splitter_out: SplitterCoeffs<T>,
    pub pm1: Arm<T>,
    pub pm2: Arm<T>,
}

impl<T: Real> EomConfig<T> {
    pub fn new(splitter_in: SplitterCoeffs<T>, splitter_out: SplitterCoeffs<T>, pm1: Arm<T>, pm2: Arm<T>) -> Self {
        Self {
            splitter_in,
            splitter_out,
            pm1,
            pm2,
        }
    }

    pub fn with_arms(mut self, pm1: Arm<T>, pm2: Arm<T>) -> Self {
        self.pm1 = pm1;
        self.pm2 = pm2;
        self
    }

    pub fn arms(&self) -> [&Arm<T>; 2] {
        [&self.pm1, &self.pm2]
    }

    pub fn validate(&self) -> Result<()> {
        self.pm1.validate()?;
        self.pm2.validate()
    }

    /// `w[o][a]`: amplitude for input `port` to traverse arm `a` and leave
    /// through output `o`.
    pub fn path_weights(&self, port: Port) -> [[Complex<T>; 2]; 2] {
        let m_in = self.splitter_in.transfer();
        let m_out = self.splitter_out.transfer();
        let p = port.index();
        let mut w = [[Complex::new(T::zero(), T::zero()); 2]; 2];
        for (o, row) in w.iter_mut().enumerate() {
            for (a, slot) in row.iter_mut().enumerate() {
                *slot = m_out[o][a] * m_in[a][p];
            }
        }
        w
    }
}

/// Amplitude maps for both output ports.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct TwoPortSpectrum<T> {
    pub port1: PortSpectrum<T>,
    pub port2: PortSpectrum<T>,
}

impl<T: Real> TwoPortSpectrum<T> {
    pub fn port(&self, p: Port) -> &PortSpectrum<T> {
        match p {
            Port::One => &self.port1,
            Port::Two => &self.port2,
        }
    }

    pub fn total_power(&self) -> T {
        self.port1.power() + self.port2.power()
    }

    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self {
            port1: self.port1.scaled(factor),
            port2: self.port2.scaled(factor),
        }
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.port1
            .max_abs_diff(&other.port1)
            .max(self.port2.max_abs_diff(&other.port2))
    }

    /// `(port, mode, amplitude)` in port-then-mode order.
    pub fn iter(&self) -> impl Iterator<Item = (Port, ModeIndex, Complex<T>)> + '_ {
        Port::BOTH
            .into_iter()
            .flat_map(move |p| self.port(p).iter().map(move |(m, a)| (p, m, a)))
    }
}

fn combine<T: Real>(cfg: &EomConfig<T>, port: Port, rows: [&PortSpectrum<T>; 2]) -> TwoPortSpectrum<T> {
    let w = cfg.path_weights(port);
    let out = |o: usize| PortSpectrum::superpose(w[o][0], rows[0], w[o][1], rows[1]);
    TwoPortSpectrum {
        port1: out(0),
        port2: out(1),
    }
}

/// Transition amplitudes for one photon in mode `n0` at `input`.
///
/// Equal tones in both arms land on one shared ladder; distinct tones give
/// the union of both ladders.
pub fn single_photon_output<T: Real>(
    cfg: &EomConfig<T>,
    input: Port,
    n0: ModeIndex,
    tr: &Truncation<T>,
    model: Model,
) -> Result<TwoPortSpectrum<T>> {
    cfg.validate()?;
    let b = cfg.pm1.row(n0, tr, model)?;
    let c = cfg.pm2.row(n0, tr, model)?;
    Ok(combine(cfg, input, [&b, &c]))
}

/// Output displacements for a coherent state `|α⟩` in mode `n0` at `input`.
/// The modulator maps it to a product of coherent states whose amplitudes
/// are `α` times the single-photon transition amplitudes.
pub fn coherent_output<T: Real>(
    cfg: &EomConfig<T>,
    input: Port,
    n0: ModeIndex,
    alpha: Complex<T>,
    tr: &Truncation<T>,
    model: Model,
) -> Result<TwoPortSpectrum<T>> {
    Ok(single_photon_output(cfg, input, n0, tr, model)?.scaled(alpha))
}

/// Single-drive modulator (`pm2` absent).
pub fn single_drive_output<T: Real>(
    cfg: &EomConfig<T>,
    n0: ModeIndex,
    tr: &Truncation<T>,
    model: Model,
) -> Result<TwoPortSpectrum<T>> {
    if !cfg.pm2.is_identity() {
        return Err(Error::Unsupported("single-drive output requires an empty upper arm"));
    }
    single_photon_output(cfg, Port::One, n0, tr, model)
}

/// Coherent output under small-signal multitone drive.
///
/// Arms holding [`Arm::Multitone`] contribute the carrier plus one line at
/// `n0 ± N_k` per tone; lines from both arms at the same mode add.
pub fn multitone_coherent_output<T: Real>(
    cfg: &EomConfig<T>,
    input: Port,
    n0: ModeIndex,
    alpha: Complex<T>,
) -> Result<TwoPortSpectrum<T>> {
    if cfg.arms().iter().any(|a| matches!(a, Arm::Tone(_))) {
        return Err(Error::Unsupported("multitone output expects multitone or empty arms"));
    }
    coherent_output(cfg, input, n0, alpha, &Truncation::default(), Model::Exact)
}

#[cfg(test)]
mod tests;
