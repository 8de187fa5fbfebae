//! Quantum-regime simulator for electro-optic amplitude modulators.
//!
//! The physics is generic over the real scalar type ([`Real`]); the aliases
//! at the crate root fix it to `f64`, which is what the CLI uses.

pub mod cli;
pub mod eom;
pub mod error;
pub mod lattice;
pub mod phase_modulator;
pub mod scalar;
pub mod special;
pub mod spectrum;
pub mod splitters;
pub mod verify;

pub use eom::{
    coherent_output, composition_oracle, dsb_settings, mean_field, multitone_coherent_output, port_entanglement,
    single_drive_output, single_photon_output, ssb_settings, two_photon_dc_closed_form, two_photon_output, Arm,
    EomConfig, MeanFieldSeries, Phasor, Port, Preset, Slot, SsbSide, TimeGrid, TwoPhotonState, TwoPortSpectrum,
};
pub use error::{Error, Result};
pub use lattice::{decompose_mode, mode_omega, sideband_mode, LatticeScale, ModeIndex, RfTone, SidebandDecomposition};
pub use phase_modulator::{
    pm_coeff, pm_coeff_exact, pm_coeff_optical, pm_generator_oracle, pm_multitone_row, pm_scatter_row, Model,
    MultitonePmConfig, PmConfig, SidebandConvention, ToneDrive, Truncation,
};
pub use scalar::Real;
pub use spectrum::PortSpectrum;
pub use splitters::{
    coherent_through_splitter, splitter_coeffs, splitter_generator_oracle, verify_reciprocity, SplitterCoeffs,
    SplitterSpec,
};

pub type C64 = num_complex::Complex<f64>;
pub type Spectrum = PortSpectrum<f64>;
pub type Splitter = SplitterCoeffs<f64>;
pub type Modulator = PmConfig<f64>;
pub type MultitoneModulator = MultitonePmConfig<f64>;
pub type Eom = EomConfig<f64>;
pub type Output = TwoPortSpectrum<f64>;
pub type TwoPhoton = TwoPhotonState<f64>;
