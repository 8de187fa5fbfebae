//! Sinusoidally driven electro-optic phase modulator on the mode lattice.
//!
//! A single tone scatters `a†_{n0}` into `Σ_{q≥1} C_q(q0) a†_{qN−r0}` with
//!
//! ```text
//! C_q(q0) = e^{jφ_b} (j e^{jθ})^{q−q0} [J_{q−q0}(m) − (−1)^{q0} J_{q+q0}(m)]
//! ```
//!
//! The optical-limit model drops the `J_{q+q0}` term, which only matters for
//! input modes close to the bottom of the lattice.

use crate::error::{Error, Result};
use crate::lattice::{decompose_mode, ModeIndex, RfTone, SidebandDecomposition};
use crate::scalar::{cis, j_unit, quadrature_power, Real};
use crate::special::{bessel_j, bessel_j_table, unitary_exp, CMatrix, HermitianGenerator};
use crate::spectrum::PortSpectrum;
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// Coefficient model for single-tone scattering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    #[default]
    Exact,
    Optical,
}

/// One modulator driven by `V(t) = V_DC + V_m cos(Ωt + θ_RF)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PmConfig<T> {
    /// `φ_b = π V_DC / V_π`.
    pub bias: T,
    /// `m = π V_m / V_π`.
    pub index: T,
    /// `θ_RF`.
    pub rf_phase: T,
    pub tone: RfTone,
}

impl<T: Real> PmConfig<T> {
    pub fn new(bias: T, index: T, rf_phase: T, tone: RfTone) -> Result<Self> {
        let cfg = Self {
            bias,
            index,
            rf_phase,
            tone,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Undriven modulator acting as a static phase shifter.
    pub fn bias_only(bias: T, tone: RfTone) -> Self {
        Self {
            bias,
            index: T::zero(),
            rf_phase: T::zero(),
            tone,
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_finite("bias", self.bias)?;
        check_finite("rf_phase", self.rf_phase)?;
        check_index("index", self.index)
    }

    /// `χ = e^{jθ} m / 2`.
    pub fn chi(&self) -> Complex<T> {
        cis(self.rf_phase) * (self.index / T::lit(2.0))
    }
}

fn check_finite<T: Real>(name: &'static str, v: T) -> Result<()> {
    if v.is_finite() {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value: v.to_f64().unwrap_or(f64::NAN),
            range: "finite reals",
        })
    }
}

fn check_index<T: Real>(name: &'static str, m: T) -> Result<()> {
    if m >= T::zero() && m <= T::lit(crate::special::MAX_ARGUMENT) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name,
            value: m.to_f64().unwrap_or(f64::NAN),
            range: "[0, 50]",
        })
    }
}

/// Amplitude convention for first-order multitone sidebands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SidebandConvention {
    /// Sideband weight `m_k` as in the small-signal multitone expansion.
    #[default]
    Literal,
    /// Sideband weight `m_k / 2`, the first-order Bessel expansion `J_1(m) ≈ m/2`.
    Bessel,
}

impl SidebandConvention {
    pub fn weight<T: Real>(self, index: T) -> T {
        match self {
            SidebandConvention::Literal => index,
            SidebandConvention::Bessel => index / T::lit(2.0),
        }
    }
}

/// One RF tone of a multitone drive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToneDrive<T> {
    pub index: T,
    pub rf_phase: T,
    pub tone: RfTone,
}

/// Small-signal multitone modulator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultitonePmConfig<T> {
    pub bias: T,
    pub tones: Vec<ToneDrive<T>>,
    #[serde(default)]
    pub convention: SidebandConvention,
}

impl<T: Real> MultitonePmConfig<T> {
    pub fn validate(&self) -> Result<()> {
        check_finite("bias", self.bias)?;
        let mut seen = BTreeSet::new();
        for t in &self.tones {
            check_finite("rf_phase", t.rf_phase)?;
            check_index("index", t.index)?;
            if !seen.insert(t.tone) {
                return Err(Error::DuplicateTone(t.tone.get()));
            }
        }
        Ok(())
    }
}

/// Sideband retention policy for single-tone rows.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Truncation<T> {
    /// Orders with `|J_{q−q0}(m)|` below this floor are outside the core band.
    pub epsilon: T,
    /// Extra orders kept on each side of the core band.
    pub margin: usize,
}

impl<T: Real> Default for Truncation<T> {
    fn default() -> Self {
        Self {
            epsilon: T::lit(1e-12),
            margin: 8,
        }
    }
}

impl<T: Real> Truncation<T> {
    pub fn validate(&self) -> Result<()> {
        if self.epsilon > T::zero() && self.epsilon.is_finite() {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                name: "epsilon",
                value: self.epsilon.to_f64().unwrap_or(f64::NAN),
                range: "(0, inf)",
            })
        }
    }

    /// Smallest `s ≥ m` with `|J_s(m)| < ε`. Beyond the turning point
    /// `s > m` the Bessel tail decreases monotonically, so every larger
    /// order is below the floor too.
    pub fn core_half_width(&self, index: T) -> Result<usize> {
        let start = index.ceil().to_usize().unwrap_or(0);
        let limit = start + 400;
        let table = bessel_j_table(limit, index)?;
        Ok((start..=limit)
            .find(|&s| table[s].abs() < self.epsilon)
            .unwrap_or(limit))
    }
}

fn order_check(q: i64) -> Result<()> {
    if q >= 1 {
        Ok(())
    } else {
        Err(Error::InvalidOrder(q))
    }
}

pub fn pm_coeff_exact<T: Real>(q: i64, dec: &SidebandDecomposition, cfg: &PmConfig<T>) -> Result<Complex<T>> {
    order_check(q)?;
    let s = q - dec.q0;
    let image_sign = if dec.q0 % 2 == 0 { T::one() } else { -T::one() };
    let bracket = bessel_j(s, cfg.index)? - image_sign * bessel_j(q + dec.q0, cfg.index)?;
    Ok(cis(cfg.bias) * quadrature_power(cfg.rf_phase, s) * bracket)
}

pub fn pm_coeff_optical<T: Real>(q: i64, dec: &SidebandDecomposition, cfg: &PmConfig<T>) -> Result<Complex<T>> {
    order_check(q)?;
    let s = q - dec.q0;
    Ok(cis(cfg.bias) * quadrature_power(cfg.rf_phase, s) * bessel_j(s, cfg.index)?)
}

pub fn pm_coeff<T: Real>(q: i64, dec: &SidebandDecomposition, cfg: &PmConfig<T>, model: Model) -> Result<Complex<T>> {
    match model {
        Model::Exact => pm_coeff_exact(q, dec, cfg),
        Model::Optical => pm_coeff_optical(q, dec, cfg),
    }
}

/// Inclusive range of retained ladder orders `q` for input `n0`.
pub fn retained_orders<T: Real>(n0: ModeIndex, cfg: &PmConfig<T>, tr: &Truncation<T>) -> Result<(i64, i64)> {
    let dec = decompose_mode(n0, cfg.tone);
    let width = (tr.core_half_width(cfg.index)? + tr.margin) as i64;
    Ok(((dec.q0 - width).max(1), dec.q0 + width))
}

/// Orders beyond this many past the retained band are treated as exactly zero
/// in the image term; `J_s(m)` for `m ≤ 50` is far below `f64` resolution there.
const IMAGE_TABLE_SLACK: usize = 400;

/// Output row `S a†_{n0} S†` over the retained ladder.
pub fn pm_scatter_row<T: Real>(
    n0: ModeIndex,
    cfg: &PmConfig<T>,
    tr: &Truncation<T>,
    model: Model,
) -> Result<PortSpectrum<T>> {
    cfg.validate()?;
    tr.validate()?;
    let dec = decompose_mode(n0, cfg.tone);
    let (lo, hi) = retained_orders(n0, cfg, tr)?;

    let direct_span = (hi - dec.q0).max(dec.q0 - lo) as usize;
    let image_span = match model {
        Model::Exact => ((hi + dec.q0) as usize).min(direct_span + IMAGE_TABLE_SLACK),
        Model::Optical => 0,
    };
    let table = bessel_j_table(direct_span.max(image_span), cfg.index)?;
    let bessel = |s: i64| -> T {
        let idx = s.unsigned_abs() as usize;
        match table.get(idx) {
            Some(&v) if s < 0 && idx % 2 == 1 => -v,
            Some(&v) => v,
            None => T::zero(),
        }
    };

    let carrier = cis(cfg.bias);
    let image_sign = if dec.q0 % 2 == 0 { T::one() } else { -T::one() };
    let mut row = PortSpectrum::new();
    for q in lo..=hi {
        let s = q - dec.q0;
        let bracket = match model {
            Model::Exact => bessel(s) - image_sign * bessel(q + dec.q0),
            Model::Optical => bessel(s),
        };
        if bracket == T::zero() {
            continue;
        }
        row.add(dec.mode(q)?, carrier * quadrature_power(cfg.rf_phase, s) * bracket);
    }
    Ok(row)
}

/// Truncated single-photon generator `χT̂_N + χ*T̂_N† + φ_b N̂_ph` over
/// modes `1..=n_max` (matrix index `n − 1`).
pub fn pm_generator<T: Real>(cfg: &PmConfig<T>, n_max: usize) -> Result<HermitianGenerator<T>> {
    cfg.validate()?;
    let big_n = cfg.tone.get() as usize;
    let chi = cfg.chi();
    let bias = Complex::new(cfg.bias, T::zero());
    HermitianGenerator::from_fn(n_max, |row, col| {
        if row == col {
            bias
        } else if row == col + big_n {
            chi
        } else if col == row + big_n {
            chi.conj()
        } else {
            Complex::new(T::zero(), T::zero())
        }
    })
}

/// `exp(j·G)` of [`pm_generator`]; column `n0 − 1` is the scattered row of
/// mode `n0`, accurate away from the truncation edge.
pub fn pm_generator_oracle<T: Real>(cfg: &PmConfig<T>, n_max: usize) -> Result<CMatrix<T>> {
    Ok(unitary_exp(&pm_generator(cfg, n_max)?))
}

/// First-order small-signal row for a multitone modulator.
pub fn pm_multitone_row<T: Real>(n0: ModeIndex, cfg: &MultitonePmConfig<T>) -> Result<PortSpectrum<T>> {
    cfg.validate()?;
    let carrier = cis(cfg.bias);
    let mut row = PortSpectrum::single(n0, carrier);
    for drive in &cfg.tones {
        let offset = drive.tone.get() as i64;
        let weight = carrier * j_unit::<T>() * cfg.convention.weight(drive.index);
        row.add(n0.offset(offset)?, weight * cis(drive.rf_phase));
        row.add(n0.offset(-offset)?, weight * cis(-drive.rf_phase));
    }
    Ok(row)
}
