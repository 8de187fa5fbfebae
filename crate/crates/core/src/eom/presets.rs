//! Commercial modulator layouts and standard drive settings.

use super::{Arm, EomConfig};
use crate::error::{Error, Result};
use crate::lattice::RfTone;
use crate::phase_modulator::PmConfig;
use crate::scalar::Real;
use crate::splitters::SplitterCoeffs;
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Preset {
    YbDual,
    YbSingle,
    DcDual,
    DcSingle,
    HybridDual,
    HybridSingle,
}

impl Preset {
    pub const ALL: [Preset; 6] = [
        Preset::YbDual,
        Preset::YbSingle,
        Preset::DcDual,
        Preset::DcSingle,
        Preset::HybridDual,
        Preset::HybridSingle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::YbDual => "yb_dual",
            Preset::YbSingle => "yb_single",
            Preset::DcDual => "dc_dual",
            Preset::DcSingle => "dc_single",
            Preset::HybridDual => "hybrid_dual",
            Preset::HybridSingle => "hybrid_single",
        }
    }

    pub fn is_dual(self) -> bool {
        matches!(self, Preset::YbDual | Preset::DcDual | Preset::HybridDual)
    }

    /// `(input, output)` splitter coefficients.
    pub fn splitters<T: Real>(self) -> (SplitterCoeffs<T>, SplitterCoeffs<T>) {
        let h = T::FRAC_1_SQRT_2();
        let re = |x: T| Complex::new(x, T::zero());
        let im = |x: T| Complex::new(T::zero(), x);
        // Y-branch input: r′ = 1/√2 = −r.
        let yb_in = SplitterCoeffs::new(re(h), re(h), re(-h), re(h));
        // Y-branch output: r = 1/√2 = −r′.
        let yb_out = SplitterCoeffs::new(re(h), re(h), re(h), re(-h));
        let dc = SplitterCoeffs::new(re(h), re(h), im(h), im(h));
        match self {
            Preset::YbDual | Preset::YbSingle => (yb_in, yb_out),
            Preset::DcDual | Preset::DcSingle => (dc, dc),
            Preset::HybridDual | Preset::HybridSingle => (yb_in, dc),
        }
    }

    /// Skeleton configuration: undriven unbiased modulators in the driven
    /// arms (tone index 1), identity in the upper arm for single drive.
    pub fn config<T: Real>(self) -> EomConfig<T> {
        let (sin, sout) = self.splitters();
        let idle = || {
            Arm::Tone(PmConfig::bias_only(
                T::zero(),
                RfTone::new(1).expect("1 is a valid tone"),
            ))
        };
        let pm2 = if self.is_dual() { idle() } else { Arm::Identity };
        EomConfig::new(sin, sout, idle(), pm2)
    }
}

impl FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownPreset(s.to_string()))
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Quadrature double-sideband drive: `θ1 = 0`, `θ2 = π`, `φ_b1 = −φ_b2 = π/2`.
pub fn dsb_settings<T: Real>(index: T, tone: RfTone) -> Result<(PmConfig<T>, PmConfig<T>)> {
    let half_pi = T::FRAC_PI_2();
    Ok((
        PmConfig::new(half_pi, index, T::zero(), tone)?,
        PmConfig::new(-half_pi, index, T::PI(), tone)?,
    ))
}

/// Which first-order sideband the single-sideband drive removes from port 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SsbSide {
    Lower,
    Upper,
}

/// Single-sideband drive: `θ1 = 0`, `θ2 = ±π/2`, `φ_b1 = π/2`, `φ_b2 = 0`.
pub fn ssb_settings<T: Real>(index: T, tone: RfTone, cancel: SsbSide) -> Result<(PmConfig<T>, PmConfig<T>)> {
    let half_pi = T::FRAC_PI_2();
    let theta2 = match cancel {
        SsbSide::Lower => half_pi,
        SsbSide::Upper => -half_pi,
    };
    Ok((
        PmConfig::new(half_pi, index, T::zero(), tone)?,
        PmConfig::new(T::zero(), index, theta2, tone)?,
    ))
}
