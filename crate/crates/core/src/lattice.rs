//! Integer arithmetic on the quantized frequency lattice.
//!
//! A travelling wave quantized over a length `L` only supports angular
//! frequencies `ω = 2π n ν / L` with `n ≥ 1`. An RF drive of index `N`
//! couples a mode `n0 = q0·N − r0` to the ladder `q·N − r0`, `q ≥ 1`.

use crate::error::{Error, Result};
use crate::scalar::Real;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Positive mode number on the frequency lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "u64")]
pub struct ModeIndex(u64);

impl ModeIndex {
    pub fn new(n: i64) -> Result<Self> {
        if n >= 1 {
            Ok(Self(n as u64))
        } else {
            Err(Error::InvalidMode(n))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// `self + offset`, rejected when it leaves the lattice.
    pub fn offset(self, offset: i64) -> Result<Self> {
        Self::new(self.0 as i64 + offset).map_err(|_| Error::OffLattice {
            mode: self.0 as i64 + offset,
        })
    }
}

impl TryFrom<i64> for ModeIndex {
    type Error = Error;
    fn try_from(n: i64) -> Result<Self> {
        Self::new(n)
    }
}

impl From<ModeIndex> for u64 {
    fn from(m: ModeIndex) -> u64 {
        m.0
    }
}

impl fmt::Display for ModeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// RF tone index `N`, with `Ω = 2π N ν / L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "u64")]
pub struct RfTone(u64);

impl RfTone {
    pub fn new(n: i64) -> Result<Self> {
        if n >= 1 {
            Ok(Self(n as u64))
        } else {
            Err(Error::InvalidTone(n))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }
}

impl TryFrom<i64> for RfTone {
    type Error = Error;
    fn try_from(n: i64) -> Result<Self> {
        Self::new(n)
    }
}

impl From<RfTone> for u64 {
    fn from(t: RfTone) -> u64 {
        t.0
    }
}

/// `n0 = q0·N − r0` with `0 ≤ r0 < N`, `q0 ≥ 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SidebandDecomposition {
    pub q0: i64,
    pub r0: i64,
    pub tone: RfTone,
}

impl SidebandDecomposition {
    /// Mode reached by ladder order `q` (which must be `≥ 1`).
    pub fn mode(&self, q: i64) -> Result<ModeIndex> {
        sideband_mode(q, self.tone, self.r0)
    }
}

pub fn decompose_mode(n0: ModeIndex, tone: RfTone) -> SidebandDecomposition {
    let n = n0.get() as i64;
    let big_n = tone.get() as i64;
    let q0 = (n + big_n - 1).div_euclid(big_n);
    SidebandDecomposition {
        q0,
        r0: q0 * big_n - n,
        tone,
    }
}

pub fn sideband_mode(q: i64, tone: RfTone, r0: i64) -> Result<ModeIndex> {
    if q < 1 {
        return Err(Error::InvalidOrder(q));
    }
    let big_n = tone.get() as i64;
    if !(0..big_n).contains(&r0) {
        return Err(Error::InvalidOffset { r0, tone: tone.get() });
    }
    ModeIndex::new(q * big_n - r0)
}

/// Physical scale of the lattice: propagation speed `ν` and quantization length `L`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeScale<T> {
    pub speed: T,
    pub length: T,
}

impl<T: Real> Default for LatticeScale<T> {
    /// Normalized scale with `2πν/L = 1`, so `ω = n`.
    fn default() -> Self {
        Self {
            speed: T::one(),
            length: T::TAU(),
        }
    }
}

impl<T: Real> LatticeScale<T> {
    #[allow(clippy::neg_cmp_op_on_partial_ord)] // rejects NaN too
    pub fn new(speed: T, length: T) -> Result<Self> {
        if !(speed > T::zero()) {
            return Err(Error::OutOfRange {
                name: "speed",
                value: speed.to_f64().unwrap_or(f64::NAN),
                range: "(0, inf)",
            });
        }
        if !(length > T::zero()) {
            return Err(Error::OutOfRange {
                name: "length",
                value: length.to_f64().unwrap_or(f64::NAN),
                range: "(0, inf)",
            });
        }
        Ok(Self { speed, length })
    }

    /// Lattice spacing `2πν/L`.
    pub fn spacing(&self) -> T {
        T::TAU() * self.speed / self.length
    }

    pub fn omega(&self, n: ModeIndex) -> T {
        T::from_u64(n.get()).expect("mode index representable") * self.spacing()
    }
}

/// `ω = 2π n ν / L`.
pub fn mode_omega<T: Real>(n: ModeIndex, speed: T, length: T) -> Result<T> {
    Ok(LatticeScale::new(speed, length)?.omega(n))
}
