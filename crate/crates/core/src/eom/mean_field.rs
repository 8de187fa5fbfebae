//! Classical mean field of coherent output displacements.
//!
//! Each occupied mode with displacement `A` contributes
//! `j·ξ(ω)·A·e^{−jωt} + c.c.` with `ξ(ω) = field_scale·√ω`.

use super::{Port, TwoPortSpectrum};
use crate::error::{Error, Result};
use crate::lattice::{LatticeScale, ModeIndex};
use crate::scalar::{cis, j_unit, Real};
use num_complex::Complex;

/// Uniform sample times `start + i·(end − start)/(samples − 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid<T> {
    pub start: T,
    pub end: T,
    pub samples: usize,
}

impl<T: Real> TimeGrid<T> {
    pub fn new(start: T, end: T, samples: usize) -> Result<Self> {
        if !(start.is_finite() && end.is_finite()) {
            return Err(Error::OutOfRange {
                name: "time grid bounds",
                value: f64::NAN,
                range: "finite",
            });
        }
        if samples == 0 {
            return Err(Error::OutOfRange {
                name: "samples",
                value: 0.0,
                range: "[1, inf)",
            });
        }
        Ok(Self { start, end, samples })
    }

    pub fn times(&self) -> impl Iterator<Item = T> + '_ {
        let step = if self.samples > 1 {
            (self.end - self.start) / T::int(self.samples as i64 - 1)
        } else {
            T::zero()
        };
        (0..self.samples).map(move |i| self.start + step * T::int(i as i64))
    }
}

/// Positive-frequency part of one line: `field += 2·Re[phasor·e^{−jωt}]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Phasor<T> {
    pub mode: ModeIndex,
    pub omega: T,
    pub phasor: Complex<T>,
}

impl<T: Real> Phasor<T> {
    pub fn at(&self, t: T) -> T {
        T::lit(2.0) * (self.phasor * cis(-self.omega * t)).re
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MeanFieldSeries<T> {
    /// `(t, E(t))`.
    pub samples: Vec<(T, T)>,
    /// Ascending in mode.
    pub terms: Vec<Phasor<T>>,
}

impl<T: Real> MeanFieldSeries<T> {
    /// Field at an arbitrary time from the phasor table.
    pub fn evaluate(&self, t: T) -> T {
        self.terms.iter().fold(T::zero(), |acc, p| acc + p.at(t))
    }
}

/// Mean field at output `port` sampled on `times`.
pub fn mean_field<T: Real>(
    output: &TwoPortSpectrum<T>,
    port: Port,
    times: &TimeGrid<T>,
    scale: &LatticeScale<T>,
    field_scale: T,
) -> Result<MeanFieldSeries<T>> {
    if !field_scale.is_finite() {
        return Err(Error::OutOfRange {
            name: "field_scale",
            value: field_scale.to_f64().unwrap_or(f64::NAN),
            range: "finite",
        });
    }
    let terms: Vec<Phasor<T>> = output
        .port(port)
        .iter()
        .map(|(mode, amp)| {
            let omega = scale.omega(mode);
            let xi = field_scale * omega.sqrt();
            Phasor {
                mode,
                omega,
                phasor: j_unit::<T>() * amp * xi,
            }
        })
        .collect();
    let mut series = MeanFieldSeries {
        samples: Vec::with_capacity(times.samples),
        terms,
    };
    series.samples = times.times().map(|t| (t, series.evaluate(t))).collect();
    Ok(series)
}
