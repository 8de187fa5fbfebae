//! Sparse mode → amplitude maps.

use crate::lattice::ModeIndex;
use crate::scalar::Real;
use num_complex::Complex;
use std::collections::BTreeMap;

/// Complex amplitude per lattice mode for one port.
///
/// Holds single-photon transition amplitudes or coherent displacements
/// depending on the producer. Iteration is in increasing mode order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PortSpectrum<T> {
    entries: BTreeMap<ModeIndex, Complex<T>>,
}

impl<T: Real> PortSpectrum<T> {
    pub fn new() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn single(mode: ModeIndex, amplitude: Complex<T>) -> Self {
        let mut s = Self::new();
        s.add(mode, amplitude);
        s
    }

    /// Adds `amplitude` to whatever is stored at `mode`.
    pub fn add(&mut self, mode: ModeIndex, amplitude: Complex<T>) {
        let slot = self
            .entries
            .entry(mode)
            .or_insert_with(|| Complex::new(T::zero(), T::zero()));
        *slot += amplitude;
    }

    /// Amplitude at `mode`, zero when absent.
    pub fn get(&self, mode: ModeIndex) -> Complex<T> {
        self.entries
            .get(&mode)
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    pub fn contains(&self, mode: ModeIndex) -> bool {
        self.entries.contains_key(&mode)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ModeIndex, Complex<T>)> + '_ {
        self.entries.iter().map(|(m, a)| (*m, *a))
    }

    pub fn modes(&self) -> impl Iterator<Item = ModeIndex> + '_ {
        self.entries.keys().copied()
    }

    /// `Σ |amplitude|²`.
    pub fn power(&self) -> T {
        self.entries.values().fold(T::zero(), |acc, a| acc + a.norm_sqr())
    }

    /// `Σ_n self[n]·conj(other[n])`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.iter()
            .filter(|(m, _)| other.contains(*m))
            .fold(Complex::new(T::zero(), T::zero()), |acc, (m, a)| {
                acc + a * other.get(m).conj()
            })
    }

    pub fn scaled(&self, factor: Complex<T>) -> Self {
        Self {
            entries: self.entries.iter().map(|(m, a)| (*m, a * factor)).collect(),
        }
    }

    /// `a·x + b·y` over the union of supports.
    pub fn superpose(a: Complex<T>, x: &Self, b: Complex<T>, y: &Self) -> Self {
        let mut out = x.scaled(a);
        for (m, v) in y.iter() {
            out.add(m, v * b);
        }
        out
    }

    /// Drops entries with `|amplitude| ≤ floor`.
    pub fn pruned(&self, floor: T) -> Self {
        Self {
            entries: self
                .entries
                .iter()
                .filter(|(_, a)| a.norm() > floor)
                .map(|(m, a)| (*m, *a))
                .collect(),
        }
    }

    /// Largest entrywise `|self − other|` over the union of supports.
    pub fn max_abs_diff(&self, other: &Self) -> T {
        let mut worst = T::zero();
        for (m, a) in self.iter() {
            worst = worst.max((a - other.get(m)).norm());
        }
        for (m, b) in other.iter() {
            if !self.contains(m) {
                worst = worst.max(b.norm());
            }
        }
        worst
    }
}

impl<T: Real> FromIterator<(ModeIndex, Complex<T>)> for PortSpectrum<T> {
    fn from_iter<I: IntoIterator<Item = (ModeIndex, Complex<T>)>>(iter: I) -> Self {
        let mut s = Self::new();
        for (m, a) in iter {
            s.add(m, a);
        }
        s
    }
}
