//! One photon in each input port.
//!
//! The output is `O1·O2|vac⟩` with `O_p` the transformed creation operator
//! of input `p`. Amplitudes are stored per unordered pair of slots; a pair
//! with both photons in one slot represents `c·(a†)²|vac⟩`, whose norm
//! carries the extra factor `√2`.

use super::{single_photon_output, EomConfig, Port};
use crate::error::Result;
use crate::lattice::ModeIndex;
use crate::phase_modulator::{Model, Truncation};
use crate::scalar::{cis, Real};
use crate::spectrum::PortSpectrum;
use nalgebra::{DMatrix, RealField};
use num_complex::Complex;
use num_traits::Float;
use std::collections::{BTreeMap, BTreeSet};

/// One output port/mode pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Slot {
    pub port: Port,
    pub mode: ModeIndex,
}

impl Slot {
    pub fn new(port: Port, mode: ModeIndex) -> Self {
        Self { port, mode }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct TwoPhotonState<T> {
    amplitudes: BTreeMap<(Slot, Slot), Complex<T>>,
}

fn ordered(a: Slot, b: Slot) -> (Slot, Slot) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl<T: Real> TwoPhotonState<T> {
    pub fn new() -> Self {
        Self {
            amplitudes: BTreeMap::new(),
        }
    }

    /// Adds `amp·a†_a a†_b` (the pair is unordered).
    pub fn add(&mut self, a: Slot, b: Slot, amp: Complex<T>) {
        let slot = self
            .amplitudes
            .entry(ordered(a, b))
            .or_insert_with(|| Complex::new(T::zero(), T::zero()));
        *slot += amp;
    }

    /// Coefficient of `a†_a a†_b|vac⟩`.
    pub fn get(&self, a: Slot, b: Slot) -> Complex<T> {
        self.amplitudes
            .get(&ordered(a, b))
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (Slot, Slot, Complex<T>)> + '_ {
        self.amplitudes.iter().map(|((a, b), c)| (*a, *b, *c))
    }

    pub fn len(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amplitudes.is_empty()
    }

    /// Probability weight of one stored pair: `|c|²`, doubled for a doubly
    /// occupied slot.
    pub fn pair_probability(a: Slot, b: Slot, c: Complex<T>) -> T {
        if a == b {
            T::lit(2.0) * c.norm_sqr()
        } else {
            c.norm_sqr()
        }
    }

    pub fn norm_sqr(&self) -> T {
        self.iter()
            .fold(T::zero(), |acc, (a, b, c)| acc + Self::pair_probability(a, b, c))
    }

    /// `[P(2 in port 1), P(one per port), P(2 in port 2)]`.
    pub fn sector_probabilities(&self) -> [T; 3] {
        let mut out = [T::zero(); 3];
        for (a, b, c) in self.iter() {
            let sector = a.port.index() + b.port.index();
            out[sector] += Self::pair_probability(a, b, c);
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        let keys: BTreeSet<_> = self.amplitudes.keys().chain(other.amplitudes.keys()).collect();
        keys.into_iter()
            .map(|&(a, b)| (self.get(a, b) - other.get(a, b)).norm())
            .fold(T::zero(), T::max)
    }
}

/// Two-photon output for one photon in mode `n0` at each input.
pub fn two_photon_output<T: Real>(
    cfg: &EomConfig<T>,
    n0: ModeIndex,
    tr: &Truncation<T>,
    model: Model,
) -> Result<TwoPhotonState<T>> {
    let first = single_photon_output(cfg, Port::One, n0, tr, model)?;
    let second = single_photon_output(cfg, Port::Two, n0, tr, model)?;
    let mut state = TwoPhotonState::new();
    for (pa, ma, ua) in first.iter() {
        for (pb, mb, ub) in second.iter() {
            state.add(Slot::new(pa, ma), Slot::new(pb, mb), ua * ub);
        }
    }
    Ok(state)
}

/// Directional-coupler modulator with identical arms up to a bias offset
/// `Δφ_b` (so the upper-arm row is `e^{jΔφ_b}` times `b_row`):
///
/// ```text
/// (e^{jΔφ}/2)·sin Δφ·[b†b† ⊗ 1 − 1 ⊗ b†b†] − e^{jΔφ}·cos Δφ·b† ⊗ b†
/// ```
pub fn two_photon_dc_closed_form<T: Real>(bias_difference: T, b_row: &PortSpectrum<T>) -> TwoPhotonState<T> {
    let phase = cis(bias_difference);
    let bunched = phase * (bias_difference.sin() / T::lit(2.0));
    let split = -phase * bias_difference.cos();
    let mut state = TwoPhotonState::new();
    for (mx, bx) in b_row.iter() {
        for (my, by) in b_row.iter() {
            let prod = bx * by;
            state.add(Slot::new(Port::One, mx), Slot::new(Port::Two, my), split * prod);
            // Ordered double sum of b†b†: unordered pairs collect 2·b_x·b_y.
            state.add(Slot::new(Port::One, mx), Slot::new(Port::One, my), bunched * prod);
            state.add(Slot::new(Port::Two, mx), Slot::new(Port::Two, my), -bunched * prod);
        }
    }
    state
}

/// Singular values of the coefficient matrix indexed by port-1 occupation
/// states × port-2 occupation states, in decreasing order.
///
/// The matrix is block diagonal over the photon-number split: the `(2,0)`
/// and `(0,2)` blocks are single columns/rows, the `(1,1)` block is the
/// mode × mode amplitude matrix.
pub fn port_entanglement<T: Real + RealField>(state: &TwoPhotonState<T>) -> Vec<T> {
    let mut bunched = [T::zero(); 2];
    let mut rows = BTreeSet::new();
    let mut cols = BTreeSet::new();
    for (a, b, c) in state.iter() {
        match (a.port, b.port) {
            (Port::One, Port::Two) => {
                rows.insert(a.mode);
                cols.insert(b.mode);
            }
            (p, _) => bunched[p.index()] += TwoPhotonState::<T>::pair_probability(a, b, c),
        }
    }
    let mut values: Vec<T> = bunched.iter().map(|&p| Float::sqrt(p)).collect();

    if !rows.is_empty() {
        let row_idx: BTreeMap<_, _> = rows.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let col_idx: BTreeMap<_, _> = cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let mut block = DMatrix::<Complex<T>>::zeros(rows.len(), cols.len());
        for (a, b, c) in state.iter() {
            if a.port == Port::One && b.port == Port::Two {
                block[(row_idx[&a.mode], col_idx[&b.mode])] = c;
            }
        }
        values.extend(block.singular_values().iter().copied());
    }
    values.sort_by(|x, y| y.partial_cmp(x).unwrap_or(std::cmp::Ordering::Equal));
    values
}
