//! Brute-force single-photon unitary of the whole modulator.
//!
//! The state space is `{port 1, port 2} ⊗ {modes 1..=n_max}`. The arms are
//! realized by exponentiating their truncated generators, the splitters as
//! `M ⊗ I`, and the product is applied to one basis vector. Nothing here
//! uses the Bessel closed form.

use super::{Arm, EomConfig, Port, TwoPortSpectrum};
use crate::error::{Error, Result};
use crate::lattice::ModeIndex;
use crate::phase_modulator::{pm_generator_oracle, Truncation};
use crate::scalar::Real;
use crate::special::CMatrix;
use crate::spectrum::PortSpectrum;
use num_complex::Complex;

fn arm_unitary<T: Real>(arm: &Arm<T>, n_max: usize) -> Result<CMatrix<T>> {
    match arm {
        Arm::Identity => Ok(CMatrix::identity(n_max, n_max)),
        Arm::Tone(cfg) => pm_generator_oracle(cfg, n_max),
        Arm::Multitone(_) => Err(Error::Unsupported("composition oracle has no multitone generator")),
    }
}

fn splitter_block<T: Real>(m: [[Complex<T>; 2]; 2], n: usize) -> CMatrix<T> {
    let mut out = CMatrix::zeros(2 * n, 2 * n);
    for (po, row) in m.iter().enumerate() {
        for (pi, &c) in row.iter().enumerate() {
            for i in 0..n {
                out[(po * n + i, pi * n + i)] = c;
            }
        }
    }
    out
}

/// Output amplitudes for one photon in `(input, n0)` on a lattice of
/// `n_max` modes. Entries within a few sideband decay lengths of `n_max`
/// carry truncation error; see [`suggested_lattice_size`].
pub fn composition_oracle<T: Real>(
    cfg: &EomConfig<T>,
    input: Port,
    n0: ModeIndex,
    n_max: usize,
) -> Result<TwoPortSpectrum<T>> {
    cfg.validate()?;
    let col = n0.get() as usize;
    if col > n_max {
        return Err(Error::OutOfRange {
            name: "n_max",
            value: n_max as f64,
            range: "[n0, inf)",
        });
    }
    let n = n_max;
    let mut arms = CMatrix::zeros(2 * n, 2 * n);
    for (a, arm) in cfg.arms().into_iter().enumerate() {
        let u = arm_unitary(arm, n)?;
        arms.view_mut((a * n, a * n), (n, n)).copy_from(&u);
    }
    let s_in = splitter_block(cfg.splitter_in.transfer(), n);
    let s_out = splitter_block(cfg.splitter_out.transfer(), n);
    let total = s_out * arms * s_in;

    let column = total.column(input.index() * n + col - 1);
    let mut ports = [PortSpectrum::new(), PortSpectrum::new()];
    for (p, spectrum) in ports.iter_mut().enumerate() {
        for i in 0..n {
            let amp = column[p * n + i];
            if amp.re != T::zero() || amp.im != T::zero() {
                spectrum.add(ModeIndex::new(i as i64 + 1)?, amp);
            }
        }
    }
    let [port1, port2] = ports;
    Ok(TwoPortSpectrum { port1, port2 })
}

/// Lattice size leaving eight tone steps of headroom above the retained
/// band of every arm.
pub fn suggested_lattice_size<T: Real>(cfg: &EomConfig<T>, n0: ModeIndex, tr: &Truncation<T>) -> Result<usize> {
    let base = n0.get() as usize;
    let mut size = base + 1;
    for arm in cfg.arms() {
        if let Arm::Tone(pm) = arm {
            let width = tr.core_half_width(pm.index)? + tr.margin + 8;
            size = size.max(base + width * pm.tone.get() as usize);
        }
    }
    Ok(size)
}
