//! Lossless two-port splitters: bulk beamsplitter, directional coupler and
//! Y-branch.
//!
//! Coefficients follow the creation-operator convention
//! `S a1† S† = t′ a1† + r′ a2†`, `S a2† S† = r a1† + t a2†`, so a field
//! entering port 1 leaves through port 1 with `t′` and through port 2 with
//! `r′`.

use crate::error::{Error, Result};
use crate::scalar::{j_unit, Real};
use crate::special::{unitary_exp, CMatrix, HermitianGenerator};
use num_complex::Complex;
use serde::{Deserialize, Serialize};

/// Which splitter and its single parameter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SplitterSpec<T> {
    /// Bulk beamsplitter with mixing angle `θ_split`.
    Bulk { theta: T },
    /// Directional coupler with power coupling fraction `k`.
    Dc { k: T },
    /// Y-branch with power coupling fraction `k`.
    Yb { k: T },
}

impl<T: Real> SplitterSpec<T> {
    pub fn validate(&self) -> Result<()> {
        match *self {
            SplitterSpec::Bulk { theta } if !theta.is_finite() => Err(Error::OutOfRange {
                name: "theta",
                value: theta.to_f64().unwrap_or(f64::NAN),
                range: "finite reals",
            }),
            SplitterSpec::Dc { k } | SplitterSpec::Yb { k } if !(k >= T::zero() && k <= T::one()) => {
                Err(Error::OutOfRange {
                    name: "k",
                    value: k.to_f64().unwrap_or(f64::NAN),
                    range: "[0, 1]",
                })
            }
            _ => Ok(()),
        }
    }

    /// Mixing angle of the equivalent generator, `θ = 2·asin(√k)` for the
    /// guided-wave splitters.
    pub fn mixing_angle(&self) -> T {
        match *self {
            SplitterSpec::Bulk { theta } => theta,
            SplitterSpec::Dc { k } | SplitterSpec::Yb { k } => T::lit(2.0) * k.sqrt().asin(),
        }
    }
}

/// Field coefficients `(t, t′, r, r′)` of one splitter.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SplitterCoeffs<T> {
    pub t: Complex<T>,
    pub t_prime: Complex<T>,
    pub r: Complex<T>,
    pub r_prime: Complex<T>,
}

impl<T: Real> SplitterCoeffs<T> {
    pub fn new(t: Complex<T>, t_prime: Complex<T>, r: Complex<T>, r_prime: Complex<T>) -> Self {
        Self { t, t_prime, r, r_prime }
    }

    pub fn identity() -> Self {
        let one = Complex::new(T::one(), T::zero());
        let zero = Complex::new(T::zero(), T::zero());
        Self::new(one, one, zero, zero)
    }

    /// Operator matrix `[[t′, r′], [r, t]]` acting on `(a1†, a2†)`.
    pub fn operator_matrix(&self) -> [[Complex<T>; 2]; 2] {
        [[self.t_prime, self.r_prime], [self.r, self.t]]
    }

    /// Amplitude transfer `out[p] = Σ_i M[p][i]·in[i]`, i.e. `[[t′, r], [r′, t]]`.
    pub fn transfer(&self) -> [[Complex<T>; 2]; 2] {
        [[self.t_prime, self.r], [self.r_prime, self.t]]
    }

    /// `t·t′ + r·r′`: weight of the term placing one photon in each output
    /// arm when both inputs carry one photon. Zero for balanced splitters.
    pub fn cross_arm_coefficient(&self) -> Complex<T> {
        self.t * self.t_prime + self.r * self.r_prime
    }
}

pub fn splitter_coeffs<T: Real>(spec: &SplitterSpec<T>) -> Result<SplitterCoeffs<T>> {
    spec.validate()?;
    let real = |x: T| Complex::new(x, T::zero());
    Ok(match *spec {
        SplitterSpec::Bulk { theta } => {
            let half = theta / T::lit(2.0);
            let t = real(half.cos());
            let r = j_unit::<T>() * half.sin();
            SplitterCoeffs::new(t, t, r, r)
        }
        SplitterSpec::Dc { k } => {
            let t = real((T::one() - k).sqrt());
            let r = j_unit::<T>() * k.sqrt();
            SplitterCoeffs::new(t, t, r, r)
        }
        SplitterSpec::Yb { k } => {
            let t = real((T::one() - k).sqrt());
            let rp = real(k.sqrt());
            SplitterCoeffs::new(t, t, -rp, rp)
        }
    })
}

/// Residuals of `|t′|²+|r′|² = 1`, `|t|²+|r|² = 1`, `r*t′ + r′t* = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReciprocityReport<T> {
    pub primed_norm_defect: T,
    pub unprimed_norm_defect: T,
    pub cross_defect: T,
    pub tolerance: T,
}

impl<T: Real> ReciprocityReport<T> {
    pub fn passed(&self) -> bool {
        self.primed_norm_defect <= self.tolerance
            && self.unprimed_norm_defect <= self.tolerance
            && self.cross_defect <= self.tolerance
    }

    pub fn worst(&self) -> T {
        self.primed_norm_defect
            .max(self.unprimed_norm_defect)
            .max(self.cross_defect)
    }
}

pub fn verify_reciprocity<T: Real>(c: &SplitterCoeffs<T>) -> ReciprocityReport<T> {
    verify_reciprocity_within(c, T::lit(1e-14))
}

pub fn verify_reciprocity_within<T: Real>(c: &SplitterCoeffs<T>, tolerance: T) -> ReciprocityReport<T> {
    ReciprocityReport {
        primed_norm_defect: (c.t_prime.norm_sqr() + c.r_prime.norm_sqr() - T::one()).abs(),
        unprimed_norm_defect: (c.t.norm_sqr() + c.r.norm_sqr() - T::one()).abs(),
        cross_defect: (c.r.conj() * c.t_prime + c.r_prime * c.t.conj()).norm(),
        tolerance,
    }
}

/// Single-photon generator of the splitter, exponentiated.
///
/// Bulk and directional coupler use `θ·Ĵ1`, the Y-branch uses `−θ·Ĵ2`.
/// The returned matrix is in operator form `[[t′, r′], [r, t]]`.
pub fn splitter_generator_oracle<T: Real>(spec: &SplitterSpec<T>) -> Result<CMatrix<T>> {
    spec.validate()?;
    let half = spec.mixing_angle() / T::lit(2.0);
    let zero = Complex::new(T::zero(), T::zero());
    // Basis (|1,0>, |0,1>); a1†a2 has its single entry at (0, 1).
    let (upper, lower) = match spec {
        SplitterSpec::Bulk { .. } | SplitterSpec::Dc { .. } => {
            (Complex::new(half, T::zero()), Complex::new(half, T::zero()))
        }
        // exp(−θ(a1†a2 − a2†a1)/2) = exp(jG) with G = j(θ/2)(a1†a2 − a2†a1).
        SplitterSpec::Yb { .. } => (Complex::new(T::zero(), half), Complex::new(T::zero(), -half)),
    };
    let g = HermitianGenerator::new(CMatrix::from_row_slice(2, 2, &[zero, upper, lower, zero]))?;
    // Columns of the state-space unitary are images of |1,0>, |0,1>; the
    // operator matrix is its transpose.
    Ok(unitary_exp(&g).transpose())
}

/// Output displacements `(t′α + rβ, r′α + tβ)` for coherent inputs `|α⟩⊗|β⟩`.
pub fn coherent_through_splitter<T: Real>(
    c: &SplitterCoeffs<T>,
    alpha: Complex<T>,
    beta: Complex<T>,
) -> (Complex<T>, Complex<T>) {
    let m = c.transfer();
    (m[0][0] * alpha + m[0][1] * beta, m[1][0] * alpha + m[1][1] * beta)
}
