//! `exp(j·G)` for Hermitian `G` by scaling and squaring a Taylor kernel.

use crate::error::{Error, Result};
use crate::scalar::{j_unit, Real};
use nalgebra::DMatrix;
use num_complex::Complex;

pub type CMatrix<T> = DMatrix<Complex<T>>;

/// Largest scaled 1-norm handed to the Taylor kernel.
const SCALED_NORM: f64 = 0.5;
const MAX_TAYLOR_TERMS: usize = 40;

/// Truncated Hermitian operator in matrix form.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianGenerator<T: Real> {
    entries: CMatrix<T>,
}

impl<T: Real> HermitianGenerator<T> {
    /// Accepts `entries` when `entries[i][j] = conj(entries[j][i])` within 1e-14
    /// (relative to the largest entry when that exceeds one).
    pub fn new(entries: CMatrix<T>) -> Result<Self> {
        let n = entries.nrows();
        if n == 0 || entries.ncols() != n {
            return Err(Error::EmptyMatrix);
        }
        let scale = entries.iter().fold(T::one(), |acc, z| acc.max(z.norm()));
        let mut worst = T::zero();
        for i in 0..n {
            for j in i..n {
                let d = (entries[(i, j)] - entries[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        if worst > T::lit(1e-14) * scale {
            return Err(Error::NotHermitian(worst.to_f64().unwrap_or(f64::NAN)));
        }
        Ok(Self { entries })
    }

    /// Builds the generator from a closure over `(row, col)`, then validates it.
    pub fn from_fn(dim: usize, f: impl FnMut(usize, usize) -> Complex<T>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        Self::new(CMatrix::from_fn(dim, dim, f))
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix<T> {
        &self.entries
    }
}

fn norm_one<T: Real>(m: &CMatrix<T>) -> T {
    m.column_iter()
        .map(|c| c.iter().fold(T::zero(), |acc, z| acc + z.norm()))
        .fold(T::zero(), T::max)
}

fn max_abs<T: Real>(m: &CMatrix<T>) -> T {
    m.iter().fold(T::zero(), |acc, z| acc.max(z.norm()))
}

/// `U = exp(j·G)`.
pub fn unitary_exp<T: Real>(generator: &HermitianGenerator<T>) -> CMatrix<T> {
    let n = generator.dim();
    let a = generator.entries().map(|z| z * j_unit());

    let norm = norm_one(&a);
    let mut squarings = 0u32;
    let limit = T::lit(SCALED_NORM);
    let mut scaled = norm;
    while scaled > limit {
        scaled /= T::lit(2.0);
        squarings += 1;
    }
    let factor = Complex::new(T::lit(0.5).powi(squarings as i32), T::zero());
    let b = a.map(|z| z * factor);

    let mut result = CMatrix::<T>::identity(n, n);
    let mut term = CMatrix::<T>::identity(n, n);
    for k in 1..=MAX_TAYLOR_TERMS {
        term = &term * &b;
        let inv_k = Complex::new(T::one() / T::int(k as i64), T::zero());
        term.apply(|z| *z *= inv_k);
        result += &term;
        if max_abs(&term) <= T::epsilon() * T::lit(1e-3) {
            break;
        }
    }
    for _ in 0..squarings {
        result = &result * &result;
    }
    result
}

/// `max |(U†U − I)_{ij}|`.
pub fn unitarity_defect<T: Real>(u: &CMatrix<T>) -> T {
    let n = u.nrows();
    let gram = u.map(|z| z.conj()).transpose() * u;
    let mut worst = T::zero();
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { T::one() } else { T::zero() };
            worst = worst.max((gram[(i, j)] - Complex::new(target, T::zero())).norm());
        }
    }
    worst
}
