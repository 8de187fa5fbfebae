//! Bessel functions of the first kind, integer order.
//!
//! Values come from Miller's backward recurrence
//! `J_{k-1}(x) = (2k/x)·J_k(x) − J_{k+1}(x)`, normalized with
//! `J_0(x) + 2·Σ_{k≥1} J_{2k}(x) = 1`.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest supported `|x|`.
pub const MAX_ARGUMENT: f64 = 50.0;

fn check_argument<T: Real>(x: T) -> Result<()> {
    if x.is_finite() && x.abs() <= T::lit(MAX_ARGUMENT) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            name: "bessel argument",
            value: x.to_f64().unwrap_or(f64::NAN),
            range: "[-50, 50]",
        })
    }
}

/// Starting order of the downward sweep. Even, so the normalization sum
/// picks up the seed.
fn start_order(max_order: usize, x: f64) -> usize {
    let base = (max_order as f64).max(x.ceil());
    let top = base + 40.0 + 6.0 * base.sqrt();
    2 * (top as usize).div_ceil(2)
}

/// `J_s(x)` for `s = 0..=max_order` and `x ≥ 0`.
fn miller_table<T: Real>(max_order: usize, x: T) -> Vec<T> {
    let mut out = vec![T::zero(); max_order + 1];
    if x == T::zero() {
        out[0] = T::one();
        return out;
    }
    if x < T::epsilon() {
        // Leading power-law term; the next correction is O(x²) relative.
        let half = x / T::lit(2.0);
        let mut term = T::one();
        for (s, slot) in out.iter_mut().enumerate() {
            if s > 0 {
                term = term * half / T::int(s as i64);
            }
            *slot = term;
        }
        return out;
    }

    let big = T::lit(1e10);
    let inv_big = T::one() / big;
    let two_over_x = T::lit(2.0) / x;
    let top = start_order(max_order, x.to_f64().unwrap_or(MAX_ARGUMENT));

    let mut above = T::zero();
    let mut cur = T::lit(1e-30);
    let mut sum = T::lit(2.0) * cur;
    if top <= max_order {
        out[top] = cur;
    }
    for k in (1..=top).rev() {
        let below = T::int(k as i64) * two_over_x * cur - above;
        above = cur;
        cur = below;
        let order = k - 1;
        if order <= max_order {
            out[order] = cur;
        }
        if order > 0 && order % 2 == 0 {
            sum += T::lit(2.0) * cur;
        }
        if cur.abs() > big {
            cur *= inv_big;
            above *= inv_big;
            sum *= inv_big;
            for v in out.iter_mut().skip(order) {
                *v *= inv_big;
            }
        }
    }
    sum += cur;
    for v in &mut out {
        *v /= sum;
    }
    out
}

/// `J_s(x)` for `s = 0..=max_order` at any supported `x` (sign of `x` honoured).
pub fn bessel_j_table<T: Real>(max_order: usize, x: T) -> Result<Vec<T>> {
    check_argument(x)?;
    let mut table = miller_table(max_order, x.abs());
    if x < T::zero() {
        for v in table.iter_mut().skip(1).step_by(2) {
            *v = -*v;
        }
    }
    Ok(table)
}

/// `J_s(x)` for any integer order, using `J_{−s} = (−1)^s J_s`.
pub fn bessel_j<T: Real>(order: i64, x: T) -> Result<T> {
    check_argument(x)?;
    let s = order.unsigned_abs() as usize;
    let value = miller_table(s, x.abs())[s];
    let odd = s % 2 == 1;
    let flip = odd && ((order < 0) != (x < T::zero()));
    Ok(if flip { -value } else { value })
}

/// Ascending power series `Σ_k (−1)^k (x/2)^{s+2k} / (k!(s+k)!)` truncated
/// after `terms` terms. Independent reference for the recurrence above.
pub fn bessel_j_series_oracle(order: u32, x: f64, terms: usize) -> f64 {
    let half = x / 2.0;
    // (x/2)^s / s!
    let mut term = 1.0;
    for i in 1..=order {
        term *= half / f64::from(i);
    }
    let mut sum = 0.0;
    let sq = half * half;
    for k in 0..terms {
        sum += term;
        let kk = (k + 1) as f64;
        term *= -sq / (kk * (kk + f64::from(order)));
    }
    sum
}
