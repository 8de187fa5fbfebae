//! Scalar abstraction shared by every physics module.

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign};
use std::fmt::{Debug, Display};

/// Real floating-point scalar the simulator is generic over (`f32`, `f64`).
pub trait Real:
    Float + FloatConst + FromPrimitive + NumAssign + Debug + Display + Default + Send + Sync + 'static
{
    /// Converts an `f64` literal into `Self`.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    /// Converts an integer into `Self`.
    #[inline]
    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("integer representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}

/// `re + j·im`.
#[inline]
pub fn cplx<T: Real>(re: T, im: T) -> Complex<T> {
    Complex::new(re, im)
}

/// The imaginary unit `j`.
#[inline]
pub fn j_unit<T: Real>() -> Complex<T> {
    Complex::new(T::zero(), T::one())
}

/// `e^{jφ}`.
#[inline]
pub fn cis<T: Real>(phase: T) -> Complex<T> {
    Complex::new(phase.cos(), phase.sin())
}

/// `(j·e^{jθ})^s = e^{j s (θ + π/2)}`, evaluated so that `s = 0` is exactly one.
pub fn quadrature_power<T: Real>(theta: T, s: i64) -> Complex<T> {
    if s == 0 {
        return Complex::new(T::one(), T::zero());
    }
    // Reduce the integer multiple of π/2 exactly before touching θ.
    let quarter = match s.rem_euclid(4) {
        0 => Complex::new(T::one(), T::zero()),
        1 => Complex::new(T::zero(), T::one()),
        2 => Complex::new(-T::one(), T::zero()),
        _ => Complex::new(T::zero(), -T::one()),
    };
    if theta == T::zero() {
        quarter
    } else {
        quarter * cis(theta * T::int(s))
    }
}
