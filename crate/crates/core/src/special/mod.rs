//! Special functions: Bessel `J_s` and the unitary matrix exponential.

mod bessel;
mod expm;

pub use bessel::{bessel_j, bessel_j_series_oracle, bessel_j_table, MAX_ARGUMENT};
pub use expm::{unitarity_defect, unitary_exp, CMatrix, HermitianGenerator};
