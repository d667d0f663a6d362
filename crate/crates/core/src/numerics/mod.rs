//! Determinants, Pfaffians, Laurent polynomials and Fourier data of symbols.

mod identities;
mod laurent;
mod linalg;
mod pfaffian;
mod symbol;

pub use identities::{
    pfaffian_minor_sum_check, pfaffian_sign_identity_check, MinorSumReport, SignIdentityReport,
};
pub use laurent::LaurentPoly;
pub use linalg::{det_exact, det_f64};
pub use pfaffian::{pfaffian, Scalar, SkewMatrix};
pub use symbol::{bessel_i, fourier_coefficients, FourierCoefficients, SymbolFactor, SymbolSpec};

/// Default truncation tolerance for series factors.
pub const DEFAULT_TOL: f64 = 1e-12;
