//! Numeric tolerances, pinned in one place.
//!
//! All state vectors are unit-norm in double precision and dimensions stay
//! at or below 2^14, so accumulated rounding sits far below every threshold
//! here. The thresholds are ordered: construction residuals (1e-10) leave
//! headroom under orthonormality checks (1e-9), which leave headroom under
//! the Knill-Laflamme inner-product checks (1e-8).

/// Residual bound for constructed eigenvectors of stabilizer generators.
pub const EIGEN_RESIDUAL: f64 = 1e-10;

/// Allowed deviation of the codeword Gram matrix from the identity.
pub const ORTHONORMALITY: f64 = 1e-9;

/// Knill-Laflamme off-diagonal magnitude and diagonal-spread bound.
pub const KL: f64 = 1e-8;

/// Agreement bound between symbolic operator algebra and dense matrices.
pub const MATRIX_ORACLE: f64 = 1e-12;

/// Unit-norm check for state vectors.
pub const UNIT_NORM: f64 = 1e-10;
