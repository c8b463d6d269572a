//! Numerical tolerances, centralized so every module and test agrees on them.
//!
//! All quantities in this crate are O(1)–O(10) combinations of matrices no
//! larger than 64×64, so absolute tolerances are appropriate throughout.

/// Exact algebraic identities (Clifford/exterior algebra) checked in floating point.
pub const ALGEBRAIC: f64 = 1e-10;

/// Linear residuals: covariant derivatives, curvature symmetries, spinor field equations.
pub const RESIDUAL: f64 = 1e-9;

/// Quadratic identities (operator squares, commutators of built operators).
pub const QUADRATIC: f64 = 1e-8;

/// Closed-form plug-in comparisons (low-degree rational functions of the inputs).
pub const CLOSED_FORM: f64 = 1e-12;

/// Absolute clustering width for grouping eigenvalues into eigenbundles.
pub const CLUSTER: f64 = 1e-8;

/// Threshold below which a determinant counts as vanishing.
pub const DET_NONZERO: f64 = 1e-6;
