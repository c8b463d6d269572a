//! Spin-geometry engine for metric connections with parallel skew torsion.
//!
//! The crate provides, as exact finite-dimensional linear algebra:
//!
//! - a sparse exterior algebra over Euclidean R^n ([`forms`]);
//! - concrete complex spin representations and the Clifford action of forms,
//!   including the torsion eigenbundle splitting and the twistor projection
//!   ([`spin`]);
//! - the closed-form eigenvalue machinery for Dirac operators with skew
//!   torsion: universal and twistorial lower bounds, the Killing-number
//!   quadratic, dimension-six relations, and product-geometry bounds
//!   ([`estimates`]);
//! - reductive homogeneous models (the Stiefel manifolds V(4,2) and V(5,2)
//!   with their one-parameter metric deformations): connection maps,
//!   curvature, invariant spinors, and algebraic Dirac operators
//!   ([`homogeneous`]);
//! - residual-based verification of the Killing and twistor spinor equations
//!   with torsion, together with the Ricci integrability test ([`verify`]).
//!
//! The [`cli`] module exposes the whole pipeline as a batch command-line tool.

pub mod cli;
pub mod config;
pub mod error;
pub mod estimates;
pub mod forms;
pub mod homogeneous;
pub mod linalg;
pub mod spin;
pub mod tol;
pub mod verify;

pub use error::{Error, Result};
