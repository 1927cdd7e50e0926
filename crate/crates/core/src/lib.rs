//! Exact-arithmetic verification engine for two-/one-form supermultiplet
//! algebras: gamma/sigma matrix identity suites, graded charge actions with
//! closure checks, gauge-charge towers, and polynomial kinematics solvers.
//!
//! Everything is computed over Gaussian rationals; a check passes only when
//! its residual is identically zero.

pub mod engine;
pub mod error;
pub mod index;
pub mod kinematics;
pub mod linalg;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use index::{IndexKind, IndexSlot, IndexSpec, Variance};
pub use scalar::{GaussianRational, Rat};
pub use tensor::{brace_project, contract, epsilon_tensor, BraceMode, Tensor};

pub mod clifford6;
pub mod matrix;
pub mod report;
pub mod sigma4;
pub mod suite;
