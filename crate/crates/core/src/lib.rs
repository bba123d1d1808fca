//! Exact-arithmetic toolkit for finite-dimensional ω-Lie algebras.
//!
//! Everything is computed over ℚ with arbitrary-precision rationals: an
//! algebra is a table of structure constants plus a skew form ω, and every
//! solution space (derivations, biderivations, ...) is the exact nullspace of
//! a linear system, stored in reduced row echelon form.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod format;
pub mod linalg;
pub mod local;
pub mod report;
pub mod solvers;
pub mod verify;

pub use algebra::{BilinearMap, LinearMap, OmegaAlgebra};
pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar, SubspaceBasis};
