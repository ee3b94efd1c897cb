//! Exact computation with fusion rings and modular data.
//!
//! The crate is organised around a handful of layers:
//!
//! * [`numberfield`]: rationals, cyclotomic fields `Q(ζ_n)`, integer
//!   polynomials and certified real algebraic numbers (Perron roots).
//! * [`fusionring`]: based rings of finite rank, their Frobenius–Perron
//!   dimensions, characters, subrings and gradings.
//! * [`basedmodule`]: based modules and their Frobenius–Perron vectors.
//! * [`modulardata`]: exact checks of S/T identities, the Verlinde formula,
//!   Gauss sums, Galois symmetry and class-equation data.
//! * [`obstructions`]: necessary conditions for categorifiability, packaged
//!   as a deterministic check suite.
//! * [`catalog`]: bundled example rings, modular data and center data.
//!
//! Every check reports whether its conclusion was reached in exact
//! arithmetic or numerically at a stated tolerance.

pub mod basedmodule;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod fusionring;
pub mod modulardata;
pub mod numberfield;
pub mod obstructions;
pub mod report;

pub use error::{Error, Result};

/// Default absolute tolerance for numeric comparisons.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
