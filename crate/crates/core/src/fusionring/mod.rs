//! Fusion rings: unital based rings of finite rank.
//!
//! Structure constants are stored as `N[i][j][k]`, the multiplicity of `b_k`
//! in `b_i b_j`. Multiplication matrices use the convention
//! `([b_i])_{kj} = N[i][k][j]`, under which the Frobenius–Perron vector and
//! the S-matrix columns of modular data are both right eigenvectors.

mod characters;
mod fpdim;
mod ring;
mod structure;

pub use characters::{characters, Character};
pub use fpdim::{fpdims, fpdims_unvalidated, FPData, HomomorphismCheck};
pub use ring::{Axiom, FusionRing, ValidationReport, Violation};
pub use structure::{
    adjoint_subring, central_element_z, is_closed, is_pointed, subring_generated, tensor_product,
    universal_grading, Grading,
};
