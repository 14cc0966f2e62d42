//! Local models of a rank-2 Higgs field near a zero, written as traceless
//! 2x2 matrices of truncated power series in a local coordinate `z`.
//!
//! Conventions: `det Phi` (rather than `tr Phi^2 / 2 = -det Phi`) is used for
//! vanishing orders; the two have the same zeros. Residue factors of `2 pi i`
//! are dropped throughout.

mod classify;
mod forms;
mod hecke;
mod matpoly;

pub use classify::{classify_zero, validate_zero_data, DimensionReport, ZeroClassification, ZeroType};
pub use forms::{
    hessian_residue, hessian_residue_of_variations, nondegeneracy_check, symplectic_pairing, NondegeneracyReport,
};
pub use hecke::{hecke_critical_alphas, hecke_transform, trace_square, Direction, HeckeCritical};
pub use matpoly::{parse_z_poly, MatPoly2, SlBasis};
