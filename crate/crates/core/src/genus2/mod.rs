//! The genus-2 integrable system on `T*P^3`: the map
//! `F = (h0 + h1 z + h2 z^2) dz^2 / f(z)`, its Poisson structure, critical
//! loci, the sign-flip involution, and numeric fiber exploration.
//!
//! Everything lives in the affine chart `(u0, u1, u2)`; points at infinity of
//! `P^3` are not represented.

mod companion;
mod hamiltonians;
mod involution;
mod poisson;
pub mod rank;
mod solver;
mod types;

pub use companion::c1_companion_branch_points;
pub use hamiltonians::{eval_f, h_polynomials, specialized_h, HFormulaVariant};
pub use involution::{involution_apply, involution_pullback, invariance_check, is_involution_invariant};
pub use poisson::{commutation_report, poisson_bracket, BracketEntry, CommutationReport};
pub use rank::{jacobian_rank, jacobian_rank_f64, RankInfo, DEFAULT_RANK_TOL};
pub use solver::{fiber_solve, FiberPoint, SolveOptions};
pub use types::{phase_symbols, BranchPoint, CurveParams, PhasePoint, QuadDiff};
