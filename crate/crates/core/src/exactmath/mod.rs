//! Exact scalar, polynomial and linear-algebra substrate.
//!
//! Everything here is exact: rationals are arbitrary precision and no
//! routine takes a tolerance.

mod discriminant;
mod field;
mod matrix;
mod mpoly;
mod rational;
mod unipoly;

pub use discriminant::{discriminant, resultant, univariate_discriminant};
pub use field::{Field, QuadraticNumber};
pub use matrix::{poly_determinant, RatMatrix};
pub use mpoly::{pvar, sym, MPoly, Symbol};
pub use rational::Rational;
pub use unipoly::UniPoly;

/// Ring operation selector for [`poly_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

pub fn poly_arith(a: &MPoly, b: &MPoly, op: PolyOp) -> MPoly {
    match op {
        PolyOp::Add => a + b,
        PolyOp::Sub => a - b,
        PolyOp::Mul => a * b,
    }
}
