//! Exact and numeric machinery for the genus-2 Higgs-bundle integrable system
//! and for local models of Higgs fields near their zeros.
//!
//! * [`exactmath`]: rationals, named-variable polynomials, exact rank,
//!   resultants and discriminants.
//! * [`genus2`]: the explicit Hamiltonians `h0, h1, h2` on `T*P^3`, their
//!   Poisson brackets, Jacobian rank, the sign-flip involution, and a
//!   least-squares fiber solver.
//! * [`kummer`]: the Kummer quartic and its pencil, node search, and the
//!   elliptic fiber over the `d = 2` critical locus with its discriminant.
//! * [`localhiggs`]: traceless 2x2 matrices over truncated power series,
//!   zero classification, symplectic pairings, Hessian residues, the
//!   nondegeneracy (Cartan) test, Hecke transforms, dimension bookkeeping.
//!
//! Symbolic identities use exact arithmetic only; floating point appears
//! only in [`genus2::fiber_solve`], the numeric rank, and
//! [`kummer::kummer_singular_search`].

pub mod error;
pub mod exactmath;
pub mod genus2;
pub mod kummer;
pub mod localhiggs;
pub mod numeric;

pub use error::{Error, Result};
pub use exactmath::{MPoly, QuadraticNumber, RatMatrix, Rational, Symbol, UniPoly};
