//! Exact computations on finite-dimensional evolution algebras.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * exact scalars over the rationals, towers of quadratic extensions of the
//!   rationals and odd prime fields ([`scalar`]),
//! * the algebra model: products, subspaces, ideals, quotients and changes of
//!   natural basis ([`algebra`]),
//! * decision procedures for regularity, nilpotency, supersolvability and
//!   modularity with constructive witnesses ([`classify`]),
//! * exact subalgebra solvers for regular algebras ([`regular`]),
//! * subalgebra lattices with modular-law, pentagon and quasi-ideal checks
//!   ([`lattice`]).
#![no_std]

extern crate alloc;

pub mod algebra;
pub mod classify;
pub mod error;
pub mod lattice;
pub mod linalg;
mod poly;
pub mod regular;
pub mod scalar;

pub use algebra::{AlgElement, BasicIdeal, EvolutionAlgebra, Subspace};
pub use error::{Error, Result};
pub use scalar::{FieldDescriptor, Scalar};
