//! Exact decision procedures for monomial Togliatti systems of cubics.
//!
//! A system is a split of the degree-`d` monomials in `x_0..x_n` into
//! generators `S` of an artinian ideal and the apolar set `P`. The crate
//! decides whether `S` fails the weak Lefschetz property in degree `d-1`,
//! whether the failure is minimal, whether the toric variety of `P` is
//! smooth, and classifies minimal smooth systems of cubics for small `n`.

pub mod classify;
pub mod error;
pub mod family;
pub mod graphs;
pub mod lefschetz;
pub mod linalg;
pub mod monomial;
pub mod partition;
pub mod poly;
pub mod polytope;
pub mod report;

pub use error::{Error, Result};
pub use monomial::{canonical_form, lattice_points_simplex, parse_system, ExponentVector, MonomialSystem};
pub use partition::PartitionSpec;
