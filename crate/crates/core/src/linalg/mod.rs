//! Exact linear algebra over Q and Z. No floating point anywhere.

pub mod integer;
pub mod lattice;
pub mod modular;
pub mod rational;

pub use lattice::{determinant, hnf, hnf_i64, lattice_index, smith_diagonal, IntegerLatticeBasis, LatticeIndex};
pub use rational::{primitive_integer_vector, RationalMatrix};

use num_bigint::BigInt;

pub fn rank(a: &RationalMatrix) -> usize {
    a.rank()
}

pub fn kernel_basis(a: &RationalMatrix) -> Vec<Vec<BigInt>> {
    a.kernel_basis()
}
