//! Exact-arithmetic toolkit for the lattice, group and combinatorial facts
//! attached to intersections of theta-divisor translates on an abelian
//! fourfold: Néron–Severi lattices around E6/E8, the Weyl group W(E6),
//! ℤ/2 group cohomology, Hodge-number arithmetic, Littlewood–Richardson
//! decompositions and the permutation Galois group of difference morphisms.
//!
//! Everything is computed over arbitrary-precision integers and rationals;
//! there is no floating point anywhere in the crate.
//!
//! The `examples/` directory contains one runnable example per capability,
//! and the `theta-e6` binary runs the verification suites and emits
//! machine-readable reports.

pub mod cohomology;
pub mod exterior;
pub mod hodge;
pub mod isometry;
pub mod lattice;
pub mod matrix;
pub mod perm;
pub mod report;
pub mod schur;
pub mod weyl;

pub use lattice::{DiscriminantGroup, Lattice, LatticeError};
