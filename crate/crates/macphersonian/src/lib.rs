//! Exact combinatorics of rank-3 oriented matroids.
//!
//! The crate enumerates rank-3 chirotopes on small ground sets, builds their
//! covector spheres, assembles the MacPhersonian poset under the weak order,
//! and computes the homology of its order complex. A partition-counting
//! oracle for the mod-2 Betti numbers of real Grassmannians provides the
//! reference values the MacPhersonian homology is checked against.
//!
//! Ground-set elements are `1..=n` throughout; sign vectors and chirotopes
//! expose 1-based indices to match that convention (storage is 0-based).
//!
//! Entry points:
//! - [`sign`]: the sign algebra `{0,+,-}`, sign vectors, and the lattice
//!   with top element.
//! - [`chirotope`]: rank-3 chirotopes, axiom validation, the weak order,
//!   and canonical oriented-matroid identity.
//! - [`covector`]: cocircuits, covector spheres, topes, sphere checks, and
//!   the `maxcov` map between comparable oriented matroids.
//! - [`macph`]: exhaustive enumeration and the MacPhersonian posets.
//! - [`homology`]: order complexes, GF(2) and integral Betti numbers, and
//!   the Grassmannian oracle.
//! - [`realizable`]: exact integer vector configurations and their order
//!   types, used as an independent geometric oracle.
//! - [`verify`]: the machine-checkable property suites.
//!
//! Each major capability has a runnable example under `examples/`; the
//! `macph` binary wraps the same functions as subcommands.

pub mod chirotope;
pub mod covector;
pub mod gf2;
pub mod homology;
pub mod macph;
pub mod manifest;
pub mod realizable;
pub mod sign;
pub mod snf;
pub mod verify;
