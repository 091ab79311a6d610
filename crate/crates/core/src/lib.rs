//! Exact geometric quantization of symplectic tori `(V/Z, kω)` with rational
//! real polarizations.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_algebra`] integer and rational linear algebra, normal forms,
//!   exact signatures, phase bookkeeping and quadratic Gauss sums;
//! * [`symplectic_lattice`] the lattice `ℤ^{2g}` with its symplectic form,
//!   rational Lagrangians and adapted symplectic bases;
//! * [`maslov`] the Maslov–Kashiwara index, the `ℤ/2q` Maslov index on
//!   Lagrangian covers and the `[Sp(ℤ) × ℤ/8]` model of the integer
//!   metaplectic group;
//! * [`quantization`] Bohr–Sommerfeld labels and BKS intertwiners;
//! * [`representations`] the finite Heisenberg group and the `Sp(ℤ)` and
//!   `Mp(ℤ)` representations;
//! * [`random`] seeded generators for test instances;
//! * [`verify`] randomized property suites shared by the CLI and the tests.

pub mod error;
pub mod exact_algebra;
pub mod maslov;
pub mod quantization;
pub mod random;
pub mod representations;
pub mod symplectic_lattice;
pub mod verify;

pub use error::{Error, Result};
