//! Exact integer and rational linear algebra, phases, and Gauss sums.

pub mod gauss;
pub mod int_matrix;
pub mod normal_form;
pub mod phase;
pub mod rational;
pub mod signature;

/// Rational scalars. Desk-scale inputs keep numerators well inside `i128`.
pub type Rational = num_rational::Ratio<i128>;

pub use gauss::gauss_reciprocity_check;
pub use int_matrix::IntMatrix;
pub use normal_form::{coset_reps, hnf, left_kernel, same_coset, saturate, snf};
pub use phase::{exp_i_pi, ComplexMatrix, PhaseSum, UnitPhase};
pub use rational::RatMatrix;
pub use signature::{signature, Signature};
