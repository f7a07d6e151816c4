//! Exact computations for holomorphic and general discrete series of
//! Hermitian Lie groups `SU(p,q)` and `Sp(n,ℝ)`: cascades of strongly
//! orthogonal roots, Kirwan cones, Blattner parameters, admissibility of
//! restrictions and branching multiplicities.
//!
//! All arithmetic is over `ℚ` (`num_rational::Ratio<i64>`).

pub mod branch;
pub mod cli;
pub mod error;
pub mod hermitian;
pub mod linalg;
pub mod lp;
pub mod matrix;
pub mod mult;
pub mod params;
pub mod partition;
pub mod rational;
pub mod rootsys;
pub mod verify;
pub mod weight;

pub use error::{Error, Result};
pub use hermitian::{Family, HermitianPair};
pub use rational::Rational;
pub use weight::{Ambient, Weight};
