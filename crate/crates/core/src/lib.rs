//! Exact Euler characteristics of tensor products of tautological bundles on
//! Hilbert schemes of points on a smooth projective surface, together with
//! brute-force checks of the representation theory behind them.
//!
//! - [`surface`]: Chern characters, Hirzebruch-Riemann-Roch and graded
//!   Euler characteristics.
//! - [`symgroup`]: permutations, sign conventions and orbit representatives.
//! - [`complexes`]: the complexes `R̃_ℓ` with their group actions and exact
//!   rank computations.
//! - [`euler`]: the closed Euler characteristic formulas.

pub mod complexes;
pub mod euler;
pub mod graded;
pub mod linalg;
pub mod rational;
pub mod surface;
pub mod symgroup;

pub use rational::Rational;
pub use surface::{BundleSpec, ChernCharacter, DivisorClass, SurfaceError, SurfaceModel};
