//! Computations with finitely generated subgroups of free groups and the
//! counting subset currents they define.
//!
//! * [`words`]: reduced words over a ranked basis.
//! * [`stallings`]: folded core graphs, membership, index, hull-cores.
//! * [`fiber`]: fiber products, intersections and the product `N(H, K)`.
//! * [`cylinders`]: round-graphs, subset cylinders and exact cylinder tables.
//! * [`realize`]: integral weight systems realized as unions of counting currents.
//! * [`approx`]: rational kernel points, integerization and the `H_n` family.

pub mod approx;
pub mod cylinders;
pub mod error;
pub mod fiber;
pub mod rational;
pub mod realize;
pub mod stallings;
pub mod words;

pub use error::{Error, Result};
pub use rational::Q;
pub use stallings::{CoreGraph, Subgroup};
pub use words::{Basis, Letter, Word};
