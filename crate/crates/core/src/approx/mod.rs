//! Rational kernel points of the matching system, integerization, and the
//! `H_n` approximation family.

mod family;
mod kernel;

pub use family::{convergence_run, subgroup_gn, subgroup_hn};
pub use kernel::{
    approximate_table, integerize, integerize_vector, kernel_basis, max_norm_distance,
    rational_kernel_point, KernelProblem,
};
