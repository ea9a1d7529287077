//! Folded core graphs of finitely generated subgroups.

mod graph;
pub mod io;
pub mod random;
mod subgroup;

pub use graph::{CoreGraph, Edge, Index, LabeledGraph};
pub use random::random_finite_cover;
pub use subgroup::Subgroup;

use crate::error::Result;
use crate::words::Word;

/// Basepointed core graph of the subgroup generated by `gens`.
pub fn core_from_generators(gens: &[Word], rank: usize) -> Result<CoreGraph> {
    crate::words::Basis::new(rank)?;
    for g in gens {
        if g.rank() != rank {
            return Err(crate::error::Error::BasisMismatch {
                left: rank,
                right: g.rank(),
            });
        }
    }
    LabeledGraph::wedge(rank, gens).fold()
}
