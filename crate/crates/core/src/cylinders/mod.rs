//! Round-graphs, subset cylinders, and exact cylinder tables of counting currents.

pub mod io;
mod round_graph;
mod table;

pub use round_graph::{
    enumerate_round_graphs, in_lens, round_graph_count, validate_round_graph, EnumerationLimits,
    Lens, RoundGraph,
};
pub use table::{
    check_matching, cylinder_table, distance, hull_counts, local_ball, RationalCurrent, Violation,
    WeightTable,
};
