//! Exact searches on dense undirected graphs.

mod coloring;
mod mis;

pub use coloring::{chromatic_number, color_count, dsatur, Coloring, EXACT_COLORING_LIMIT};
pub use mis::{greedy_independent_set, max_independent_set, IndependentSet};
