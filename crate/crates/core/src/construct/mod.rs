//! Bend-bounded representations of general graphs.

pub(crate) mod canvas;
mod cover;
mod degeneracy;
mod interval;
mod treewidth;

pub use cover::{
    construct_edge_coloring, construct_from_global_cover, construct_from_local_cover, cover_from_coloring,
};
pub use degeneracy::{construct_degeneracy, construct_forest};
pub use interval::{to_interval_representation, IntervalRepresentation};
pub use treewidth::construct_treewidth;
