//! Edge-intersection graphs of paths on the plane grid.
//!
//! A representation assigns a rectilinear grid path to every vertex; two
//! vertices are adjacent exactly when their paths share a grid-edge. The
//! crate builds bend-bounded representations for several graph classes,
//! checks representations against target graphs, evaluates lower bounds
//! for complete bipartite graphs, and realizes the single-bend gadget
//! reduction from one-in-three satisfiability.

pub mod bipartite;
pub mod bounds;
pub mod construct;
pub mod coord;
pub mod error;
pub mod exact;
pub mod graph;
pub mod grid;
pub mod reduce3sat;
pub mod rep;
pub mod verify;

pub use coord::{Coord, Rational};
pub use error::{Error, Result};
pub use graph::{format_graph, parse_graph, Graph};
pub use grid::{GridPath, GridPoint, Orientation, PathKind, Segment, Subsegment, Symmetry};
pub use rep::Representation;

/// Integer grid point.
pub type Point = GridPoint<i64>;
/// Integer grid path.
pub type Path = GridPath<i64>;
/// Integer representation, the form every constructor returns.
pub type Rep = Representation<i64>;
