//! Interval total colorings of graphs: explicit constructions, an exact
//! search oracle, closed-form bounds and certificate verification.

pub mod bounds;
pub mod coloring;
pub mod constructions;
pub mod dot;
pub mod family;
pub mod graph;
pub mod search;
pub mod transform;

pub use coloring::{
    invert, verify_interval_total, Certificate, Color, ColoringError, TotalColoring, VerifyOutcome,
    Violation,
};
pub use family::{FamilySpec, RegularBipartite};
pub use graph::{EdgeId, Graph, GraphError, VertexId};
