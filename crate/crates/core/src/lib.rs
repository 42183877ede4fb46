//! Recognition and colouring of (P6, diamond)-free graphs with at most
//! `ω + 3` colours, with exact oracles for checking every step.
//!
//! The colouring driver ([`color::color`]) reduces on components, dominated
//! vertices and clique cutsets. Leaves without an induced C5 are perfect and
//! get `ω` colours; leaves with clique number at most 3 are searched with six
//! colours; the rest are coloured through the C5 partition of [`c5`].

pub mod c5;
pub mod color;
pub mod decompose;
pub mod generators;
pub mod graph;
pub mod groetzsch;
pub mod io;
pub mod oracles;
pub mod patterns;

pub use color::{color, verify_coloring};
pub use graph::{Coloring, Graph, GraphError, VertexSet};
pub use patterns::{class_membership, Membership, PatternKind, PatternWitness};
