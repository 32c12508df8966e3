//! Exact computation of three domination parameters of small graphs (the
//! domination number, the total domination number, and the connected
//! domination number) together with a catalog of inequalities relating
//! them and a harness that verifies the catalog over graph corpora.

pub mod bounds;
pub mod enumerate;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod report;
pub mod solve;
pub mod verify;

pub use graph::{Graph, GraphError, VertexSet, MAX_VERTICES};
pub use solve::{ParameterTriple, SolveError};
