//! Commuting graphs of small solvable Lie algebras over finite fields.
//!
//! The crate builds the solvable Lie algebras of dimension up to 4 from their
//! classification tables, computes the connected components of their commuting
//! graphs by exhaustive enumeration over GF(q), and verifies the component
//! structure (counts, sizes, and shapes) against closed-form predictions.

pub mod catalog;
pub mod field;
pub mod graph;
pub mod lie;
pub mod linalg;
pub mod shape;
pub mod verify;

pub use field::{Felt, Field, FieldError, FieldRef};
pub use graph::{CommutingGraph, ComponentPartition, GraphError, VertexIndexer};
pub use lie::{LieAlgebra, LieError};
pub use linalg::{LinAlgError, Matrix, Subspace, Vector};
