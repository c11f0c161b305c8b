//! Two-terminal alternating embeddings.
//!
//! A graph with terminals `x` and `y` is in the class handled here when it
//! has an embedding in the sphere or the torus such that some face boundary
//! visits `x` and `y` in the order `x, y, x, y`. The crate decides
//! membership, verifies and classifies minor-minimal non-members, and
//! searches for them exhaustively.

pub mod alternation;
pub mod canon;
pub mod cli;
pub mod embedding;
pub mod error;
pub mod formats;
pub mod graph;
pub mod obstruction;
pub mod planarity;

pub use error::{Error, Result};
