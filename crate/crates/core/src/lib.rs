//! Combinatorics of the totally nonnegative Grassmannian.
//!
//! Decorated permutations, Grassmann necklaces and positroids; Grassmannian
//! graphs with their strands, face labels, perfect orientations and local
//! moves; weakly separated collections; boundary measurement; polygon tilings
//! and membranes; monotone paths on the hypersimplex.

pub mod baues;
pub mod corpus;
pub mod error;
pub mod geometry;
pub mod graph;
pub mod measurement;
pub mod moves;
pub mod positroid;
pub mod subset;
pub mod verify;
pub mod weak_separation;

pub use error::{Error, Result};
pub use graph::{GraphBuilder, GrassmannianGraph, PerfectOrientation};
pub use positroid::{DecoratedPermutation, GrassmannNecklace, Positroid};
pub use subset::Subset;
