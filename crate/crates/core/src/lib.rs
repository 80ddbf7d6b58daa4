//! Minimal-perimeter lattice animals on the square, hexagonal and triangular
//! lattices.
//!
//! The crate enumerates fixed animals, builds the sets `M_n` of animals with
//! the least possible perimeter, follows inflation chains between them and
//! checks the combinatorial identities that govern those chains.

pub mod animal;
pub mod chem;
pub mod enumerate;
pub mod error;
mod graph;
pub mod io;
pub mod lattice;
pub mod patterns;
pub mod theory;
pub mod verify;

pub use animal::{Animal, CellSet};
pub use enumerate::{EnumConfig, MinimalSet};
pub use error::{Error, Precondition, Result};
pub use lattice::{AdjacencyMode, Cell, Lattice, LatticeKind};
