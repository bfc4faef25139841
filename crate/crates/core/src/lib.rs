//! Support τ-tilting modules over Nakayama algebras.
//!
//! The crate enumerates support τ-tilting pairs, translates them into
//! triangulations of a punctured polygon and into integer sequences, and
//! builds the Hasse quiver of the pairs directly or by repeatedly removing
//! the socle of a projective-injective module.

pub mod algebra;
pub mod cli;
pub mod counting;
pub mod error;
pub mod format;
pub mod geometry;
pub mod modcat;
pub mod poset;
pub mod sequences;
pub mod tautilt;
pub mod verify;

pub use algebra::{AlgebraLiteral, NakayamaAlgebra, Shape, VertexId};
pub use error::{Error, Result};
pub use modcat::{BasicModule, Indec};
pub use tautilt::{Slot, SttPair};
