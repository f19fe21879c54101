//! Enumeration, geometric realization and structural analysis of
//! vertex-transitive TLF-planar graphs.
//!
//! A graph in this class is described exactly by a finite certificate, the
//! *labeling scheme*: a locked pair of edge/face color vectors around a
//! vertex together with one edge neighborhood per edge color. The crate
//!
//! * enumerates all valid labeling schemes of a given degree up to
//!   isomorphism ([`enumerate`]),
//! * builds the finite-state border automaton of a scheme and derives face
//!   borders and primitive type vectors ([`automaton`]),
//! * solves the angle equation and realizes finite balls of the graph as
//!   regular-polygon tilings of the sphere, the Euclidean or the hyperbolic
//!   plane ([`geometry`], [`ball`]),
//! * decides connectivity, growth and (boundedly) Cayley-ness
//!   ([`cayley`]),
//! * persists a catalog of families and renders SVG pictures
//!   ([`catalog`], [`render`]).

pub mod automaton;
pub mod ball;
pub mod catalog;
pub mod cayley;
pub mod color;
pub mod enumerate;
pub mod geometry;
pub mod neighborhood;
pub mod pair;
pub mod render;
pub mod scheme;

pub use color::{EdgeColor, FaceColor};
pub use pair::VectorPair;
pub use scheme::LabelingScheme;

use thiserror::Error;

/// Errors surfaced by library operations.
///
/// `User` maps to exit code 1 in the CLI, `Internal` to exit code 2.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0}")]
    User(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

impl Error {
    pub fn user(msg: impl Into<String>) -> Self {
        Error::User(msg.into())
    }
    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
