//! Finite rings given by explicit arithmetic, their quasinilpotent and
//! Jacobson sets, and the structural predicates built on them.
//!
//! Rings are realized from a [`RingDescriptor`] by [`build`]; elements are
//! dense indexes `0..order`.

pub mod checkers;
pub mod constructions;
pub mod coords;
pub mod descriptor;
pub mod error;
pub mod ring;
pub mod set;
pub mod suite;

pub use constructions::{build, build_with, BuildOptions};
pub use descriptor::{ElementLiteral, RingDescriptor};
pub use error::{BuildError, RingError};
pub use ring::{Elem, FiniteRing};
pub use set::ElementSet;
