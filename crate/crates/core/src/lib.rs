//! Exact algorithms for integer partitions, growth-diagram correspondences,
//! cylindric plane partitions, Macdonald-type (q,t) weights, alternating sign
//! matrices and the λ-determinant.

pub mod asm;
pub mod emit;
pub mod error;
pub mod correspondences;
pub mod cylindric;
pub mod partitions;
pub mod qt;
pub mod rational;
pub mod verify;

pub use error::{ForgeError, Result};
pub use partitions::{Partition, Profile};
