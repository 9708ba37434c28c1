//! Exact Grothendieck-level model of the boson-fermion correspondence.

pub mod error;
pub mod category;
pub mod correspondence;
pub mod fock;
pub mod oracle;
pub mod partitions;
pub mod symring;
pub mod verifier;

pub use error::{Error, Result};
pub use partitions::Partition;
pub use symring::{LinOp, Rational, SymFunc};
