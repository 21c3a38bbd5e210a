//! Orthogonal root sets in simply laced root systems of types D_{2k}, E7, E8.
//!
//! The crate enumerates positive n-roots, classifies their coplanar
//! quadruples as crossings, nestings or alignments, checks the resulting
//! quasiparabolic structure, rewrites elements of the Macdonald
//! representation into noncrossing and nonnesting normal forms, and
//! certifies the Fano, Steiner and strongly regular graph structures that
//! appear in types E7 and E8.

pub mod bits;
pub mod cli;
pub mod clique;
pub mod error;
pub mod exceptional;
pub mod export;
pub mod fixtures;
pub mod invariants;
pub mod linalg;
pub mod macdonald;
pub mod nroots;
pub mod poset;
pub mod qpar;
pub mod rootsys;
pub mod special;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use nroots::{NRoot, NRootSpace};
pub use rootsys::{RootSystem, SystemType};
