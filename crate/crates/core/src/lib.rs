//! Executable constructions and certificates for Ramsey simplicity of
//! random graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`], [`coloured`], [`gnp`], [`embed`], [`connectivity`] and
//!   [`format`] provide the graph substrate;
//! * [`analysis`] profiles the minimum-degree neighbourhood, checks
//!   well-behavedness and runs Monte-Carlo estimates;
//! * [`gamma`] builds and verifies the coloured neighbourhood gadgets;
//! * [`arrowing`] decides `G -> (H)_q` exactly at small scale;
//! * [`forest`] runs the forest construction and its pigeonhole argument;
//! * [`bounds`] evaluates the closed-form threshold bounds.

pub mod analysis;
pub mod arrowing;
pub mod bitset;
pub mod bounds;
pub mod coloured;
pub mod connectivity;
pub mod embed;
pub mod error;
pub mod forest;
pub mod format;
pub mod gamma;
pub mod gnp;
pub mod graph;
pub mod seed;
pub mod verify;

pub use bitset::BitSet;
pub use coloured::ColouredGraph;
pub use embed::{contains_forest_copy, Embedding};
pub use error::{Error, Result};
pub use graph::Graph;
pub use seed::Seed;
