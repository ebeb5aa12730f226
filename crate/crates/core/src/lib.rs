//! Exact finite-dimensional algebra for Rota-Baxter operators, O-operators
//! (relative Rota-Baxter operators) and dendriform di- and trialgebras.
//!
//! Every structure is stored by structure constants over ℚ or a prime field
//! and every identity is checked exactly on basis elements.

pub mod error;
pub mod exactlin;
pub mod report;
pub mod structures;
pub mod operators;
pub mod constructions;
pub mod equivalence;
pub mod enumeration;
pub mod catalogue;
pub mod document;
pub mod cli;
mod fastfp;

pub use error::{Error, Result};
