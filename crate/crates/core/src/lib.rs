//! Brand-personality scoring for web articles.
//!
//! This crate holds the pure algorithmic pieces: tokenization and readability,
//! lexicon engines, feature assembly, per-trait linear classifiers, brand
//! consistency measures, the multi-aspect sentence ranker and its evaluation
//! metrics. It is `no_std` and only needs an allocator; file formats, corpus
//! ingestion and the service live in the `brandgauge` crate.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classify;
pub mod consistency;
mod error;
pub mod eval;
pub mod features;
pub mod lexicon;
pub mod pipeline;
pub mod ranker;
pub mod resources;
pub mod stats;
pub mod text;

pub use error::{Error, Result};

/// Days since 1970-01-01. Calendar handling lives with the callers; the core
/// only needs day arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
#[serde(transparent)]
pub struct Day(pub i64);
