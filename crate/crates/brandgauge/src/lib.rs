//! Corpus ingestion, on-disk formats, the command-line tool and the HTTP
//! service around `brandgauge-core`.

pub mod cli;
pub mod corpus;
pub mod engine;
mod error;
pub mod formats;
pub mod http;
pub mod synth;
pub mod training;

pub use error::{Error, Result};
