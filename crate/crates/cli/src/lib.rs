//! Command-line tools, JSON documents and verification suites for
//! `rankdual-core`.

pub mod cli;
pub mod doc;
pub mod sample;
pub mod suite;
