//! The `dcx` command line: file formats, reports and the built-in corpus.

pub mod error;
pub mod files;
pub mod corpus;
pub mod report;
pub mod commands;

pub use commands::run;
