//! Command-line front end for `gamma-core`: edge-list files, JSON and text
//! reports, seeded random corpora and benchmarks.

pub mod analysis;
pub mod bench;
pub mod caps;
pub mod commands;
pub mod corpus;
pub mod edgelist;
pub mod error;
pub mod family;
pub mod parallel;
pub mod report;
pub mod suite;

pub use commands::{run, Cli};
pub use error::CliError;
