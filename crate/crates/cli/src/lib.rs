//! Library surface of the `tagkit` command-line harness: file formats,
//! report structures and the subcommand implementations, kept callable so
//! integration tests can drive them directly.

pub mod commands;
pub mod corpus;
pub mod error;
pub mod eval_records;
pub mod report;
pub mod sweep;
