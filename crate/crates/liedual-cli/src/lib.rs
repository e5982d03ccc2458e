//! JSON documents and subcommand handlers behind the `liedual` binary.

pub mod commands;
pub mod doc;
