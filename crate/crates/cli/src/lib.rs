//! Library surface of the batch front end: document model, report
//! shapes and the command implementations, kept separate from the binary
//! so integration tests can call them directly.

pub mod commands;
pub mod doc;
pub mod report;
