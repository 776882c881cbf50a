//! Library side of the `rigidity-lab` binary: command implementations and
//! the built-in table catalogue, kept separate so the test suites can call
//! them directly.

pub mod commands;
pub mod tables;
