//! Library side of the `lss` command-line tool.

pub mod app;
pub mod dot;
pub mod report;
