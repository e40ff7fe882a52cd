//! Command implementations and the structured output shared by all of them.

pub mod commands;
pub mod output;

pub use output::{Format, OutputRecord, FORMAT_VERSION};
