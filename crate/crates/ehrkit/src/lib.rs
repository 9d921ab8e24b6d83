//! File formats and the command-line driver for `ehrkit-core`.

pub mod cli;
pub mod format;
