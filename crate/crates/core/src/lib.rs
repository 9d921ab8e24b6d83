#![no_std]

extern crate alloc;

pub mod error;
pub mod exact;
pub mod polytope;
pub mod barvinok;
pub mod rgf;
pub mod ehrhart;

pub use error::{Error, Result};
pub mod oracle;
