//! Graph files and experiment reports on top of
//! [`travgraph_core`].

pub mod error;
pub mod format;
pub mod harness;
pub mod parallel;

pub use error::{Error, Result};
