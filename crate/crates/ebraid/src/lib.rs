//! File formats, the braid corpus, property suites and the `ebraid`
//! command-line front end over [`ebraid_core`].

pub mod cli;
pub mod corpus;
mod error;
pub mod format;
pub mod verify;

pub use error::{AppError, Result};
