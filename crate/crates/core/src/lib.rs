pub mod action;
pub mod character;
pub mod classify;
pub mod cli;
pub mod error;
pub mod numth;
pub mod orbits;
pub mod parking;
pub mod report;
pub mod slimgraph;
pub mod symfun;

pub use error::{Error, Result};
