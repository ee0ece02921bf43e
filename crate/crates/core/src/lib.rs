//! Exact combinatorics for cables of rational open books.

pub mod cabling;
pub mod cli;
pub mod data;
pub mod error;
pub mod lens;
pub mod monodromy;
pub mod openbook;
pub mod slope;
pub mod words;

pub use error::{CableError, Result};
