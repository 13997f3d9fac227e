//! Determinantal representations of integer polynomials.

pub mod chains;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod pencil;
pub mod poly;
pub mod represent;

pub use error::{Error, Result};
