pub mod cli;
pub mod error;
pub mod fox;
pub mod json;
pub mod laurent;
pub mod presentation;
pub mod repn;
pub mod scalars;
pub mod torus_formulas;
pub mod twisted;

pub use error::{Error, Result};
