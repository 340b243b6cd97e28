pub mod charvar;
pub mod cli;
pub mod diagrams;
pub mod error;
pub mod genfun;
pub mod polygraph;
pub mod surface;

pub use error::{Error, Result};
