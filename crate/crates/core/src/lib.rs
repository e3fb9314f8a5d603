pub mod charring;
pub mod cli;
pub mod error;
pub mod modweights;
pub mod rootsys;
pub mod supports;
pub mod sweep;
pub mod weyl;

pub use error::{Error, Result};
