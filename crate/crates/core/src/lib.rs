pub mod error;
pub mod field;
pub mod fracops;
pub mod coupledsim;
pub mod greens;
pub mod regions;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
