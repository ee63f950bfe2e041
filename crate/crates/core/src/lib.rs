#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod cli;
mod error;
pub mod fixtures;
pub mod functors;
pub mod linalg;
pub mod operad;
pub mod perm;
pub mod trident;

pub use error::{Error, Result};
