//! Exact symbolic construction and verification of parabolic twists for
//! U(sl(n)), by truncated power-series arithmetic over the rationals.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod expr;
pub mod hopf;
pub mod lie;
pub mod rep;
pub mod twists;
pub mod verify;

pub use error::{Result, TwistError};
