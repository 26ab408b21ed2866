//! Colored HOMFLY invariants of torus knots and links computed exactly, with
//! the Hecke-algebra Markov trace as an independent check and a harness that
//! verifies the classical and special limits of the resulting polynomials.

pub mod arith;
pub mod characters;
pub mod error;
pub mod hecke;
pub mod partition;
pub mod schur;
pub mod special;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
