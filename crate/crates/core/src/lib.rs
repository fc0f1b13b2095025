//! Exact highest-weight representation theory for simple algebraic groups.
//!
//! Root data for every simple type (and products of them), characteristic-zero
//! weight multiplicities, plethysm, parabolic level stratifications, invariant
//! forms and torus restrictions between classical groups and their subgroups.
//!
//! All arithmetic is exact. The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(test), no_std)]
#![allow(clippy::needless_range_loop)]

extern crate alloc;

mod error;

pub mod characters;
pub mod embed;
pub mod levels;
pub mod rootcore;
pub mod verify;

pub use error::{Error, Result};
pub use rootcore::{CartanType, Family, GraphAut, RootCoords, RootSystem, SimpleType, Weight};

/// Default bound on the number of entries a character may hold.
pub const DEFAULT_CAP: usize = 5_000_000;
