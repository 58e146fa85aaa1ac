#![cfg_attr(not(feature = "std"), no_std)]
//! Exact computation for the two-zero p-ary cyclic codes with parity-check
//! polynomial h1(x)h2(x), where h1 and h2 are the minimal polynomials of
//! -π^(-1) and π^(-(p^k+1)/2).
//!
//! The crate is `no_std` + `alloc` when built without the default `std`
//! feature; `std` only adds rayon-backed parallel enumeration.

#![allow(clippy::needless_range_loop)]

extern crate alloc;

mod arith;
pub mod budget;
pub mod codes;
pub mod error;
pub mod expsums;
pub mod gf;
mod par;
pub mod quadforms;

pub use budget::Budget;
pub use error::{Error, Result};
