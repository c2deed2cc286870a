//! Exact computations for finite gauge theories.
//!
//! Everything here works over exact scalars: rationals modulo one for cocycle
//! values, cyclotomic numbers for characters and partition functions, and
//! Gaussian integers for Clifford modules. The crate is `no_std` with `alloc`;
//! the `std` feature only adds `std::error::Error` plumbing.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod anomaly;
pub mod bounds;
pub mod chartable;
pub mod cochain;
pub mod error;
pub mod fields;
pub mod group;
pub mod linalg;
pub mod projective;
pub mod rarita;
pub mod scalar;
pub mod tqft2;
pub mod verlinde;

pub use bounds::Bounds;
pub use error::{Error, Result};
