//! Exact and certified machinery for deciding whether an integer polynomial
//! divides a polynomial whose coefficients come from a finite digit set.
//!
//! * [`poly`] — the integer polynomial ring and its decompositions.
//! * [`numeric`] — dyadic numbers and outward-rounded interval arithmetic.
//! * [`roots`] — certified root isolation and Mahler measure.
//! * [`search`] — the remainder graph and its exploration.
//! * [`classify`] — family enumeration, prefilters and count tables.
#![no_std]

extern crate alloc;

pub mod classify;
pub mod error;
pub mod numeric;
pub mod poly;
pub mod roots;
pub mod search;

pub use error::{Error, Result};
pub use poly::IntPoly;
pub use roots::mahler_measure;
