//! Arbitrary-precision dyadic numbers, outward-rounded intervals and the
//! `f64` midpoint-radius kernel used on the search hot path.

mod ball;
mod complex;
mod dyadic;
mod interval;

pub use ball::{BallVec, F64Ball};
pub use complex::ComplexDyadic;
pub use dyadic::{next_down, next_up, Dyadic, Round};
pub use interval::{ComplexInterval, Interval};
