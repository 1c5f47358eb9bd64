//! Boolean and small real matrix algebra.

mod boolean;
mod real;

pub use boolean::BoolMatrix;
pub use real::RealMatrix;
