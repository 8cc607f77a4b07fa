//! Exact Ostrowski numeration for the quadratic irrationals
//! `α = (d + √(d² + 4))/2`, the arrays built from it, and the recurrence
//! identities those arrays satisfy.

pub mod error;
pub mod exactq;
pub mod numer;
pub mod ostronometry;
pub mod towers;

pub use error::{Error, Result};
pub use exactq::{isqrt, QuadOp, QuadraticValue};
pub use numer::{DualWord, NumerationContext, OstrowskiWord, WordClass};
