//! Exact coefficients and asymptotics for Euler-type products whose exponents
//! are built from divisor functions.

pub mod asympt;
pub mod cli;
pub mod divisors;
pub mod error;
pub mod oracle;
pub mod series;

pub use divisors::{AdmissibleTriple, ArithmeticTable, Form};
pub use error::{Error, Result};
pub use series::{CoeffSequence, Kind, SeriesForm};
