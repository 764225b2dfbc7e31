//! Exact closed forms for determinants and permanents of Hadamard powers of
//! Cauchy matrices built on the roots of `x^n + a` and `x^n + b`, with
//! brute-force oracles over cyclotomic fields to check them bit for bit.

pub mod cli;
pub mod cyclotomic;
pub mod error;
pub mod exact;
pub mod jets;
pub mod matrix;
pub mod scott;
pub mod selftest;
pub mod series;
pub mod symfunc;

pub use error::{Error, Result};
