//! Exact truncated q-series, Fock-space trace oracles and closed formulas for
//! n-point correlation functions of negative-level modules over the
//! infinite-rank Lie algebras a-infinity, c-infinity and d-infinity.
//!
//! Every generating function is computed twice: once by brute-force
//! enumeration of a Fock-space basis ([`fock`]) and once from a closed
//! formula ([`closedform`]). The [`verify`] module compares the two
//! coefficient by coefficient.

pub mod closedform;
pub mod combinat;
pub mod error;
pub mod fock;
pub mod qseries;
pub mod verify;

pub use error::{Error, Result};
pub use qseries::{HalfInt, Monomial, Param, Rational, Series};
