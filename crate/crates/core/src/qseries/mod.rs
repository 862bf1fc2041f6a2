//! Exact truncated series in q^{1/2} with charge variables, Pochhammer
//! symbols, basic hypergeometric series, theta functions and jets.

mod halfint;
pub mod jet;
pub mod json;
mod monomial;
mod param;
pub mod pochhammer;
mod series;
pub mod theta;

pub use halfint::HalfInt;
pub use jet::Jet;
pub use monomial::{Monomial, ZExps};
pub use param::Param;
pub use pochhammer::{euler, poch_inf, poch_n, pochhammer_inf, pochhammer_n, qhyper};
pub use series::{pow_rational, Series};
pub use theta::{theta, theta_jet};

use crate::error::{Error, Result};

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;

/// Shorthand for the rational num/den.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Parses `p`, `p/q` (either sign) into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: num_bigint::BigInt = n.trim().parse().map_err(|_| bad())?;
    let d: num_bigint::BigInt = d.trim().parse().map_err(|_| bad())?;
    if d == 0.into() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}
