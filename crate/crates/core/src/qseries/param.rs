use std::fmt;

use num_traits::{One, Zero};

use super::monomial::ZExps;
use super::series::pow_rational;
use super::{HalfInt, Monomial, Rational, Series};
use crate::error::{Error, Result};

/// A point or charge parameter with value s²·q^d·Π z_i^{e_i}.
///
/// Storing the square root `s` of the rational coefficient keeps every
/// half-integer power of the parameter rational: t^{1/2} = s·q^{d/2}·z^{e/2}.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Param {
    pub s: Rational,
    pub d: HalfInt,
    z: ZExps,
}

impl Param {
    pub fn new(s: Rational, d: HalfInt) -> Self {
        assert!(!s.is_zero(), "parameter root s must be nonzero");
        Param { s, d, z: Vec::new() }
    }

    /// Like [`Param::new`], rejecting s = 0 with an error instead of a panic.
    pub fn try_new(s: Rational, d: HalfInt) -> crate::error::Result<Self> {
        if s.is_zero() {
            return Err(crate::error::Error::InvalidInput("parameter root s must be nonzero".into()));
        }
        Ok(Param::new(s, d))
    }

    /// A q- and z-free point t = s².
    pub fn point(s: Rational) -> Self {
        Param::new(s, HalfInt::ZERO)
    }

    /// Convenience constructor from an integer fraction.
    pub fn frac(num: i64, den: i64) -> Self {
        Param::point(Rational::new(num.into(), den.into()))
    }

    pub fn with_z(mut self, var: u32, e: i64) -> Self {
        let m = Monomial::new(HalfInt::ZERO, self.z.iter().copied().chain([(var, e)]));
        self.z = m.z().to_vec();
        self
    }

    pub fn z(&self) -> &[(u32, i64)] {
        &self.z
    }

    /// The rational coefficient c = s².
    pub fn coefficient(&self) -> Rational {
        &self.s * &self.s
    }

    /// True when the value is exactly 1.
    pub fn is_unit(&self) -> bool {
        self.d == HalfInt::ZERO && self.z.is_empty() && self.coefficient().is_one()
    }

    /// True for a plain rational point (no q-shift, no charge variables).
    pub fn is_plain(&self) -> bool {
        self.d == HalfInt::ZERO && self.z.is_empty()
    }

    pub fn inv(&self) -> Param {
        Param {
            s: self.s.recip(),
            d: -self.d,
            z: self.z.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn mul(&self, o: &Param) -> Param {
        let m = Monomial::new(HalfInt::ZERO, self.z.iter().copied().chain(o.z.iter().copied()));
        Param { s: &self.s * &o.s, d: self.d + o.d, z: m.z().to_vec() }
    }

    pub fn pow_int(&self, k: i64) -> Param {
        Param {
            s: pow_rational(&self.s, k),
            d: self.d * k,
            z: self.z.iter().filter(|_| k != 0).map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// The parameter multiplied by q^k.
    pub fn q_shift(&self, k: HalfInt) -> Param {
        Param { s: self.s.clone(), d: self.d + k, z: self.z.clone() }
    }

    /// Product of a list of parameters (empty product is 1).
    pub fn product<'a>(ps: impl IntoIterator<Item = &'a Param>) -> Param {
        ps.into_iter().fold(Param::point(Rational::one()), |acc, p| acc.mul(p))
    }

    /// The monomial coefficient and monomial of p^r, if legal.
    pub fn power_parts(&self, r: HalfInt) -> Result<(Rational, Monomial)> {
        let illegal = || Error::IllegalPower(format!("({self})^({r})"));
        let qd = self.d.checked_mul(r).ok_or_else(illegal)?;
        let mut z = Vec::with_capacity(self.z.len());
        for &(v, e) in &self.z {
            let t = e * r.twice();
            if t % 2 != 0 {
                return Err(illegal());
            }
            z.push((v, t / 2));
        }
        // s^{2r} = s^{twice(r)}
        let c = pow_rational(&self.s, r.twice());
        Ok((c, Monomial::new(qd, z)))
    }

    /// p^r as a single-monomial series.
    pub fn power(&self, r: HalfInt, n: HalfInt) -> Result<Series> {
        let (c, m) = self.power_parts(r)?;
        Ok(Series::monomial(c, m, n))
    }

    /// The value s²q^d z^e as a series.
    pub fn value(&self, n: HalfInt) -> Series {
        self.power(HalfInt::ONE, n).expect("integer powers are always legal")
    }

    /// β(t) = t^{1/2}/(1 − t) = 1/(t^{−1/2} − t^{1/2}), the central summand of
    /// the field operators.
    pub fn c_term(&self, n: HalfInt) -> Result<Series> {
        if self.is_unit() {
            return Err(Error::DegenerateParameter(format!("β(t) has a pole at t = {self}")));
        }
        if self.is_plain() {
            let c = self.coefficient();
            return Ok(Series::constant(&self.s / (Rational::one() - c), n));
        }
        if self.d == HalfInt::ZERO {
            return Err(Error::NonTruncatable(format!(
                "β({self}) has no expansion in q when the charge variables sit at q-order zero"
            )));
        }
        // expand in whichever of t, t^{-1} carries positive q-valuation
        let (t, sign) = if self.d > HalfInt::ZERO { (self.clone(), 1) } else { (self.inv(), -1) };
        let m = n + t.d;
        let half = t.power(HalfInt::HALF, m)?;
        let denom = Series::one(m).sub(&t.value(m));
        let out = half.mul(&denom.invert()?).truncate(n);
        Ok(if sign < 0 { out.neg() } else { out })
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^2", self.s)?;
        if self.d != HalfInt::ZERO {
            write!(f, "*q^({})", self.d)?;
        }
        for &(v, e) in &self.z {
            write!(f, "*z{v}^({e})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    #[test]
    fn powers_match_componentwise_rule() {
        let n = HalfInt::int(5);
        let t = Param::frac(2, 3);
        assert_eq!(t.power(HalfInt::HALF, n).unwrap(), Series::constant(rat(2, 3), n));
        let t1 = Param::new(rat(2, 3), HalfInt::ONE);
        assert_eq!(
            t1.power(HalfInt::from_twice(3), n).unwrap(),
            Series::monomial(rat(8, 27), Monomial::q(HalfInt::from_twice(3)), n)
        );
        let x = Param::new(rat(1, 1), HalfInt::HALF).with_z(1, -1);
        assert_eq!(
            x.power(HalfInt::int(2), n).unwrap(),
            Series::monomial(rat(1, 1), Monomial::new(HalfInt::ONE, [(1, -2)]), n)
        );
        assert!(x.power(HalfInt::HALF, n).is_err());
    }

    #[test]
    fn c_term_values() {
        let n = HalfInt::int(4);
        assert_eq!(Param::frac(2, 3).c_term(n).unwrap(), Series::constant(rat(6, 5), n));
        assert!(matches!(Param::frac(1, 1).c_term(n), Err(Error::DegenerateParameter(_))));
        assert!(matches!(Param::frac(-1, 1).c_term(n), Err(Error::DegenerateParameter(_))));
        let t = Param::new(rat(1, 1), HalfInt::ONE);
        let b = t.c_term(n).unwrap();
        for k in 0..4 {
            assert_eq!(b.coeff_q(HalfInt::from_twice(2 * k + 1)), rat(1, 1));
        }
        assert_eq!(b.len(), 4);
        // β(t^{-1}) = -β(t)
        let u = Param::new(rat(2, 3), HalfInt::ONE);
        assert_eq!(u.inv().c_term(n).unwrap(), u.c_term(n).unwrap().neg());
    }
}
