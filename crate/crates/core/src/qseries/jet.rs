use num_traits::One;

use super::{HalfInt, Rational, Series};
use crate::error::Result;

/// Truncated Taylor expansion in an infinitesimal ε under t ↦ t·e^ε.
///
/// `coeffs[k]` holds (t d/dt)^k f / k!, so arithmetic on jets is arithmetic
/// of polynomials in ε modulo ε^{order+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Jet {
    coeffs: Vec<Series>,
}

impl Jet {
    pub fn new(coeffs: Vec<Series>) -> Self {
        assert!(!coeffs.is_empty(), "a jet has at least one coefficient");
        Jet { coeffs }
    }

    pub fn constant(c: Series, order: usize) -> Self {
        let n = c.truncation();
        let mut coeffs = vec![c];
        coeffs.resize(order + 1, Series::zero(n));
        Jet { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Series] {
        &self.coeffs
    }

    /// (t d/dt)^k f / k!.
    pub fn coeff(&self, k: usize) -> &Series {
        &self.coeffs[k]
    }

    /// The k-th derivative (t d/dt)^k f = k!·coeff(k).
    pub fn derivative(&self, k: usize) -> Series {
        self.coeffs[k].scale(&Rational::from_integer(factorial(k).into()))
    }

    pub fn add(&self, o: &Jet) -> Jet {
        Jet { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Jet) -> Jet {
        Jet { coeffs: self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect() }
    }

    pub fn mul_series(&self, s: &Series) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|a| a.mul(s)).collect() }
    }

    pub fn mul(&self, o: &Jet) -> Jet {
        let k = self.order().min(o.order());
        let coeffs = (0..=k)
            .map(|i| {
                (0..=i).fold(Series::zero(self.coeffs[0].truncation()), |acc, j| {
                    acc.add(&self.coeffs[j].mul(&o.coeffs[i - j]))
                })
            })
            .collect();
        Jet { coeffs }
    }

    /// Multiplicative inverse; the constant coefficient must be invertible.
    pub fn inv(&self) -> Result<Jet> {
        let a0 = self.coeffs[0].invert()?;
        let mut out: Vec<Series> = vec![a0.clone()];
        for i in 1..=self.order() {
            let mut s = Series::zero(a0.truncation());
            for j in 1..=i {
                s = s.add(&self.coeffs[j].mul(&out[i - j]));
            }
            out.push(s.mul(&a0).neg());
        }
        Ok(Jet { coeffs: out })
    }

    /// Multiplies by the jet of (1 − c·e^{uε}), u = ±1, where c is independent
    /// of ε.
    pub fn mul_one_minus_exp(&self, c: &Series, u: i64) -> Jet {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for k in 0..self.coeffs.len() {
            // S_k = Σ_j J_{k−j} u^j / j!
            let mut s = Series::zero(self.coeffs[0].truncation());
            for j in 0..=k {
                let w = Rational::new(u.pow(j as u32).into(), factorial(j).into());
                s = s.add(&self.coeffs[k - j].scale(&w));
            }
            coeffs.push(self.coeffs[k].sub(&s.mul(c)));
        }
        Jet { coeffs }
    }

    /// The jet of c·e^{rε} for a half-integer rate r.
    pub fn exp_rate(c: &Series, r: HalfInt, order: usize) -> Jet {
        let r = Rational::new(r.twice().into(), 2.into());
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut w = Rational::one();
        for k in 0..=order {
            coeffs.push(c.scale(&w));
            w = &w * &r / Rational::from_integer(((k + 1) as i64).into());
        }
        Jet { coeffs }
    }

    pub fn truncate(&self, n: HalfInt) -> Jet {
        Jet { coeffs: self.coeffs.iter().map(|a| a.truncate(n)).collect() }
    }
}

pub fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}
