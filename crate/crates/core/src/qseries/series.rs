use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::ZExps;
use super::{HalfInt, Monomial, Rational};
use crate::error::{Error, Result};

/// A truncated formal Laurent series in q^{1/2} with charge variables z_i and
/// exact rational coefficients.
///
/// Every coefficient with q-exponent at most `trunc` is known exactly; nothing
/// is known beyond it. Arithmetic tracks the truncation precisely: a product
/// is known up to `min(trunc_a + val_b, trunc_b + val_a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    trunc: HalfInt,
    terms: BTreeMap<Monomial, Rational>,
}

/// One q-layer of a series: z-monomials and their coefficients.
type Layer = BTreeMap<ZExps, Rational>;

impl Series {
    pub fn zero(trunc: HalfInt) -> Self {
        Series { trunc, terms: BTreeMap::new() }
    }

    pub fn one(trunc: HalfInt) -> Self {
        Series::constant(Rational::one(), trunc)
    }

    pub fn constant(c: Rational, trunc: HalfInt) -> Self {
        Series::monomial(c, Monomial::one(), trunc)
    }

    pub fn from_int(c: i64, trunc: HalfInt) -> Self {
        Series::constant(Rational::from_integer(c.into()), trunc)
    }

    pub fn monomial(c: Rational, m: Monomial, trunc: HalfInt) -> Self {
        let mut s = Series::zero(trunc);
        s.add_term(m, c);
        s
    }

    /// The series q^e (zero if e exceeds the truncation).
    pub fn q_pow(e: HalfInt, trunc: HalfInt) -> Self {
        Series::monomial(Rational::one(), Monomial::q(e), trunc)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>, trunc: HalfInt) -> Self {
        let mut s = Series::zero(trunc);
        for (m, c) in terms {
            s.add_term(m, c);
        }
        s
    }

    /// Adds `c·m` in place, respecting the truncation.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if m.q > self.trunc || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn truncation(&self) -> HalfInt {
        self.trunc
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Rational> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn has_z(&self) -> bool {
        self.terms.keys().any(Monomial::has_z)
    }

    /// Lowest q-exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<HalfInt> {
        self.terms.keys().next().map(|m| m.q)
    }

    /// Guaranteed lower bound for the q-exponents of the exact series:
    /// the valuation, or one half-step past the truncation if nothing is known
    /// to be nonzero.
    pub fn min_qexp(&self) -> HalfInt {
        self.valuation().unwrap_or(self.trunc + HalfInt::HALF)
    }

    /// Lowers the truncation to `min(trunc, n)`.
    pub fn truncate(&self, n: HalfInt) -> Series {
        if n >= self.trunc {
            return self.clone();
        }
        Series {
            trunc: n,
            terms: self.terms.iter().filter(|(m, _)| m.q <= n).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Checks that the series is known at least up to `n` and truncates to it.
    pub fn at_order(&self, n: HalfInt) -> Result<Series> {
        if self.trunc < n {
            return Err(Error::PrecisionLoss(format!(
                "series known to q^{} but q^{} requested",
                self.trunc, n
            )));
        }
        Ok(self.truncate(n))
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficient of q^e with no z-dependence.
    pub fn coeff_q(&self, e: HalfInt) -> Rational {
        self.coeff(&Monomial::q(e))
    }

    /// The coefficient of z_var^m, as a series free of `var`.
    pub fn coeff_z(&self, var: u32, m: i64) -> Series {
        let mut out = Series::zero(self.trunc);
        for (mono, c) in &self.terms {
            if mono.z_exp(var) == m {
                out.terms.insert(mono.without(var), c.clone());
            }
        }
        out
    }

    /// The coefficient of the z-monomial Π z_v^{e_v} (listed variables only;
    /// other variables are kept).
    pub fn coeff_zs(&self, exps: &[(u32, i64)]) -> Series {
        let mut out = Series::zero(self.trunc);
        'outer: for (mono, c) in &self.terms {
            let mut rest = mono.clone();
            for &(v, e) in exps {
                if mono.z_exp(v) != e {
                    continue 'outer;
                }
                rest = rest.without(v);
            }
            out.terms.insert(rest, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Series {
        Series {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Series {
        if k.is_zero() {
            return Series::zero(self.trunc);
        }
        Series {
            trunc: self.trunc,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    /// Multiplies by the monomial `c·m`; the truncation shifts by `m.q`.
    pub fn mul_monomial(&self, c: &Rational, m: &Monomial) -> Series {
        let trunc = self.trunc + m.q;
        if c.is_zero() {
            return Series::zero(trunc);
        }
        Series {
            trunc,
            terms: self.terms.iter().map(|(x, v)| (x.mul(m), v * c)).collect(),
        }
    }

    /// Multiplies by q^e.
    pub fn shift_q(&self, e: HalfInt) -> Series {
        self.mul_monomial(&Rational::one(), &Monomial::q(e))
    }

    pub fn add(&self, o: &Series) -> Series {
        let trunc = self.trunc.min(o.trunc);
        let mut out = self.truncate(trunc);
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Series) -> Series {
        let trunc = self.trunc.min(o.trunc);
        let mut out = self.truncate(trunc);
        for (m, c) in &o.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn mul(&self, o: &Series) -> Series {
        let trunc = (self.trunc + o.min_qexp()).min(o.trunc + self.min_qexp());
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        let b: Vec<(&Monomial, &Rational)> = o.terms.iter().collect();
        for (ma, ca) in &self.terms {
            for &(mb, cb) in &b {
                if ma.q + mb.q > trunc {
                    break;
                }
                let m = ma.mul(mb);
                let p = ca * cb;
                match acc.get_mut(&m) {
                    Some(v) => *v += p,
                    None => {
                        acc.insert(m, p);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Series { trunc, terms: acc }
    }

    /// Multiplicative inverse.
    ///
    /// The lowest q-layer must consist of a single monomial. If the input has
    /// valuation v and truncation T, the inverse is known up to T − 2v.
    pub fn invert(&self) -> Result<Series> {
        let v = self
            .valuation()
            .ok_or_else(|| Error::NotInvertible("series is zero up to its truncation".into()))?;
        let layers = self.layers();
        let lead = &layers[0].1;
        if lead.len() != 1 {
            return Err(Error::NotInvertible(format!(
                "lowest layer q^{v} has {} monomials",
                lead.len()
            )));
        }
        let (lead_z, lead_c) = lead.iter().next().unwrap();
        let lead_m = Monomial::new(v, lead_z.iter().copied());
        let lead_inv_c = lead_c.recip();
        let lead_inv_m = lead_m.inv();
        // normalized series 1 + r with r carrying positive q-valuation
        let r: Vec<(HalfInt, Layer)> = layers[1..]
            .iter()
            .map(|(q, layer)| {
                let l = layer
                    .iter()
                    .map(|(z, c)| {
                        let m = Monomial::new(HalfInt::ZERO, z.iter().copied()).mul(&lead_inv_m.z_part());
                        (m.z().to_vec(), c * &lead_inv_c)
                    })
                    .collect();
                (*q - v, l)
            })
            .collect();
        let t = self.trunc - v;
        // b = 1/(1+r): b_e = -Σ_{f>0} r_f b_{e-f}, layer by layer
        let mut b: Vec<(HalfInt, Layer)> = vec![(HalfInt::ZERO, Layer::from([(Vec::new(), Rational::one())]))];
        let mut e = HalfInt::HALF;
        while e <= t {
            let mut layer = Layer::new();
            for (f, rf) in &r {
                if *f > e {
                    break;
                }
                if let Ok(i) = b.binary_search_by_key(&(e - *f), |p| p.0) {
                    for (zr, cr) in rf {
                        for (zb, cb) in &b[i].1 {
                            let z = Monomial::new(HalfInt::ZERO, zr.iter().copied().chain(zb.iter().copied()));
                            let entry = layer.entry(z.z().to_vec()).or_insert_with(Rational::zero);
                            *entry -= cr * cb;
                        }
                    }
                }
            }
            layer.retain(|_, c| !c.is_zero());
            if !layer.is_empty() {
                b.push((e, layer));
            }
            e += HalfInt::HALF;
        }
        let mut out = Series::zero(t);
        for (q, layer) in b {
            for (z, c) in layer {
                out.terms.insert(Monomial::new(q, z), c);
            }
        }
        Ok(out.mul_monomial(&lead_inv_c, &lead_inv_m))
    }

    pub fn div(&self, o: &Series) -> Result<Series> {
        Ok(self.mul(&o.invert()?))
    }

    pub fn pow(&self, k: u32) -> Series {
        if k == 0 {
            return Series::one(self.trunc);
        }
        let mut result: Option<Series> = None;
        let mut base = self.clone();
        let mut k = k;
        loop {
            if k & 1 == 1 {
                result = Some(match result {
                    None => base.clone(),
                    Some(r) => r.mul(&base),
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = base.mul(&base);
        }
        result.unwrap()
    }

    /// Integer power, negative exponents via inversion.
    pub fn powi(&self, k: i64) -> Result<Series> {
        if k >= 0 {
            Ok(self.pow(k as u32))
        } else {
            Ok(self.invert()?.pow((-k) as u32))
        }
    }

    /// Groups terms by q-exponent.
    fn layers(&self) -> Vec<(HalfInt, Layer)> {
        let mut out: Vec<(HalfInt, Layer)> = Vec::new();
        for (m, c) in &self.terms {
            match out.last_mut() {
                Some((q, layer)) if *q == m.q => {
                    layer.insert(m.z().to_vec(), c.clone());
                }
                _ => out.push((m.q, Layer::from([(m.z().to_vec(), c.clone())]))),
            }
        }
        out
    }

    /// Substitutes z_var ↦ c·z_var (c rational).
    pub fn scale_var(&self, var: u32, c: &Rational) -> Series {
        let mut out = Series::zero(self.trunc);
        for (m, v) in &self.terms {
            let e = m.z_exp(var);
            let f = pow_rational(c, e);
            out.add_term(m.clone(), v * f);
        }
        out
    }

    /// First monomial (in canonical order) at which the two series differ,
    /// compared up to the smaller truncation.
    pub fn first_difference(&self, o: &Series) -> Option<(Monomial, Rational, Rational)> {
        let n = self.trunc.min(o.trunc);
        let a = self.truncate(n);
        let b = o.truncate(n);
        let mut keys: Vec<&Monomial> = a.terms.keys().chain(b.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .map(|m| (m.clone(), a.coeff(m), b.coeff(m)))
            .find(|(_, x, y)| x != y)
    }

    /// Exact equality of term maps up to `n` (both must be known to `n`).
    pub fn agrees_to(&self, o: &Series, n: HalfInt) -> bool {
        self.trunc >= n && o.trunc >= n && self.truncate(n).terms == o.truncate(n).terms
    }
}

/// c^e for an integer exponent (c ≠ 0 when e < 0).
pub fn pow_rational(c: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow::pow(c.clone(), e as usize)
    } else {
        num_traits::pow::pow(c.recip(), (-e) as usize)
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, o: &Series) -> Series {
        Series::add(self, o)
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, o: &Series) -> Series {
        Series::sub(self, o)
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, o: &Series) -> Series {
        Series::mul(self, o)
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (m, c) in &self.terms {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if *m == Monomial::one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a}*{m}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^({}))", self.trunc + HalfInt::HALF)
    }
}
