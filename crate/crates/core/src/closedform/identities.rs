//! Classical q-series identities used as building blocks: the two Euler
//! expansions, the Pochhammer identity behind the level −1 q-dimensions, the
//! bilateral expansion of 1/((u)_∞(q/u)_∞) and the partition generating
//! functions with a marked part.

use num_traits::{One, Zero};

use crate::combinat::{partitions, Length};
use crate::error::{Error, Result};
use crate::qseries::pochhammer::{div_one_minus, mul_one_minus, pochhammer_inf, pochhammer_n};
use crate::qseries::{euler, HalfInt, Monomial, Param, Rational, Series};

/// How a geometric series Σ_k w^k with w of q-valuation zero is summed.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Summation {
    /// Term by term; fails with NonTruncatable when w has valuation zero.
    Termwise,
    /// Term by term when possible, otherwise as the rational function 1/(1−w)
    /// evaluated by exact inversion.
    Closed,
}

fn q1(n: HalfInt) -> Series {
    Series::q_pow(HalfInt::ONE, n)
}

/// Σ_{k≥k0} w^k.
fn geometric_from(w: &Series, k0: i64, n: HalfInt, how: Summation) -> Result<Series> {
    let start = w.powi(k0)?.truncate(n);
    if w.min_qexp() > HalfInt::ZERO {
        return div_one_minus(&start, w);
    }
    match how {
        Summation::Termwise => Err(Error::NonTruncatable(format!(
            "geometric series in ({w}) has no formal expansion: every term sits at q-order {}",
            w.min_qexp()
        ))),
        Summation::Closed => div_one_minus(&start, w),
    }
}

/// Σ_m (−z)^m q^{m(m−1)/2}/(q)_m.
pub fn euler_sum(z: &Series, n: HalfInt) -> Result<Series> {
    let v = z.min_qexp();
    if v <= HalfInt::ZERO {
        return Err(Error::NonTruncatable(format!("Euler sum needs z of positive valuation, got {v}")));
    }
    let mut out = Series::zero(n);
    let mut m = 0i64;
    while v * m + HalfInt::int(m * (m - 1) / 2) <= n {
        let num = z.neg().powi(m)?.shift_q(HalfInt::int(m * (m - 1) / 2)).truncate(n);
        let den = pochhammer_n(&q1(n), m as usize, n);
        out = out.add(&num.div(&den)?);
        m += 1;
    }
    Ok(out)
}

/// Σ_l (a)_l z^l/(q)_l.
pub fn q_binomial_sum(a: &Series, z: &Series, n: HalfInt) -> Result<Series> {
    let v = z.min_qexp();
    if v <= HalfInt::ZERO {
        return Err(Error::NonTruncatable(format!("q-binomial sum needs z of positive valuation, got {v}")));
    }
    let mut out = Series::zero(n);
    let mut l = 0i64;
    while v * l <= n {
        let num = pochhammer_n(a, l as usize, n).mul(&z.powi(l)?);
        out = out.add(&num.div(&pochhammer_n(&q1(n), l as usize, n))?);
        l += 1;
    }
    Ok(out)
}

/// (a)_∞ allowing a of valuation zero: the leading factor 1 − a is kept as
/// a polynomial and the rest is an honest infinite product.
pub fn pochhammer_inf_lax(a: &Series, n: HalfInt) -> Result<Series> {
    if a.min_qexp() > HalfInt::ZERO {
        return pochhammer_inf(a, n);
    }
    if a.min_qexp() < HalfInt::ZERO {
        return Err(Error::NonTruncatable(format!("(a)_inf with a of negative valuation: {a}")));
    }
    Ok(mul_one_minus(&pochhammer_inf(&a.shift_q(HalfInt::ONE), n)?, a))
}

/// Left side of the Pochhammer identity: Σ_l q^l/((q)_l (tq)_{l+k}).
pub fn prop111_lhs(k: usize, t: &Param, n: HalfInt) -> Result<Series> {
    guard_point(t)?;
    let tq = t.q_shift(HalfInt::ONE).value(n);
    let mut out = Series::zero(n);
    for l in 0..=n.floor().max(0) as usize {
        let den = pochhammer_n(&q1(n), l, n).mul(&pochhammer_n(&tq, l + k, n));
        let num = Series::q_pow(HalfInt::int(l as i64), n);
        out = out.add(&num.div(&den).map_err(degenerate)?);
    }
    Ok(out)
}

/// Right side: (1/((q)_∞(tq)_∞))·Σ_m (−1)^m q^{m(m+1)/2+km} t^m.
pub fn prop111_rhs(k: usize, t: &Param, n: HalfInt) -> Result<Series> {
    guard_point(t)?;
    let k = k as i64;
    let mut sum = Series::zero(n);
    let mut m = 0i64;
    while m * (m + 1) / 2 + k * m <= n.floor() {
        let (c, mono) = t.pow_int(m).power_parts(HalfInt::ONE)?;
        let c = if m % 2 == 0 { c } else { -c };
        sum.add_term(mono.mul(&Monomial::q(HalfInt::int(m * (m + 1) / 2 + k * m))), c);
        m += 1;
    }
    let den = euler(n).mul(&pochhammer_inf(&t.q_shift(HalfInt::ONE).value(n), n)?);
    sum.div(&den).map_err(degenerate)
}

fn degenerate(e: Error) -> Error {
    match e {
        Error::NotInvertible(m) => Error::DegenerateParameter(m),
        other => other,
    }
}

/// Rejects a plain point at t = 1, where the one-point expressions built
/// from these identities have poles.
fn guard_point(t: &Param) -> Result<()> {
    if t.is_unit() {
        return Err(Error::DegenerateParameter(format!("t = {t} sits on the pole t = 1")));
    }
    Ok(())
}

fn single_monomial(u: &Series) -> Result<(Rational, Monomial)> {
    if u.len() != 1 {
        return Err(Error::InvalidInput(format!("u must be a single monomial, got {u}")));
    }
    let (m, c) = u.terms().iter().next().unwrap();
    Ok((c.clone(), m.clone()))
}

/// 1/((u)_∞(u^{−1}q)_∞) for a monomial u = c·q^d with 0 < d ≤ 1.
pub fn identity_ff_product(u: &Series, n: HalfInt) -> Result<Series> {
    let (c, m) = single_monomial(u)?;
    if m.has_z() || m.q <= HalfInt::ZERO || m.q > HalfInt::ONE {
        return Err(Error::InvalidInput(format!("u = {u} must be c·q^d with 0 < d ≤ 1")));
    }
    let w = n + HalfInt::ONE;
    let uinv_q = Series::monomial(c.recip(), Monomial::q(HalfInt::ONE - m.q), w);
    let den = pochhammer_inf(&u.truncate(w), w)?.mul(&pochhammer_inf_lax(&uinv_q, w)?);
    Ok(den.invert().map_err(degenerate)?.truncate(n))
}

/// (1/(q)_∞²)·Σ_{m≥0} (−1)^m q^{m(m+1)/2}(Σ_{k≥0} q^{km}u^k + Σ_{k>0} q^{k(m+1)}u^{−k}).
pub fn identity_ff_first(u: &Series, n: HalfInt, how: Summation) -> Result<Series> {
    let (c, mono) = single_monomial(u)?;
    let uinv = Series::monomial(c.recip(), mono.inv(), n);
    let mut sum = Series::zero(n);
    let mut m = 0i64;
    while HalfInt::int(m * (m + 1) / 2) <= n {
        let pre = Series::monomial(sign(m), Monomial::q(HalfInt::int(m * (m + 1) / 2)), n);
        let a = geometric_from(&u.shift_q(HalfInt::int(m)), 0, n, how)?;
        let b = geometric_from(&uinv.shift_q(HalfInt::int(m + 1)), 1, n, how)?;
        sum = sum.add(&pre.mul(&a.add(&b)));
        m += 1;
    }
    let e = euler(n);
    sum.div(&e.mul(&e))
}

/// (1/(q)_∞²)·Σ_{m∈Z} (−1)^m q^{m(m+1)/2}/(1 − uq^m), where for m < 0 the
/// fraction means −Σ_{k≥1}(u^{−1}q^{−m})^k.
pub fn identity_ff_second(u: &Series, n: HalfInt, how: Summation) -> Result<Series> {
    let (c, mono) = single_monomial(u)?;
    let uinv = Series::monomial(c.recip(), mono.inv(), n);
    let mut sum = Series::zero(n);
    let bound = n.floor() + 2;
    for m in -bound..=bound {
        let qe = HalfInt::int(m * (m + 1) / 2);
        if qe > n {
            continue;
        }
        let pre = Series::monomial(sign(m), Monomial::q(qe), n);
        let frac = if m >= 0 {
            geometric_from(&u.shift_q(HalfInt::int(m)), 0, n, how)?
        } else {
            geometric_from(&uinv.shift_q(HalfInt::int(-m)), 1, n, how)?.neg()
        };
        sum = sum.add(&pre.mul(&frac));
    }
    let e = euler(n);
    sum.div(&e.mul(&e))
}

fn sign(m: i64) -> Rational {
    if m.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Σ_{ℓ(λ)=l} q^{|λ|} by enumeration.
pub fn lemma222_i_enum(l: usize, n: HalfInt) -> Series {
    let mut out = Series::zero(n);
    for p in partitions(n.floor().max(0) as u64, Length::Exactly(l)) {
        out.add_term(Monomial::q(HalfInt::int(p.weight() as i64)), Rational::one());
    }
    out
}

/// q^l/(q)_l.
pub fn lemma222_i_closed(l: usize, n: HalfInt) -> Result<Series> {
    Series::q_pow(HalfInt::int(l as i64), n).div(&pochhammer_n(&q1(n), l, n))
}

/// Σ_{ℓ(λ)=l} q^{|λ|} t^{λ_i} by enumeration, for a rational value t.
pub fn lemma222_ii_enum(l: usize, i: usize, t: &Rational, n: HalfInt) -> Result<Series> {
    if i == 0 || i > l {
        return Err(Error::InvalidInput(format!("marked index {i} must lie in 1..={l}")));
    }
    let mut out = Series::zero(n);
    for p in partitions(n.floor().max(0) as u64, Length::Exactly(l)) {
        let c = crate::qseries::pow_rational(t, p.parts()[i - 1] as i64);
        out.add_term(Monomial::q(HalfInt::int(p.weight() as i64)), c);
    }
    Ok(out)
}

/// t q^l/((1−q)⋯(1−q^{i−1})(1−q^i t)⋯(1−q^l t)).
pub fn lemma222_ii_closed(l: usize, i: usize, t: &Rational, n: HalfInt) -> Result<Series> {
    if i == 0 || i > l {
        return Err(Error::InvalidInput(format!("marked index {i} must lie in 1..={l}")));
    }
    let mut out = Series::monomial(t.clone(), Monomial::q(HalfInt::int(l as i64)), n);
    for j in 1..=l as i64 {
        let c = if (j as usize) < i { Rational::one() } else { t.clone() };
        if c.is_zero() {
            continue;
        }
        out = div_one_minus(&out, &Series::monomial(c, Monomial::q(HalfInt::int(j)), n))?;
    }
    Ok(out)
}
