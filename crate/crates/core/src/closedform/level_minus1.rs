//! Closed formulas at level −1: the one-point function of the charge-zero
//! sector, the generalized one- and two-point functions weighted by x^A y^B,
//! and the charge-k q-dimensions.

use num_traits::One;

use crate::combinat::{partitions, Length};
use crate::error::{Error, Result};
use crate::qseries::pochhammer::{div_one_minus, pochhammer_inf_inv, zero_param};
use crate::qseries::{euler, pochhammer_inf, pochhammer_n, qhyper, HalfInt, Monomial, Param, Rational, Series};

/// p·q^{k/2} as a series, with k given in half-units.
fn qv(p: &Param, half_units: i64, n: HalfInt) -> Series {
    p.q_shift(HalfInt::from_twice(half_units)).value(n)
}

fn qs(e: HalfInt, n: HalfInt) -> Series {
    Series::q_pow(e, n)
}

fn check_plain(t: &Param) -> Result<()> {
    if !t.z().is_empty() || t.d != HalfInt::ZERO {
        return Err(Error::InvalidInput(format!("point {t} must be a plain rational")));
    }
    if t.is_unit() {
        return Err(Error::DegenerateParameter(format!("t = {t} sits on the pole t = 1")));
    }
    Ok(())
}

/// Σ_{i≥1} q^{i−1}/(q)_{i−1}²·(₃Φ₂(0,0,q; tq^i, q^i; q) − 1).
fn one_point_tail(t: &Param, n: HalfInt) -> Result<Series> {
    let q = qs(HalfInt::ONE, n);
    let mut out = Series::zero(n);
    // term i has valuation ≥ i
    for i in 1..=n.floor() + 1 {
        let pre = qs(HalfInt::int(i - 1), n);
        let den = pochhammer_n(&q, (i - 1) as usize, n);
        let phi = qhyper(
            &[zero_param(n), zero_param(n), q.clone()],
            &[qv(t, 2 * i, n), qs(HalfInt::int(i), n)],
            &q,
            n,
        )?
        .sub(&Series::one(n));
        out = out.add(&pre.mul(&phi).div(&den.mul(&den))?);
    }
    Ok(out)
}

/// 𝔄^{(0)}_{−1}(q; t): ₂Φ₁(0,0;q;q)·β(t) plus the two ₃Φ₂ tails in t and
/// t^{−1}.
pub fn one_point_minus1(t: &Param, n: HalfInt) -> Result<Series> {
    check_plain(t)?;
    let q = qs(HalfInt::ONE, n);
    let central = qhyper(&[zero_param(n), zero_param(n)], &[q.clone()], &q, n)?.mul(&t.c_term(n)?);
    let plus = one_point_tail(t, n)?.mul(&t.power(HalfInt::HALF, n)?);
    let minus = one_point_tail(&t.inv(), n)?.mul(&t.power(-HalfInt::HALF, n)?);
    Ok(central.add(&plus).sub(&minus))
}

/// x(tq)^{1/2}(xtq^{3/2})_∞/((1 − xq^{1/2})(tq)_∞(xq^{1/2})_∞)
/// ·₂Φ₂(xq^{1/2}, xq^{1/2}; xq^{3/2}, txq^{3/2}; tq²), which is Ω(x,y,t)
/// without its 1/(yq^{1/2})_∞ factor.
pub fn omega_core(x: &Param, t: &Param, n: HalfInt) -> Result<Series> {
    let tq = t.q_shift(HalfInt::ONE);
    let xt = x.mul(t);
    let pre = x.value(n).mul(&tq.power(HalfInt::HALF, n)?).mul(&pochhammer_inf(&qv(&xt, 3, n), n)?);
    let pre = div_one_minus(&pre, &qv(x, 1, n))?;
    let pre = pre.mul(&pochhammer_inf_inv(&tq.value(n), n)?).mul(&pochhammer_inf_inv(&qv(x, 1, n), n)?);
    let phi = qhyper(&[qv(x, 1, n), qv(x, 1, n)], &[qv(x, 3, n), qv(&xt, 3, n)], &qv(t, 4, n), n)?;
    Ok(pre.mul(&phi))
}

/// Ω(x, y, t).
pub fn omega(x: &Param, y: &Param, t: &Param, n: HalfInt) -> Result<Series> {
    omega_core(x, t, n)?.mul(&pochhammer_inf_inv(&qv(y, 1, n), n)?).at_order(n)
}

/// Σ_{l≥1} x^l q^{−l/2} Σ_{ℓ(λ)=l} q^{|λ|} Σ_i t^{λ_i−1/2} by enumeration:
/// the left side of the claim behind the generalized one-point formula.
pub fn claim555_enum(x: &Param, t: &Param, n: HalfInt) -> Result<Series> {
    check_plain(t)?;
    let (xc, xm) = x.power_parts(HalfInt::ONE)?;
    let mut out = Series::zero(n);
    // x^l q^{|λ|−l/2}: energy of λ is |λ| − l/2 ≥ l/2
    for p in partitions((2 * n.floor() + 2).max(0) as u64, Length::Any) {
        let l = p.len() as i64;
        if l == 0 {
            continue;
        }
        let e = p.energy() + xm.q * l;
        if e > n {
            continue;
        }
        let mut c = Rational::from_integer(0.into());
        for &part in p.parts() {
            c += crate::qseries::pow_rational(&t.s, 2 * part as i64 - 1);
        }
        let m = Monomial::q(p.energy()).mul(&xm.pow(l));
        out.add_term(m, c * crate::qseries::pow_rational(&xc, l));
    }
    Ok(out)
}

/// The same sum in closed form, `omega_core(x, t)`.
pub fn claim555_closed(x: &Param, t: &Param, n: HalfInt) -> Result<Series> {
    check_plain(t)?;
    omega_core(x, t, n)
}

/// tr q^{L₀} x^A y^B A(t) over the full level −1 Fock space:
/// β(t)/((xq^{1/2})_∞(yq^{1/2})_∞) + Ω(x,y,t) − Ω(y,x,t^{−1}).
pub fn generalized_one_point(x: &Param, y: &Param, t: &Param, n: HalfInt) -> Result<Series> {
    check_plain(t)?;
    let vac = vacuum(x, y, n)?;
    let out = vac.mul(&t.c_term(n)?).add(&omega(x, y, t, n)?).sub(&omega(y, x, &t.inv(), n)?);
    Ok(out)
}

/// 1/((xq^{1/2})_∞(yq^{1/2})_∞).
pub fn vacuum(x: &Param, y: &Param, n: HalfInt) -> Result<Series> {
    Ok(pochhammer_inf_inv(&qv(x, 1, n), n)?.mul(&pochhammer_inf_inv(&qv(y, 1, n), n)?))
}

/// Γ̄(x, t₁, t₂).
pub fn gamma_bar(x: &Param, t1: &Param, t2: &Param, n: HalfInt) -> Result<Series> {
    let t12 = t1.mul(t2);
    let xt1 = x.mul(t1);
    let q = qs(HalfInt::ONE, n);
    // prefactor x²q t₁t₂ (xq^{3/2}t₁)_∞ / ((1−xq^{1/2})²(xq^{1/2})_∞(qt₁)_∞)
    let mut pre = x.pow_int(2).value(n).mul(&qv(&t12, 2, n)).mul(&pochhammer_inf(&qv(&xt1, 3, n), n)?);
    pre = div_one_minus(&pre, &qv(x, 1, n))?;
    pre = div_one_minus(&pre, &qv(x, 1, n))?;
    pre = pre.mul(&pochhammer_inf_inv(&qv(x, 1, n), n)?).mul(&pochhammer_inf_inv(&qv(t1, 2, n), n)?);
    // the s-th term has valuation ≥ 3s + s(s−1)/2
    let mut sum = Series::zero(n);
    let mut s: i64 = 0;
    while 3 * s + s * (s - 1) / 2 <= n.floor().max(0) {
        let su = s as usize;
        let num = pochhammer_n(&qv(x, 1, n), su, n)
            .pow(3)
            .mul(&qv(&t12, 6, n).neg().powi(s)?)
            .shift_q(HalfInt::int(s * (s - 1) / 2));
        let d3 = pochhammer_n(&qv(x, 3, n), su, n);
        let den = pochhammer_n(&qv(&xt1, 3, n), su, n).mul(&pochhammer_n(&q, su, n)).mul(&d3).mul(&d3);
        let xs = qv(x, 2 * s + 1, n);
        let phi = qhyper(
            &[t2.inv().value(n), xs.clone(), xs],
            &[qv(x, 2 * s + 3, n), qv(&xt1, 2 * s + 3, n)],
            &qv(&t12, 4, n),
            n,
        )?;
        sum = sum.add(&num.mul(&phi).div(&den)?);
        s += 1;
    }
    Ok(pre.mul(&sum))
}

/// Γ(x, y, t₁, t₂) = (t₁t₂)^{−1/2}/(q^{1/2}y)_∞·(Γ̄(x,t₁,t₂) + Γ̄(x,t₂,t₁)).
pub fn gamma(x: &Param, y: &Param, t1: &Param, t2: &Param, n: HalfInt) -> Result<Series> {
    let pre = t1.mul(t2).power(-HalfInt::HALF, n)?.mul(&pochhammer_inf_inv(&qv(y, 1, n), n)?);
    Ok(pre.mul(&gamma_bar(x, t1, t2, n)?.add(&gamma_bar(x, t2, t1, n)?)))
}

/// Which pairing of points the product term of the two-point formula uses.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CrossTerm {
    /// Ω(x,y,t₁)Ω(y,x,t₂^{−1}) + Ω(x,y,t₁^{−1})Ω(y,x,t₂), as printed.
    Printed,
    /// Ω(x,y,t₁)Ω(y,x,t₂^{−1}) + Ω(x,y,t₂)Ω(y,x,t₁^{−1}): each point paired
    /// once with the x-side and once with the y-side.
    Paired,
}

/// tr q^{L₀} x^A y^B A(t₁)A(t₂) from the eight-term expression in Γ and Ω.
pub fn generalized_two_point(
    x: &Param,
    y: &Param,
    t1: &Param,
    t2: &Param,
    cross: CrossTerm,
    n: HalfInt,
) -> Result<Series> {
    check_plain(t1)?;
    check_plain(t2)?;
    let t12 = t1.mul(t2);
    check_plain(&t12)?;
    let (i1, i2) = (t1.inv(), t2.inv());
    let (b1, b2) = (t1.c_term(n)?, t2.c_term(n)?);
    let om = |a: &Param, b: &Param, t: &Param| omega(a, b, t, n);
    let mut out = gamma(x, y, t1, t2, n)?
        .add(&gamma(y, x, &i1, &i2, n)?)
        .add(&om(x, y, &t12)?)
        .add(&om(y, x, &t12.inv())?);
    out = out.add(&b1.mul(&om(x, y, t2)?.sub(&om(y, x, &i2)?)));
    out = out.add(&b2.mul(&om(x, y, t1)?.sub(&om(y, x, &i1)?)));
    let second = match cross {
        CrossTerm::Printed => om(x, y, &i1)?.mul(&om(y, x, t2)?),
        CrossTerm::Paired => om(x, y, t2)?.mul(&om(y, x, &i1)?),
    };
    let cross_sum = om(x, y, t1)?.mul(&om(y, x, &i2)?).add(&second);
    let norm = pochhammer_inf(&qv(x, 1, n), n)?.mul(&pochhammer_inf(&qv(y, 1, n), n)?);
    out = out.sub(&norm.mul(&cross_sum));
    out = out.add(&vacuum(x, y, n)?.mul(&b1).mul(&b2));
    Ok(out)
}

/// The charge variable used when slicing generalized functions into sectors.
pub const SECTOR_VAR: u32 = 1;

/// x = z^{−1}, y = z.
pub fn sector_weights() -> (Param, Param) {
    let one = Param::point(Rational::one());
    (one.clone().with_z(SECTOR_VAR, -1), one.with_z(SECTOR_VAR, 1))
}

/// 𝖰^{(k)}_{−1}(q) = (q)_∞^{−2}·Σ_{m≥0}(−1)^m q^{m(m+1)/2+|k|(m+1/2)}.
pub fn qdim_minus1(k: i64, n: HalfInt) -> Result<Series> {
    let k = k.abs();
    let mut sum = Series::zero(n);
    let mut m = 0i64;
    loop {
        let e = HalfInt::int(m * (m + 1) / 2) + HalfInt::from_twice(k * (2 * m + 1));
        if e > n {
            break;
        }
        let c = if m % 2 == 0 { Rational::one() } else { -Rational::one() };
        sum.add_term(Monomial::q(e), c);
        m += 1;
    }
    let e = euler(n);
    sum.div(&e.mul(&e))
}

/// 𝔄^{(k)}_{−1} from a closed formula: the q-dimension for no points, a
/// z-slice of the generalized one- or two-point function otherwise. Returns
/// `None` for three or more points, which have no closed form here.
pub fn a_sector_closed(k: i64, points: &[Param], n: HalfInt) -> Result<Option<Series>> {
    let (x, y) = sector_weights();
    let full = match points {
        [] => return qdim_minus1(k, n).map(Some),
        [t] => generalized_one_point(&x, &y, t, n)?,
        [t1, t2] => generalized_two_point(&x, &y, t1, t2, CrossTerm::Paired, n)?,
        _ => return Ok(None),
    };
    Ok(Some(full.coeff_z(SECTOR_VAR, k)))
}
