use num_traits::One;

use super::{HalfInt, Monomial, Param, Rational, Series};
use crate::error::{Error, Result};

/// P/(1 − c).
///
/// A monomial c of positive q-valuation is handled by summing the geometric
/// series directly; anything else goes through `invert`. A vanishing or
/// ambiguous constant layer of 1 − c is reported as a degenerate parameter.
pub fn div_one_minus(p: &Series, c: &Series) -> Result<Series> {
    if c.len() == 1 && c.min_qexp() > HalfInt::ZERO {
        let (m, k) = c.terms().iter().next().unwrap();
        // the truncation of c bounds how far the geometric sum is known
        let trunc = p.truncation().min(c.truncation() + p.min_qexp());
        let mut acc = p.truncate(trunc);
        let mut z = acc.mul_monomial(k, m).truncate(trunc);
        while !z.is_zero() {
            acc = acc.add(&z);
            z = z.mul_monomial(k, m).truncate(trunc);
        }
        return Ok(acc);
    }
    let one_minus = Series::one(c.truncation()).sub(c);
    let inv = one_minus.invert().map_err(|e| match e {
        Error::NotInvertible(msg) => Error::DegenerateParameter(format!("1 - ({c}) is not invertible: {msg}")),
        other => other,
    })?;
    Ok(p.mul(&inv))
}

/// P·(1 − c).
pub fn mul_one_minus(p: &Series, c: &Series) -> Series {
    p.sub(&p.mul(c))
}

/// (a)_n = (1 − a)(1 − aq)⋯(1 − aq^{n−1}), truncated at `n_trunc`.
pub fn pochhammer_n(a: &Series, n: usize, n_trunc: HalfInt) -> Series {
    let mut out = Series::one(n_trunc);
    for i in 0..n {
        out = mul_one_minus(&out, &a.shift_q(HalfInt::int(i as i64)));
    }
    out
}

/// (a)_∞ = Π_{i≥0}(1 − aq^i), exact up to q^N.
///
/// Requires a to carry strictly positive q-valuation so that the factors with
/// aq^i beyond q^N can be dropped.
pub fn pochhammer_inf(a: &Series, n_trunc: HalfInt) -> Result<Series> {
    let v = a.min_qexp();
    if v <= HalfInt::ZERO {
        return Err(Error::NonTruncatable(format!(
            "(a)_inf needs a of positive q-valuation, got valuation {v}"
        )));
    }
    let mut out = Series::one(n_trunc);
    let mut i = 0;
    while v + HalfInt::int(i) <= n_trunc {
        out = mul_one_minus(&out, &a.shift_q(HalfInt::int(i)));
        i += 1;
    }
    Ok(out)
}

/// (p)_n for a parameter.
pub fn poch_n(p: &Param, n: usize, n_trunc: HalfInt) -> Series {
    pochhammer_n(&p.value(n_trunc), n, n_trunc)
}

/// (p)_∞ for a parameter; requires d > 0.
pub fn poch_inf(p: &Param, n_trunc: HalfInt) -> Result<Series> {
    if p.d <= HalfInt::ZERO {
        return Err(Error::NonTruncatable(format!("({p})_inf needs a positive q-shift")));
    }
    pochhammer_inf(&p.value(n_trunc), n_trunc)
}

/// (q)_∞.
pub fn euler(n_trunc: HalfInt) -> Series {
    pochhammer_inf(&Series::q_pow(HalfInt::ONE, n_trunc), n_trunc).expect("q has positive valuation")
}

/// 1/(a)_∞.
pub fn pochhammer_inf_inv(a: &Series, n_trunc: HalfInt) -> Result<Series> {
    let v = a.min_qexp();
    if v <= HalfInt::ZERO {
        return Err(Error::NonTruncatable(format!(
            "1/(a)_inf needs a of positive q-valuation, got valuation {v}"
        )));
    }
    let mut out = Series::one(n_trunc);
    let mut i = 0;
    while v + HalfInt::int(i) <= n_trunc {
        out = div_one_minus(&out, &a.shift_q(HalfInt::int(i)))?;
        i += 1;
    }
    Ok(out)
}

/// The basic hypergeometric series
/// rΦs(a_1..a_r; b_1..b_s; z) = Σ_n (a_1)_n⋯(a_r)_n / ((q)_n (b_1)_n⋯(b_s)_n)
///                                 · ((−1)^n q^{n(n−1)/2})^{1+s−r} z^n.
///
/// Parameters are series (pass `Series::zero` for a vanishing parameter).
/// Summation stops once the guaranteed valuation n·val(z) + (1+s−r)n(n−1)/2
/// exceeds N and is increasing from there on.
pub fn qhyper(upper: &[Series], lower: &[Series], arg: &Series, n_trunc: HalfInt) -> Result<Series> {
    let e = 1 + lower.len() as i64 - upper.len() as i64;
    let va = arg.min_qexp();
    if e < 0 || (e == 0 && va <= HalfInt::ZERO) {
        return Err(Error::NonTruncatable(format!(
            "{}Phi{} with argument of valuation {va} does not converge formally",
            upper.len(),
            lower.len()
        )));
    }
    if upper.iter().chain(lower).any(|p| p.min_qexp() < HalfInt::ZERO) {
        return Err(Error::NonTruncatable("hypergeometric parameters of negative valuation".into()));
    }
    let bound = |n: i64| va * n + HalfInt::int(e * n * (n - 1) / 2);
    let min_bound = (0..64).map(bound).min().unwrap().min(HalfInt::ZERO);
    let w = n_trunc - min_bound;
    let mut total = Series::zero(n_trunc);
    let mut coef = Series::one(w);
    let mut argp = Series::one(w);
    let mut n: i64 = 0;
    loop {
        let b = bound(n);
        if b > n_trunc && va + HalfInt::int(e * n) > HalfInt::ZERO {
            break;
        }
        if b <= n_trunc {
            let sign = if (n * e) % 2 == 0 { Rational::one() } else { -Rational::one() };
            let qf = Monomial::q(HalfInt::int(e * n * (n - 1) / 2));
            let term = coef.mul(&argp).mul_monomial(&sign, &qf);
            total = total.add(&term);
        }
        // advance coefficient from n to n+1
        let qn = HalfInt::int(n);
        for a in upper {
            if !a.is_zero() {
                coef = mul_one_minus(&coef, &a.shift_q(qn));
            }
        }
        for b in lower {
            coef = if b.is_zero() { coef } else { div_one_minus(&coef, &b.shift_q(qn))? };
        }
        coef = div_one_minus(&coef, &Series::q_pow(qn + HalfInt::ONE, w))?;
        argp = argp.mul(arg);
        n += 1;
        if n > 100_000 {
            return Err(Error::NonTruncatable("hypergeometric summation did not terminate".into()));
        }
    }
    if total.truncation() < n_trunc {
        return Err(Error::PrecisionLoss(format!(
            "hypergeometric sum known only to q^{} (wanted q^{n_trunc})",
            total.truncation()
        )));
    }
    Ok(total)
}

/// The vanishing parameter, for use in `qhyper`.
pub fn zero_param(n_trunc: HalfInt) -> Series {
    Series::zero(n_trunc)
}

/// Σ_{k≥0} c^k for a series of positive valuation.
pub fn geometric(c: &Series, n_trunc: HalfInt) -> Result<Series> {
    div_one_minus(&Series::one(n_trunc), c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn finite_products() {
        let n = HalfInt::int(10);
        let q = Series::q_pow(HalfInt::ONE, n);
        assert_eq!(pochhammer_n(&q, 0, n), Series::one(n));
        let q2 = pochhammer_n(&q, 2, n);
        let expect = Series::from_terms(
            [(0, 1), (2, -1), (4, -1), (6, 1)].map(|(e, c)| (Monomial::q(h(e)), rat(c, 1))),
            n,
        );
        assert_eq!(q2, expect);
        let a = Param::new(rat(2, 3), HalfInt::HALF);
        // (2/3)^2 q^{1/2}: (a)_1 = 1 - (4/9) q^{1/2}
        let a1 = poch_n(&a, 1, n);
        assert_eq!(a1.coeff_q(h(1)), rat(-4, 9));
    }

    #[test]
    fn euler_pentagonal() {
        let n = HalfInt::int(30);
        let e = euler(n);
        let mut expect = Series::zero(n);
        for k in -5i64..=5 {
            let p = k * (3 * k - 1) / 2;
            let sign = if k % 2 == 0 { 1 } else { -1 };
            expect.add_term(Monomial::q(HalfInt::int(p)), rat(sign, 1));
        }
        assert_eq!(e, expect);
        assert!(matches!(poch_inf(&Param::frac(2, 3), n), Err(Error::NonTruncatable(_))));
    }

    #[test]
    fn phi21_central_part() {
        // 2Phi1(0,0;q;q) = Σ q^n/(q)_n^2
        let n = HalfInt::int(12);
        let z = zero_param(n);
        let q = Series::q_pow(HalfInt::ONE, n);
        let got = qhyper(&[z.clone(), z], &[q.clone()], &q, n).unwrap();
        let mut direct = Series::zero(n);
        for k in 0..=12usize {
            let d = pochhammer_n(&q, k, n);
            direct = direct.add(&q.pow(k as u32).mul(&d.mul(&d).invert().unwrap()));
        }
        assert_eq!(got, direct);
        assert_eq!(got.coeff_q(HalfInt::int(2)), rat(3, 1));
    }

    #[test]
    fn degenerate_lower_parameter() {
        let n = HalfInt::int(4);
        let one = Series::one(n);
        let q = Series::q_pow(HalfInt::ONE, n);
        assert!(matches!(qhyper(&[q.clone()], &[one], &q, n), Err(Error::DegenerateParameter(_))));
    }
}
