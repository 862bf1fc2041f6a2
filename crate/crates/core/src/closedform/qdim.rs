//! q-dimension formulas for the irreducible modules appearing in the
//! dualities, as Weyl-group sums of level −1 q-dimensions.

use num_traits::One;

use super::cinf::{neutral_boson_qdim, neutral_fermion_qdim};
use super::level_minus1::qdim_minus1;
use crate::combinat::{k_vector, weyl_group, Algebra, RhoVector, WeylType};
use crate::error::{Error, Result};
use crate::qseries::pochhammer::mul_one_minus;
use crate::qseries::{euler, HalfInt, Monomial, Rational, Series};

/// Σ_σ sign(σ)·f(λ + ρ − σρ).
pub fn weyl_sum(
    ty: WeylType,
    rho: &RhoVector,
    lambda: &[i64],
    n: HalfInt,
    mut f: impl FnMut(&[i64]) -> Result<Series>,
) -> Result<Series> {
    let mut out = Series::zero(n);
    for (w, sign) in weyl_group(ty, lambda.len())? {
        let k = k_vector(lambda, &w, rho)?;
        let term = f(&k)?;
        out = if sign > 0 { out.add(&term) } else { out.sub(&term) };
    }
    Ok(out)
}

fn product(ks: &[i64], n: HalfInt, mut f: impl FnMut(i64) -> Result<Series>) -> Result<Series> {
    let mut out = Series::one(n);
    for &k in ks {
        out = out.mul(&f(k)?);
    }
    Ok(out)
}

/// λ padded with zeros to length l; a partition for every algebra but A.
fn shape(alg: Algebra, lambda: &[i64], l: usize) -> Result<Vec<i64>> {
    if lambda.len() > l {
        return Err(Error::InvalidInput(format!("λ has {} parts but the rank is {l}", lambda.len())));
    }
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidInput(format!("λ = {lambda:?} is not non-increasing")));
    }
    if alg != Algebra::A && lambda.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput(format!("λ = {lambda:?} has negative parts")));
    }
    if alg == Algebra::A && lambda.len() < l && lambda.last().is_some_and(|&x| x < 0) {
        return Err(Error::InvalidInput("a generalized partition must list all l entries".into()));
    }
    let mut v = lambda.to_vec();
    v.resize(l, 0);
    Ok(v)
}

/// Splits a level into (negative integer rank l, or l with a half shift).
fn rank_of(level: HalfInt) -> (i64, bool) {
    if level.is_integer() {
        (level.floor(), false)
    } else {
        (level.floor(), true)
    }
}

/// X_k = 𝖰^{(|k|)}_{−1}, the q-dimension of the charge-k sector of F^{−1}.
fn x(k: i64, n: HalfInt) -> Result<Series> {
    qdim_minus1(k, n)
}

/// The closed q-dimension formula for the module with label λ.
///
/// * a∞, level −l: Σ_{S_l} sign·Π 𝖰^{(k_i)}_{−1}.
/// * c∞, level l − 1/2 > 0: the Weyl-sum form over W(B_l).
/// * c∞, level −l: Σ_{W(D_l)} sign·Π 𝖰^{(|k_i|)}_{−1}; level −l − 1/2: the
///   same over W(B_l) with ρ_B times 1/(q^{1/2})_∞.
/// * d∞, level −l: Σ_{W(C_l)} sign·Π 𝖰^{(|k_i|)}_{−1}; level −l + 1/2: the
///   same over W(B_l) with ρ_B times (−q^{1/2})_∞; level 1/2: (−q^{1/2})_∞.
pub fn qdim_closed(alg: Algebra, level: HalfInt, lambda: &[i64], n: HalfInt) -> Result<Series> {
    let (fl, half) = rank_of(level);
    let bad = || Error::InvalidInput(format!("no {alg} module of level {level} in the supported families"));
    let xs = |ks: &[i64]| product(ks, n, |k| x(k, n));
    match (alg, half) {
        (Algebra::A, false) if fl < 0 => {
            let l = (-fl) as usize;
            let lam = shape(alg, lambda, l)?;
            weyl_sum(WeylType::A, &RhoVector::a(l), &lam, n, xs)
        }
        (Algebra::C, true) if fl >= 0 => {
            let l = (fl + 1) as usize;
            c_positive_weyl(&shape(alg, lambda, l)?, n)
        }
        (Algebra::C, true) if fl == -1 => {
            if !lambda.iter().all(|&x| x == 0) {
                return Err(bad());
            }
            neutral_boson_qdim(n)
        }
        (Algebra::C, false) if fl < 0 => {
            let l = (-fl) as usize;
            let lam = shape(alg, lambda, l)?;
            weyl_sum(WeylType::D, &RhoVector::a(l), &lam, n, xs)
        }
        (Algebra::C, true) => {
            let l = (-fl - 1) as usize;
            let lam = shape(alg, lambda, l)?;
            Ok(neutral_boson_qdim(n)?.mul(&weyl_sum(WeylType::BC, &RhoVector::b(l), &lam, n, xs)?))
        }
        (Algebra::D, false) if fl < 0 => {
            let l = (-fl) as usize;
            let lam = shape(alg, lambda, l)?;
            weyl_sum(WeylType::BC, &RhoVector::c(l), &lam, n, xs)
        }
        (Algebra::D, true) if fl == 0 => {
            if !lambda.iter().all(|&x| x == 0) {
                return Err(bad());
            }
            neutral_fermion_qdim(n)
        }
        (Algebra::D, true) if fl < 0 => {
            let l = (-fl) as usize;
            let lam = shape(alg, lambda, l)?;
            Ok(neutral_fermion_qdim(n)?.mul(&weyl_sum(WeylType::BC, &RhoVector::b(l), &lam, n, xs)?))
        }
        _ => Err(bad()),
    }
}

/// ^d𝖰^{(k)}_{−1} = X_k − X_{k+2}.
pub fn d_qdim_minus1(k: i64, n: HalfInt) -> Result<Series> {
    Ok(x(k, n)?.sub(&x(k + 2, n)?))
}

/// The d∞ level −l and −l + 1/2 formulas as printed, with ^d𝖰^{(k_i)}_{−1}
/// in the Weyl sum in place of X_{k_i}. Kept for comparison only: it already
/// disagrees with the trace at l = 1.
pub fn qdim_d_printed(level: HalfInt, lambda: &[i64], n: HalfInt) -> Result<Series> {
    let (fl, half) = rank_of(level);
    if fl >= 0 {
        return Err(Error::InvalidInput(format!("the printed d∞ formula covers negative levels, got {level}")));
    }
    let ds = |ks: &[i64]| product(ks, n, |k| d_qdim_minus1(k, n));
    if half {
        let l = (-fl) as usize;
        let lam = shape(Algebra::D, lambda, l)?;
        Ok(neutral_fermion_qdim(n)?.mul(&weyl_sum(WeylType::BC, &RhoVector::b(l), &lam, n, ds)?))
    } else {
        let l = (-fl) as usize;
        let lam = shape(Algebra::D, lambda, l)?;
        weyl_sum(WeylType::BC, &RhoVector::c(l), &lam, n, ds)
    }
}

fn norm_sq_half(k: &[i64]) -> HalfInt {
    HalfInt::from_twice(k.iter().map(|&x| x * x).sum())
}

/// c∞ level l − 1/2: (1/((q^{1/2})_∞(q)_∞^l))·Σ_{W(B_l)} sign·q^{‖λ+ρ_B−σρ_B‖²/2}.
pub fn c_positive_weyl(lambda: &[i64], n: HalfInt) -> Result<Series> {
    let l = lambda.len();
    let sum = weyl_sum(WeylType::BC, &RhoVector::b(l), lambda, n, |k| {
        Ok(Series::q_pow(norm_sq_half(k), n))
    })?;
    Ok(sum.mul(&neutral_boson_qdim(n)?).div(&euler(n).pow(l as u32))?)
}

/// The product form of the same q-dimension:
/// q^{‖λ‖²/2}Π_i(1 − q^{λ_i+l−i+1/2})Π_{i<j}(1 − q^{λ_i−λ_j+j−i})(1 − q^{λ_i+λ_j+2l−i−j+1})
/// over (q^{1/2})_∞(q)_∞^l.
pub fn c_positive_product(lambda: &[i64], n: HalfInt) -> Result<Series> {
    let l = lambda.len() as i64;
    let mut num = Series::q_pow(norm_sq_half(lambda), n);
    let one_minus = |s: &Series, e2: i64| mul_one_minus(s, &Series::monomial(Rational::one(), Monomial::q(HalfInt::from_twice(e2)), n));
    for i in 1..=l {
        let li = lambda[(i - 1) as usize];
        num = one_minus(&num, 2 * (li + l - i) + 1);
        for j in i + 1..=l {
            let lj = lambda[(j - 1) as usize];
            num = one_minus(&num, 2 * (li - lj + j - i));
            num = one_minus(&num, 2 * (li + lj + 2 * l - i - j + 1));
        }
    }
    Ok(num.mul(&neutral_boson_qdim(n)?).div(&euler(n).pow(l as u32))?)
}

/// Σ_σ sign·z^{σρ}·Π_i 1/((z_iq^{1/2})_∞(z_i^{−1}q^{1/2})_∞) minus
/// Σ_λ |z_j^{λ_i+l−i}|·𝖰^λ_{−l}, over generalized partitions with entries
/// bounded by `bound`. Used to check the a∞ character identity in numerator
/// form; the result vanishes on monomials whose exponents stay within the
/// bound.
pub fn gl_character_identity_residual(l: usize, bound: i64, n: HalfInt) -> Result<Series> {
    use crate::combinat::{char_numerator, gen_partitions, weyl_denominator, CharKind};
    use crate::qseries::pochhammer::pochhammer_inf_inv;
    let mut lhs = weyl_denominator(WeylType::A, &RhoVector::a(l))?.to_series(n)?;
    for i in 1..=l as u32 {
        let z = Series::monomial(Rational::one(), Monomial::new(HalfInt::HALF, [(i, 1)]), n);
        let zi = Series::monomial(Rational::one(), Monomial::new(HalfInt::HALF, [(i, -1)]), n);
        lhs = lhs.mul(&pochhammer_inf_inv(&z, n)?).mul(&pochhammer_inf_inv(&zi, n)?);
    }
    let mut rhs = Series::zero(n);
    for p in gen_partitions(l, bound) {
        let lam = p.entries().to_vec();
        let num = char_numerator(CharKind::Gl, &lam, l)?.to_series(n)?;
        rhs = rhs.add(&num.mul(&qdim_closed(Algebra::A, HalfInt::int(-(l as i64)), &lam, n)?));
    }
    Ok(lhs.sub(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{duality_trace, FockKind, OpTag};
    use crate::qseries::rat;

    fn h(v: i64) -> HalfInt {
        HalfInt::int(v)
    }

    #[test]
    fn base_levels() {
        let n = h(6);
        let q0 = qdim_closed(Algebra::A, h(-1), &[0], n).unwrap();
        for (i, w) in [1, 1, 3, 6].into_iter().enumerate() {
            assert_eq!(q0.coeff_q(h(i as i64)), rat(w, 1));
        }
        assert_eq!(qdim_closed(Algebra::C, h(-1), &[2], n).unwrap(), qdim_minus1(2, n).unwrap());
        let d0 = qdim_closed(Algebra::D, h(-1), &[0], n).unwrap();
        assert_eq!(d0, d_qdim_minus1(0, n).unwrap());
        assert_eq!(d0.coeff_q(HalfInt::ZERO), Rational::one());
        assert_eq!(qdim_closed(Algebra::C, HalfInt::from_twice(-1), &[], n).unwrap(), neutral_boson_qdim(n).unwrap());
        assert_eq!(qdim_closed(Algebra::D, HalfInt::HALF, &[], n).unwrap(), neutral_fermion_qdim(n).unwrap());
    }

    #[test]
    fn positive_level_forms_agree() {
        let n = h(20);
        assert_eq!(c_positive_weyl(&[1, 0], n).unwrap(), c_positive_product(&[1, 0], n).unwrap());
        assert_eq!(c_positive_weyl(&[2, 1, 0], h(10)).unwrap(), c_positive_product(&[2, 1, 0], h(10)).unwrap());
    }

    #[test]
    fn printed_d_formula_differs_at_rank_one() {
        let n = h(6);
        let corrected = qdim_closed(Algebra::D, h(-1), &[1], n).unwrap();
        let printed = qdim_d_printed(h(-1), &[1], n).unwrap();
        assert_ne!(corrected, printed);
        // the charge-(λ_1 + 1) slice of the Sp(2)-denominator cleared trace
        let tr = duality_trace(&[FockKind::BosonPair], OpTag::D, &[], n).unwrap();
        let extracted = tr.coeff_z(1, 1).sub(&tr.coeff_z(1, 3));
        assert_eq!(corrected, extracted);
    }

    #[test]
    fn character_identity() {
        let n = h(4);
        let r = gl_character_identity_residual(2, 12, n).unwrap();
        for (m, c) in r.terms() {
            assert!(m.z().iter().any(|&(_, e)| e.abs() > 10), "residual {c} at {m}");
        }
    }

    #[test]
    fn rejects_bad_labels() {
        let n = h(2);
        assert!(qdim_closed(Algebra::C, h(-2), &[0, 1], n).is_err());
        assert!(qdim_closed(Algebra::A, h(-1), &[0, 0], n).is_err());
        assert!(qdim_closed(Algebra::A, h(1), &[], n).is_err());
    }
}
