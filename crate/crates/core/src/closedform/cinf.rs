//! c∞ and d∞ building blocks: the one-point function of the neutral boson
//! and the level −1 sectors obtained from a∞ sectors by ε-sums.

use super::level1::epsilon_points;
use super::level_minus1::a_sector_closed;
use crate::error::Result;
use crate::fock::a_sector_trace;
use crate::qseries::pochhammer::{div_one_minus, pochhammer_inf_inv};
use crate::qseries::{pochhammer_inf, qhyper, HalfInt, Param, Rational, Series};

/// Where level −1 a∞ sector functions come from.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum BaseSource {
    /// Closed formulas where one exists, the trace oracle otherwise.
    Closed,
    /// Always the trace oracle.
    Oracle,
}

/// 𝔄^{(k)}_{−1} from the requested source.
pub fn a_sector(k: i64, points: &[Param], n: HalfInt, source: BaseSource) -> Result<Series> {
    if source == BaseSource::Closed {
        if let Some(s) = a_sector_closed(k, points, n)? {
            return Ok(s);
        }
    }
    a_sector_trace(k, points, n)
}

fn qh(e2: i64, n: HalfInt) -> Series {
    Series::q_pow(HalfInt::from_twice(e2), n)
}

/// t^{1/2}(tq^{3/2})_∞/(tq)_∞·₂Φ₂(q^{1/2}, q^{1/2}; q^{3/2}, tq^{3/2}; q²t).
fn half_block(t: &Param, n: HalfInt) -> Result<Series> {
    let v = |e2: i64| t.q_shift(HalfInt::from_twice(e2)).value(n);
    let pre = t.power(HalfInt::HALF, n)?.mul(&pochhammer_inf(&v(3), n)?).mul(&pochhammer_inf_inv(&v(2), n)?);
    let phi = qhyper(&[qh(1, n), qh(1, n)], &[qh(3, n), v(3)], &v(4), n)?;
    Ok(pre.mul(&phi))
}

/// 𝔠^{(0)}_{−1/2}(q; t) = β(t)/(q^{1/2})_∞ − B(t)/((q^{1/2})_∞(1 − q^{−1/2}))
/// + B(t^{−1})/((q^{1/2})_∞(1 − q^{−1/2})), with B the ₂Φ₂ block.
pub fn c_one_point_half(t: &Param, n: HalfInt) -> Result<Series> {
    let inv_half = pochhammer_inf_inv(&qh(1, n), n)?;
    // 1/(1 − q^{−1/2}) = −q^{1/2}/(1 − q^{1/2})
    let factor = div_one_minus(&qh(1, n).neg(), &qh(1, n))?.mul(&inv_half);
    let central = inv_half.mul(&t.c_term(n)?);
    let blocks = half_block(t, n)?.sub(&half_block(&t.inv(), n)?);
    Ok(central.sub(&factor.mul(&blocks)))
}

/// 𝔠^{(m)}_{−1} = Σ_ε [ε]·𝔄^{(m)}_{−1}(t^ε), the charge-m sector of the C(t)
/// trace on one boson pair.
pub fn c_sector_minus1(m: i64, points: &[Param], n: HalfInt, source: BaseSource) -> Result<Series> {
    let mut out = Series::zero(n);
    for (sign, pts) in epsilon_points(points) {
        out = out.add(&a_sector(m, &pts, n, source)?.scale(&Rational::from_integer(sign.into())));
    }
    Ok(out)
}

/// 𝔇^{(m)}_{−1} = [z^m] − [z^{m+2}] of the ε-summed a∞ trace.
pub fn d_sector_minus1(m: i64, points: &[Param], n: HalfInt, source: BaseSource) -> Result<Series> {
    Ok(c_sector_minus1(m, points, n, source)?.sub(&c_sector_minus1(m + 2, points, n, source)?))
}

/// 1/(q^{1/2})_∞, the q-dimension of the neutral boson space.
pub fn neutral_boson_qdim(n: HalfInt) -> Result<Series> {
    pochhammer_inf_inv(&qh(1, n), n)
}

/// (−q^{1/2})_∞, the q-dimension of the neutral fermion space.
pub fn neutral_fermion_qdim(n: HalfInt) -> Result<Series> {
    pochhammer_inf(&qh(1, n).neg(), n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::closedform::level_minus1::qdim_minus1;
    use crate::fock::{neutral_trace, sector_trace, FockKind, OpTag};

    fn h(v: i64) -> HalfInt {
        HalfInt::int(v)
    }

    #[test]
    fn neutral_one_point() {
        let n = h(8);
        for t in [Param::frac(2, 3), Param::frac(3, 5), Param::frac(5, 7)] {
            let closed = c_one_point_half(&t, n).unwrap();
            assert_eq!(closed, neutral_trace(FockKind::BosonNeutral, OpTag::C, &[t.clone()], n).unwrap());
            assert_eq!(closed.coeff_q(HalfInt::ZERO), t.c_term(n).unwrap().coeff_q(HalfInt::ZERO));
            assert_eq!(c_one_point_half(&t.inv(), n).unwrap(), closed.neg());
        }
    }

    #[test]
    fn sectors_match_oracle() {
        let n = h(5);
        assert_eq!(c_sector_minus1(0, &[], n, BaseSource::Closed).unwrap(), qdim_minus1(0, n).unwrap());
        let d0 = d_sector_minus1(0, &[], n, BaseSource::Closed).unwrap();
        assert_eq!(d0.coeff_q(HalfInt::ZERO), Rational::one());
        let t = [Param::frac(2, 3)];
        for m in [0, 1, 3] {
            let closed = c_sector_minus1(m, &t, n, BaseSource::Closed).unwrap();
            assert_eq!(closed, sector_trace(FockKind::BosonPair, OpTag::C, m, &t, n).unwrap());
            assert_eq!(closed, c_sector_minus1(-m, &t, n, BaseSource::Oracle).unwrap());
        }
    }

    #[test]
    fn neutral_dimensions() {
        let n = h(8);
        assert_eq!(neutral_boson_qdim(n).unwrap(), neutral_trace(FockKind::BosonNeutral, OpTag::C, &[], n).unwrap());
        assert_eq!(neutral_fermion_qdim(n).unwrap(), neutral_trace(FockKind::FermionNeutral, OpTag::D, &[], n).unwrap());
    }
}
