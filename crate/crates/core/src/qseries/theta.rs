use super::jet::Jet;
use super::pochhammer::euler;
use super::{HalfInt, Param, Series};
use crate::error::{Error, Result};

/// Jet of Θ(t) = (t^{1/2} − t^{−1/2})·(q)_∞^{−2}·(qt)_∞·(qt^{−1})_∞ at t,
/// of the given order: coefficient k is Θ^{(k)}(t)/k! with Θ^{(k)} the k-fold
/// t d/dt derivative.
pub fn theta_jet(t: &Param, order: usize, n: HalfInt) -> Result<Jet> {
    if t.d <= -HalfInt::ONE || t.d >= HalfInt::ONE {
        return Err(Error::NonTruncatable(format!(
            "theta needs both qt and q/t of positive valuation, got t = {t}"
        )));
    }
    let w = n + t.d.abs();
    let half = t.power(HalfInt::HALF, w)?;
    let mhalf = t.power(-HalfInt::HALF, w)?;
    let pre = Jet::exp_rate(&half, HalfInt::HALF, order).sub(&Jet::exp_rate(&mhalf, -HalfInt::HALF, order));
    let e = euler(w);
    let e2inv = e.mul(&e).invert()?;
    let mut jet = pre.mul_series(&e2inv);
    let tv = t.value(w);
    let tinv = t.inv().value(w);
    let mut i = 1;
    loop {
        let qi = HalfInt::int(i);
        let a = tv.shift_q(qi);
        let b = tinv.shift_q(qi);
        let mut touched = false;
        if a.min_qexp() <= w {
            jet = jet.mul_one_minus_exp(&a, 1);
            touched = true;
        }
        if b.min_qexp() <= w {
            jet = jet.mul_one_minus_exp(&b, -1);
            touched = true;
        }
        if !touched {
            break;
        }
        i += 1;
    }
    Ok(jet.truncate(n))
}

/// Θ(t) as a series.
pub fn theta(t: &Param, n: HalfInt) -> Result<Series> {
    Ok(theta_jet(t, 0, n)?.coeff(0).clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::{rat, Monomial};

    #[test]
    fn constant_layer_and_zero() {
        let n = HalfInt::int(6);
        let th = theta(&Param::frac(2, 3), n).unwrap();
        assert_eq!(th.coeff_q(HalfInt::ZERO), rat(2, 3) - rat(3, 2));
        assert!(theta(&Param::frac(1, 1), n).unwrap().is_zero());
    }

    #[test]
    fn theta_is_odd_under_inversion() {
        let n = HalfInt::int(8);
        let t = Param::frac(3, 5);
        assert_eq!(theta(&t.inv(), n).unwrap(), theta(&t, n).unwrap().neg());
    }

    #[test]
    fn jacobi_triple_product_derivative() {
        let n = HalfInt::int(20);
        let j = theta_jet(&Param::frac(1, 1), 1, n).unwrap();
        let e = euler(n);
        let lhs = j.derivative(1).mul(&e.mul(&e).mul(&e));
        let mut rhs = Series::zero(n);
        for m in 0..10i64 {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            rhs.add_term(Monomial::q(HalfInt::int(m * (m + 1) / 2)), rat(sign * (2 * m + 1), 1));
        }
        assert_eq!(lhs, rhs);
    }
}
