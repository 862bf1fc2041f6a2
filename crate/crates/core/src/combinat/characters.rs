use std::collections::BTreeMap;

use itertools::Itertools;

use super::weyl::{weyl_group, RhoVector, WeylType};
use crate::error::{Error, Result};
use crate::qseries::{HalfInt, Monomial, Rational, Series};

/// Classical character families whose Weyl-formula numerators appear in the
/// dualities.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CharKind {
    /// GL(l): |z_j^{λ_i+l−i}|.
    Gl,
    /// Sp(2l): |z_j^{m_i} − z_j^{−m_i}|, m_i = λ_i+l−i+1.
    Sp,
    /// osp(1,2l), equal to the so(2l+1) numerator |z_j^{m_i} − z_j^{−m_i}|
    /// with m_i = λ_i+l−i+1/2.
    OspB,
    /// O(2l): |z_j^{m_i} + z_j^{−m_i}|, m_i = λ_i+l−i.
    OEven,
}

/// A Laurent polynomial in z_1..z_l with half-integer exponents and integer
/// coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<Vec<HalfInt>, i64>,
}

impl LaurentPoly {
    pub fn monomial(exps: Vec<HalfInt>, c: i64) -> Self {
        let mut p = LaurentPoly::default();
        p.add_term(exps, c);
        p
    }

    pub fn add_term(&mut self, exps: Vec<HalfInt>, c: i64) {
        let e = self.terms.entry(exps).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<HalfInt>, i64> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[HalfInt]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), *c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * k);
        }
        out
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                let e: Vec<HalfInt> = a.iter().zip(b).map(|(x, y)| *x + *y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// Swaps the variables z_i and z_j.
    pub fn swap_vars(&self, i: usize, j: usize) -> LaurentPoly {
        let mut out = LaurentPoly::default();
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.swap(i, j);
            out.add_term(e, *c);
        }
        out
    }

    /// Converts to a q-free series in z_1..z_l (variables indexed from 1);
    /// fails if an exponent is not integral.
    pub fn to_series(&self, n: HalfInt) -> Result<Series> {
        let mut out = Series::zero(n);
        for (e, c) in &self.terms {
            let mut z = Vec::new();
            for (i, x) in e.iter().enumerate() {
                let k = x
                    .to_int()
                    .ok_or_else(|| Error::InvalidInput("half-integer z-exponent in series conversion".into()))?;
                z.push((i as u32 + 1, k));
            }
            out.add_term(Monomial::new(HalfInt::ZERO, z), Rational::from_integer((*c).into()));
        }
        Ok(out)
    }
}

fn shifted(kind: CharKind, lambda: &[i64]) -> Vec<HalfInt> {
    let l = lambda.len();
    let rho = match kind {
        CharKind::Gl | CharKind::OEven => RhoVector::a(l),
        CharKind::Sp => RhoVector::c(l),
        CharKind::OspB => RhoVector::b(l),
    };
    lambda.iter().zip(rho.entries()).map(|(&x, &r)| HalfInt::int(x) + r).collect()
}

/// The determinant numerator of the Weyl character formula for λ, expanded by
/// the Leibniz rule.
pub fn char_numerator(kind: CharKind, lambda: &[i64], l: usize) -> Result<LaurentPoly> {
    if lambda.len() != l {
        return Err(Error::InvalidInput(format!("λ has {} entries, expected {l}", lambda.len())));
    }
    if kind != CharKind::Gl && lambda.iter().any(|&x| x < 0) {
        return Err(Error::InvalidInput("negative entries are only allowed for GL(l)".into()));
    }
    let m = shifted(kind, lambda);
    // entry (i, j) of the matrix as a Laurent polynomial in z_j
    let entry = |i: usize, j: usize| -> LaurentPoly {
        let unit = |e: HalfInt| {
            let mut v = vec![HalfInt::ZERO; l];
            v[j] = e;
            v
        };
        let mut p = LaurentPoly::monomial(unit(m[i]), 1);
        match kind {
            CharKind::Gl => {}
            CharKind::Sp | CharKind::OspB => p.add_term(unit(-m[i]), -1),
            CharKind::OEven => p.add_term(unit(-m[i]), 1),
        }
        p
    };
    let mut total = LaurentPoly::default();
    for perm in (0..l).permutations(l) {
        let inversions = (0..l).flat_map(|i| (i + 1..l).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = LaurentPoly::monomial(vec![HalfInt::ZERO; l], if inversions % 2 == 0 { 1 } else { -1 });
        for (i, &j) in perm.iter().enumerate() {
            term = term.mul(&entry(i, j));
        }
        total = total.add(&term);
    }
    Ok(total)
}

/// c_λ for O(2l): 1 if λ_l = 0, else 2.
pub fn c_lambda(lambda: &[i64]) -> i64 {
    if lambda.last().copied().unwrap_or(0) == 0 {
        1
    } else {
        2
    }
}

/// Σ_σ sign(σ)·z^{σ(ρ)}.
pub fn weyl_denominator(ty: WeylType, rho: &RhoVector) -> Result<LaurentPoly> {
    let mut out = LaurentPoly::default();
    for (w, s) in weyl_group(ty, rho.entries().len())? {
        out.add_term(w.act(rho.entries()), s);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_one_examples() {
        let gl = char_numerator(CharKind::Gl, &[3], 1).unwrap();
        assert_eq!(gl, LaurentPoly::monomial(vec![HalfInt::int(3)], 1));
        let sp = char_numerator(CharKind::Sp, &[2], 1).unwrap();
        let mut expect = LaurentPoly::monomial(vec![HalfInt::int(3)], 1);
        expect.add_term(vec![HalfInt::int(-3)], -1);
        assert_eq!(sp, expect);
        let o = char_numerator(CharKind::OEven, &[0], 1).unwrap();
        assert_eq!(o, LaurentPoly::monomial(vec![HalfInt::ZERO], 2));
        assert_eq!(c_lambda(&[0]), 1);
    }

    #[test]
    fn weyl_denominator_identities() {
        for l in 1..=3 {
            let zero = vec![0; l];
            assert_eq!(
                weyl_denominator(WeylType::A, &RhoVector::a(l)).unwrap(),
                char_numerator(CharKind::Gl, &zero, l).unwrap()
            );
            assert_eq!(
                weyl_denominator(WeylType::BC, &RhoVector::b(l)).unwrap(),
                char_numerator(CharKind::OspB, &zero, l).unwrap()
            );
            assert_eq!(
                weyl_denominator(WeylType::BC, &RhoVector::c(l)).unwrap(),
                char_numerator(CharKind::Sp, &zero, l).unwrap()
            );
            assert_eq!(
                weyl_denominator(WeylType::D, &RhoVector::a(l)).unwrap().scale(2),
                char_numerator(CharKind::OEven, &zero, l).unwrap()
            );
        }
    }

    #[test]
    fn gl_numerator_is_alternating() {
        let p = char_numerator(CharKind::Gl, &[2, 0, -1], 3).unwrap();
        assert_eq!(p.swap_vars(0, 2), p.scale(-1));
        assert_eq!(p.swap_vars(0, 1), p.scale(-1));
    }

    #[test]
    fn dominant_coefficient_of_orthogonal_numerator() {
        // coefficient of z^{λ+ρ} in |z^{λ+ρ} + z^{-(λ+ρ)}| is 2/c_λ
        for lambda in [vec![0, 0], vec![1, 0], vec![2, 1], vec![1, 1]] {
            let p = char_numerator(CharKind::OEven, &lambda, 2).unwrap();
            let dom: Vec<HalfInt> = shifted(CharKind::OEven, &lambda);
            assert_eq!(p.coeff(&dom), 2 / c_lambda(&lambda));
        }
    }
}
