//! The level-1 n-point function F_bo and its charge-k sectors.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::qseries::{euler, theta_jet, HalfInt, Jet, Param, Rational, Series};

/// Largest number of points F_bo is evaluated at.
pub const MAX_POINTS: usize = 4;

fn degenerate(e: Error) -> Error {
    match e {
        Error::NotInvertible(m) => Error::DegenerateParameter(format!("theta vanishes at a partial product: {m}")),
        other => other,
    }
}

/// Leibniz expansion of an n×n determinant of series.
fn det(m: &[Vec<Series>], n: HalfInt) -> Series {
    let k = m.len();
    let mut out = Series::zero(n);
    for perm in (0..k).permutations(k) {
        let inversions = (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let mut term = Series::one(n);
        for (i, &j) in perm.iter().enumerate() {
            if m[i][j].is_zero() {
                term = Series::zero(n);
                break;
            }
            term = term.mul(&m[i][j]);
        }
        out = if inversions % 2 == 0 { out.add(&term) } else { out.sub(&term) };
    }
    out
}

/// F_bo(q; t₁,…,t_n) = (1/(q)_∞)·Σ_{σ∈S_n} det(Θ^{(j−i+1)}(P_{n−j})/(j−i+1)!)
/// / Π_j Θ(P_j), with P_j = t_{σ(1)}⋯t_{σ(j)} and 1/(−k)! = 0.
pub fn f_bo(points: &[Param], n: HalfInt) -> Result<Series> {
    let k = points.len();
    if k > MAX_POINTS {
        return Err(Error::CapExceeded(format!("F_bo supports at most {MAX_POINTS} points, got {k}")));
    }
    let mut jets: std::collections::HashMap<Vec<usize>, Jet> = std::collections::HashMap::new();
    let mut jet_of = |idx: &[usize]| -> Result<Jet> {
        let mut key = idx.to_vec();
        key.sort_unstable();
        if let Some(j) = jets.get(&key) {
            return Ok(j.clone());
        }
        let p = Param::product(key.iter().map(|&i| &points[i]));
        let j = theta_jet(&p, k, n)?;
        jets.insert(key, j.clone());
        Ok(j)
    };
    let mut total = Series::zero(n);
    for sigma in (0..k).permutations(k) {
        let mut mat = vec![vec![Series::zero(n); k]; k];
        for j in 1..=k {
            let jet = jet_of(&sigma[..k - j])?;
            for i in 1..=k {
                if j + 1 >= i {
                    mat[i - 1][j - 1] = jet.coeff(j + 1 - i).clone();
                }
            }
        }
        let mut den = Series::one(n);
        for j in 1..=k {
            den = den.mul(jet_of(&sigma[..j])?.coeff(0));
        }
        total = total.add(&det(&mat, n).div(&den).map_err(degenerate)?);
    }
    total.div(&euler(n))
}

/// q^{k²/2}(t₁⋯t_n)^k F_bo(q; t): the trace over the charge-k sector of one
/// pair of charged fermions.
pub fn level1_sector(k: i64, points: &[Param], n: HalfInt) -> Result<Series> {
    let pre = Param::product(points).pow_int(k).value(n).shift_q(HalfInt::from_twice(k * k));
    Ok(pre.mul(&f_bo(points, n)?).truncate(n))
}

/// Σ_ε [ε]·level1_sector(k, t^ε): the charge-k sector of C(t₁)⋯C(t_n) on a
/// fermion pair.
pub fn level1_sector_c(k: i64, points: &[Param], n: HalfInt) -> Result<Series> {
    let mut out = Series::zero(n);
    for (sign, pts) in epsilon_points(points) {
        out = out.add(&level1_sector(k, &pts, n)?.scale(&Rational::from_integer(sign.into())));
    }
    Ok(out)
}

/// Every choice t^ε = (t₁^{ε₁},…,t_n^{ε_n}) with its sign ε₁⋯ε_n.
pub fn epsilon_points(points: &[Param]) -> Vec<(i64, Vec<Param>)> {
    let k = points.len();
    (0..1usize << k)
        .map(|mask| {
            let pts: Vec<Param> =
                points.iter().enumerate().map(|(i, p)| if mask >> i & 1 == 1 { p.inv() } else { p.clone() }).collect();
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            (sign, pts)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::{f1_charged_trace, sector_trace, FockKind, OpTag};
    use crate::qseries::theta;

    fn h(v: i64) -> HalfInt {
        HalfInt::int(v)
    }

    #[test]
    fn one_point_definition() {
        let n = h(8);
        let t = Param::frac(2, 3);
        let one = Param::point(Rational::from_integer(1.into()));
        let d1 = theta_jet(&one, 1, n).unwrap().coeff(1).clone();
        let want = d1.div(&euler(n).mul(&theta(&t, n).unwrap())).unwrap();
        assert_eq!(f_bo(&[t], n).unwrap(), want);
    }

    #[test]
    fn matches_fermionic_oracle() {
        let n = h(6);
        let z = Param::point(Rational::from_integer(1.into())).with_z(1, 1);
        let t = Param::frac(2, 3);
        let full = f1_charged_trace(&z, &[t.clone()], n).unwrap();
        for k in [0, 2, -1] {
            assert_eq!(level1_sector(k, &[t.clone()], n).unwrap(), full.coeff_z(1, k), "k = {k}");
        }
        let pts = [Param::frac(2, 3), Param::frac(3, 5)];
        for k in [0, 1] {
            let oracle = sector_trace(FockKind::FermionPair, OpTag::A, k, &pts, h(4)).unwrap();
            assert_eq!(level1_sector(k, &pts, h(4)).unwrap(), oracle);
            let oracle = sector_trace(FockKind::FermionPair, OpTag::C, k, &pts, h(4)).unwrap();
            assert_eq!(level1_sector_c(k, &pts, h(4)).unwrap(), oracle);
        }
    }

    #[test]
    fn permutation_symmetry() {
        let n = h(4);
        let a = [Param::frac(2, 3), Param::frac(3, 5), Param::frac(5, 7)];
        let b = [a[2].clone(), a[0].clone(), a[1].clone()];
        assert_eq!(f_bo(&a, n).unwrap(), f_bo(&b, n).unwrap());
        let oracle = sector_trace(FockKind::FermionPair, OpTag::A, 0, &a, h(3)).unwrap();
        assert_eq!(level1_sector(0, &a, h(3)).unwrap(), oracle);
    }

    #[test]
    fn errors() {
        let n = h(3);
        let five: Vec<Param> = (2..7).map(|d| Param::frac(1, d)).collect();
        assert!(matches!(f_bo(&five, n), Err(Error::CapExceeded(_))));
        let pts = [Param::frac(2, 3), Param::frac(3, 2)];
        assert!(matches!(f_bo(&pts, n), Err(Error::DegenerateParameter(_))));
    }
}
