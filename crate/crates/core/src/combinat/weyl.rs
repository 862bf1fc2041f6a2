use itertools::Itertools;

use crate::error::{Error, Result};
use crate::qseries::HalfInt;

/// Largest rank for which Weyl groups are enumerated.
pub const MAX_RANK: usize = 6;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeylType {
    /// The symmetric group S_l.
    A,
    /// Signed permutations, the common Weyl group of B_l and C_l.
    BC,
    /// Signed permutations with an even number of sign changes.
    D,
}

/// A signed permutation acting on R^l by v ↦ w with w_{perm[i]} = signs[i]·v_i.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub perm: Vec<usize>,
    pub signs: Vec<i8>,
    pub ty: WeylType,
}

impl WeylElement {
    pub fn identity(ty: WeylType, l: usize) -> Self {
        WeylElement { perm: (0..l).collect(), signs: vec![1; l], ty }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    /// Determinant of the signed permutation matrix, i.e. (−1)^{ℓ(σ)}.
    pub fn sign(&self) -> i64 {
        let mut inversions = 0;
        for i in 0..self.perm.len() {
            for j in i + 1..self.perm.len() {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let flips = self.signs.iter().filter(|&&s| s < 0).count();
        if (inversions + flips) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn act(&self, v: &[HalfInt]) -> Vec<HalfInt> {
        let mut out = vec![HalfInt::ZERO; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] < 0 { -x } else { x };
        }
        out
    }

    /// The composite self∘other.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let l = self.rank();
        let mut perm = vec![0; l];
        let mut signs = vec![1; l];
        for i in 0..l {
            let j = other.perm[i];
            perm[i] = self.perm[j];
            signs[i] = self.signs[j] * other.signs[i];
        }
        WeylElement { perm, signs, ty: self.ty }
    }
}

/// Every element of the Weyl group of the given type and rank with its sign.
pub fn weyl_group(ty: WeylType, l: usize) -> Result<Vec<(WeylElement, i64)>> {
    if l == 0 {
        return Err(Error::InvalidInput("Weyl group rank must be at least 1".into()));
    }
    if l > MAX_RANK {
        return Err(Error::CapExceeded(format!("Weyl group rank {l} exceeds the cap {MAX_RANK}")));
    }
    let mut out = Vec::new();
    for perm in (0..l).permutations(l) {
        let sign_choices: Vec<Vec<i8>> = match ty {
            WeylType::A => vec![vec![1; l]],
            WeylType::BC | WeylType::D => (0..1u32 << l)
                .map(|mask| (0..l).map(|i| if mask >> i & 1 == 1 { -1 } else { 1 }).collect::<Vec<i8>>())
                .filter(|s| ty == WeylType::BC || s.iter().filter(|&&x| x < 0).count() % 2 == 0)
                .collect(),
        };
        for signs in sign_choices {
            let w = WeylElement { perm: perm.clone(), signs, ty };
            let s = w.sign();
            out.push((w, s));
        }
    }
    Ok(out)
}

/// A strictly decreasing vector of half-integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoVector(pub Vec<HalfInt>);

impl RhoVector {
    /// ρ = (l−1, …, 1, 0).
    pub fn a(l: usize) -> Self {
        RhoVector((0..l).map(|i| HalfInt::int((l - 1 - i) as i64)).collect())
    }

    /// ρ_B = (l−1/2, …, 1/2).
    pub fn b(l: usize) -> Self {
        RhoVector((0..l).map(|i| HalfInt::from_twice(2 * (l - i) as i64 - 1)).collect())
    }

    /// ρ_C = (l, …, 1).
    pub fn c(l: usize) -> Self {
        RhoVector((0..l).map(|i| HalfInt::int((l - i) as i64)).collect())
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.0
    }
}

/// k_i = λ_i + ρ_i − σ(ρ)_i.
pub fn k_vector(lambda: &[i64], sigma: &WeylElement, rho: &RhoVector) -> Result<Vec<i64>> {
    if lambda.len() != rho.0.len() || sigma.rank() != rho.0.len() {
        return Err(Error::InvalidInput(format!(
            "dimension mismatch: λ has {} entries, ρ has {}, σ has rank {}",
            lambda.len(),
            rho.0.len(),
            sigma.rank()
        )));
    }
    let s = sigma.act(&rho.0);
    lambda
        .iter()
        .zip(rho.0.iter().zip(&s))
        .map(|(&l, (&r, &sr))| {
            (HalfInt::int(l) + r - sr)
                .to_int()
                .ok_or_else(|| Error::InvalidInput("λ + ρ − σ(ρ) is not integral".into()))
        })
        .collect()
}
