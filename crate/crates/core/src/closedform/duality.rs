//! Reduction of the n-point functions of level −l (and the fractional
//! levels) to base-level blocks through the Howe dualities.
//!
//! Each duality writes a Fock space of several factors as a sum over labels
//! λ of (finite-dimensional character) ⊗ (module). Multiplying the charge
//! weighted trace by the Weyl denominator and reading off the coefficient of
//! z^{λ+ρ} gives the module trace as Σ_σ sign(σ)·[z^{λ+ρ−σρ}](trace). The
//! trace of a sum of commuting diagonal operators over a tensor product is a
//! sum over assignments of the points to factors, which is what
//! [`ReductionMode::Assignment`] evaluates.

use std::collections::HashMap;
use std::fmt;

use super::cinf::{c_one_point_half, c_sector_minus1, neutral_boson_qdim, neutral_fermion_qdim, BaseSource};
use super::level1::{level1_sector_c, MAX_POINTS};
use super::qdim::weyl_sum;
use crate::combinat::{RhoVector, WeylType};
use crate::error::{Error, Result};
use crate::fock::{duality_trace, neutral_trace, sector_trace, FockKind, OpTag};
use crate::qseries::{HalfInt, Param, Series};

/// Largest rank the engine accepts.
pub const MAX_RANK: usize = 4;
/// Largest number of points the engine accepts.
pub const MAX_N: usize = 3;

/// The six dualities, by algebra and level.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// a∞ at level −l: l boson pairs, GL(l), S_l with ρ.
    AMinus,
    /// c∞ at level l − 1/2: a neutral boson and l fermion pairs, osp(1,2l),
    /// W(B_l) with ρ_B.
    CPlusHalf,
    /// c∞ at level −l: l boson pairs, O(2l), W(D_l) with ρ.
    CMinus,
    /// c∞ at level −l − 1/2: a neutral boson and l boson pairs, O(2l+1),
    /// W(B_l) with ρ_B.
    CMinusHalf,
    /// d∞ at level −l: l boson pairs, Sp(2l), W(C_l) with ρ_C.
    DMinus,
    /// d∞ at level −l + 1/2: a neutral fermion and l boson pairs,
    /// osp(1,2l), W(B_l) with ρ_B.
    DMinusHalf,
}

impl Family {
    pub const ALL: [Family; 6] =
        [Family::AMinus, Family::CPlusHalf, Family::CMinus, Family::CMinusHalf, Family::DMinus, Family::DMinusHalf];

    pub fn slug(self) -> &'static str {
        match self {
            Family::AMinus => "a-minus-l",
            Family::CPlusHalf => "c-l-minus-half",
            Family::CMinus => "c-minus-l",
            Family::CMinusHalf => "c-minus-l-minus-half",
            Family::DMinus => "d-minus-l",
            Family::DMinusHalf => "d-minus-l-plus-half",
        }
    }
}

/// A duality at a fixed rank.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualityInstance {
    pub family: Family,
    pub l: usize,
}

impl fmt::Display for DualityInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(l={})", self.family.slug(), self.l)
    }
}

/// How the Weyl-sum formula combines base-level blocks.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ReductionMode {
    /// The printed form: the neutral factor's full n-point function times
    /// Σ_σ sign Π_i B_{k_i}(all points).
    Literal,
    /// Σ_σ sign Σ_φ N(φ^{−1}(0)) Π_i B_{k_i}(φ^{−1}(i)) over all maps φ from
    /// the points to the factors.
    Assignment,
}

impl DualityInstance {
    pub fn new(family: Family, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidInput("duality rank must be at least 1".into()));
        }
        if l > MAX_RANK {
            return Err(Error::CapExceeded(format!("duality rank {l} exceeds the cap {MAX_RANK}")));
        }
        Ok(DualityInstance { family, l })
    }

    /// The neutral factor, if any.
    pub fn neutral(&self) -> Option<FockKind> {
        match self.family {
            Family::CPlusHalf | Family::CMinusHalf => Some(FockKind::BosonNeutral),
            Family::DMinusHalf => Some(FockKind::FermionNeutral),
            _ => None,
        }
    }

    /// The charged factor kind, repeated l times.
    pub fn charged(&self) -> FockKind {
        match self.family {
            Family::CPlusHalf => FockKind::FermionPair,
            _ => FockKind::BosonPair,
        }
    }

    /// Factors in trace order: the neutral factor first, then the l charged
    /// ones carrying z_1, …, z_l.
    pub fn factors(&self) -> Vec<FockKind> {
        let mut v: Vec<FockKind> = self.neutral().into_iter().collect();
        v.extend(std::iter::repeat(self.charged()).take(self.l));
        v
    }

    pub fn op(&self) -> OpTag {
        match self.family {
            Family::AMinus => OpTag::A,
            Family::CPlusHalf | Family::CMinus | Family::CMinusHalf => OpTag::C,
            Family::DMinus | Family::DMinusHalf => OpTag::D,
        }
    }

    pub fn weyl(&self) -> WeylType {
        match self.family {
            Family::AMinus => WeylType::A,
            Family::CMinus => WeylType::D,
            _ => WeylType::BC,
        }
    }

    pub fn rho(&self) -> RhoVector {
        match self.family {
            Family::AMinus | Family::CMinus => RhoVector::a(self.l),
            Family::DMinus => RhoVector::c(self.l),
            _ => RhoVector::b(self.l),
        }
    }

    /// The level: sum of the factors' central charges.
    pub fn level(&self) -> HalfInt {
        self.factors().iter().fold(HalfInt::ZERO, |a, f| a + f.central_charge())
    }

    /// Checks that λ is a label of this duality: a generalized partition for
    /// a∞, a partition otherwise, of length l.
    pub fn check_label(&self, lambda: &[i64]) -> Result<()> {
        if lambda.len() != self.l {
            return Err(Error::InvalidInput(format!("{self} needs λ of length {}, got {lambda:?}", self.l)));
        }
        if lambda.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("λ = {lambda:?} is not non-increasing")));
        }
        if self.family != Family::AMinus && lambda.iter().any(|&x| x < 0) {
            return Err(Error::InvalidInput(format!("λ = {lambda:?} must be a partition for {self}")));
        }
        Ok(())
    }

    /// The charge-k block B_k(S) of one charged factor.
    pub fn base(&self, k: i64, points: &[Param], n: HalfInt, source: BaseSource) -> Result<Series> {
        let closed_ok = source == BaseSource::Closed && points.iter().all(Param::is_plain);
        match self.family {
            Family::AMinus => {
                if closed_ok {
                    super::cinf::a_sector(k, points, n, BaseSource::Closed)
                } else {
                    sector_trace(FockKind::BosonPair, OpTag::A, k, points, n)
                }
            }
            Family::CPlusHalf => {
                if closed_ok && points.len() <= MAX_POINTS {
                    level1_sector_c(k, points, n)
                } else {
                    sector_trace(FockKind::FermionPair, OpTag::C, k, points, n)
                }
            }
            _ => {
                if closed_ok {
                    c_sector_minus1(k, points, n, BaseSource::Closed)
                } else {
                    sector_trace(FockKind::BosonPair, self.op(), k, points, n)
                }
            }
        }
    }

    /// The neutral factor's n-point function on a subset of the points.
    pub fn neutral_block(&self, points: &[Param], n: HalfInt, source: BaseSource) -> Result<Series> {
        let Some(kind) = self.neutral() else {
            return Ok(Series::one(n));
        };
        let closed_ok = source == BaseSource::Closed && points.iter().all(Param::is_plain);
        match (kind, points.len(), closed_ok) {
            (FockKind::BosonNeutral, 0, _) => neutral_boson_qdim(n),
            (FockKind::BosonNeutral, 1, true) => c_one_point_half(&points[0], n),
            (FockKind::FermionNeutral, 0, _) => neutral_fermion_qdim(n),
            _ => neutral_trace(kind, self.op(), points, n),
        }
    }
}

fn subset(points: &[Param], mask: usize) -> Vec<Param> {
    (0..points.len()).filter(|j| mask >> j & 1 == 1).map(|j| points[j].clone()).collect()
}

fn check_sizes(inst: &DualityInstance, points: &[Param]) -> Result<()> {
    if points.len() > MAX_N {
        return Err(Error::CapExceeded(format!("duality reduction takes at most {MAX_N} points, got {}", points.len())));
    }
    if inst.l > MAX_RANK {
        return Err(Error::CapExceeded(format!("duality rank {} exceeds the cap {MAX_RANK}", inst.l)));
    }
    Ok(())
}

/// The module's n-point function from base-level blocks.
pub fn duality_reduce(
    inst: &DualityInstance,
    lambda: &[i64],
    points: &[Param],
    n: HalfInt,
    mode: ReductionMode,
    source: BaseSource,
) -> Result<Series> {
    inst.check_label(lambda)?;
    check_sizes(inst, points)?;
    let np = points.len();
    let full = (1usize << np) - 1;
    let mut blocks: HashMap<(i64, usize), Series> = HashMap::new();
    let mut block = |k: i64, mask: usize| -> Result<Series> {
        if let Some(s) = blocks.get(&(k, mask)) {
            return Ok(s.clone());
        }
        let s = inst.base(k, &subset(points, mask), n, source)?;
        blocks.insert((k, mask), s.clone());
        Ok(s)
    };
    match mode {
        ReductionMode::Literal => {
            let sum = weyl_sum(inst.weyl(), &inst.rho(), lambda, n, |ks| {
                let mut out = Series::one(n);
                for &k in ks {
                    out = out.mul(&block(k, full)?);
                }
                Ok(out)
            })?;
            Ok(inst.neutral_block(points, n, source)?.mul(&sum))
        }
        ReductionMode::Assignment => {
            let neutral: Vec<Series> = (0..=full)
                .map(|m| match inst.neutral() {
                    Some(_) => inst.neutral_block(&subset(points, m), n, source),
                    None if m == 0 => Ok(Series::one(n)),
                    None => Ok(Series::zero(n)),
                })
                .collect::<Result<_>>()?;
            let sum_over = |ks: &[i64], block: &mut dyn FnMut(i64, usize) -> Result<Series>| -> Result<Series> {
                // dp[mask]: Σ over assignments of the points in mask to the
                // charged factors seen so far
                let mut dp = vec![Series::zero(n); full + 1];
                dp[0] = Series::one(n);
                for &k in ks {
                    let mut next = vec![Series::zero(n); full + 1];
                    for mask in 0..=full {
                        let mut sub = mask;
                        loop {
                            let rest = mask ^ sub;
                            if !dp[rest].is_zero() {
                                next[mask] = next[mask].add(&dp[rest].mul(&block(k, sub)?));
                            }
                            if sub == 0 {
                                break;
                            }
                            sub = (sub - 1) & mask;
                        }
                    }
                    dp = next;
                }
                let mut out = Series::zero(n);
                for mask in 0..=full {
                    out = out.add(&dp[mask].mul(&neutral[full ^ mask]));
                }
                Ok(out)
            };
            weyl_sum(inst.weyl(), &inst.rho(), lambda, n, |ks| sum_over(ks, &mut block))
        }
    }
}

/// The same function read off the tensor-product trace oracle by
/// dominant-monomial extraction.
pub fn duality_extract(inst: &DualityInstance, lambda: &[i64], points: &[Param], n: HalfInt) -> Result<Series> {
    inst.check_label(lambda)?;
    check_sizes(inst, points)?;
    let trace = duality_trace(&inst.factors(), inst.op(), points, n)?;
    weyl_sum(inst.weyl(), &inst.rho(), lambda, n, |ks| {
        let exps: Vec<(u32, i64)> = ks.iter().enumerate().map(|(i, &k)| (i as u32 + 1, k)).collect();
        Ok(trace.coeff_zs(&exps))
    })
}

/// The d∞ reduction as printed, with 𝔇^{(k)}_{−1} = X_k − X_{k+2} as the
/// block in the Weyl sum over W(C_l) or W(B_l).
pub fn duality_reduce_d_printed(
    inst: &DualityInstance,
    lambda: &[i64],
    points: &[Param],
    n: HalfInt,
    source: BaseSource,
) -> Result<Series> {
    if !matches!(inst.family, Family::DMinus | Family::DMinusHalf) {
        return Err(Error::InvalidInput(format!("{inst} is not a d∞ duality")));
    }
    inst.check_label(lambda)?;
    check_sizes(inst, points)?;
    let sum = weyl_sum(inst.weyl(), &inst.rho(), lambda, n, |ks| {
        let mut out = Series::one(n);
        for &k in ks {
            let d = inst.base(k, points, n, source)?.sub(&inst.base(k + 2, points, n, source)?);
            out = out.mul(&d);
        }
        Ok(out)
    })?;
    Ok(inst.neutral_block(points, n, source)?.mul(&sum))
}
