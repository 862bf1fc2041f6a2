//! Brute-force trace oracles over the bosonic and fermionic Fock spaces.
//!
//! Every operator that enters a correlation function acts diagonally on the
//! monomial basis, so a graded trace is a sum over basis states of
//! q^{energy}·(charge weight)·Π eigenvalues. The enumeration covers every
//! state of energy at most N because each excitation costs at least q^{1/2}.

mod duality;
mod engine;

pub use duality::{duality_trace, duality_trace_direct};
pub use engine::{factor_trace, Weighting};

use std::fmt;

use crate::error::{Error, Result};
use crate::qseries::{HalfInt, Param, Series};

/// The four kinds of free-field Fock space.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FockKind {
    /// A pair of bosonic ghosts γ^±, central charge −1; basis (λ, μ).
    BosonPair,
    /// A neutral boson χ, central charge −1/2; basis λ.
    BosonNeutral,
    /// A pair of fermions ψ^±, central charge +1; basis (a, b) strict.
    FermionPair,
    /// A neutral fermion φ, central charge +1/2; basis strict λ.
    FermionNeutral,
}

impl FockKind {
    pub fn central_charge(self) -> HalfInt {
        match self {
            FockKind::BosonPair => HalfInt::int(-1),
            FockKind::BosonNeutral => HalfInt::from_twice(-1),
            FockKind::FermionPair => HalfInt::int(1),
            FockKind::FermionNeutral => HalfInt::HALF,
        }
    }

    pub fn is_charged(self) -> bool {
        matches!(self, FockKind::BosonPair | FockKind::FermionPair)
    }

    pub fn is_fermionic(self) -> bool {
        matches!(self, FockKind::FermionPair | FockKind::FermionNeutral)
    }

    pub fn slot_count(self) -> usize {
        if self.is_charged() {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for FockKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FockKind::BosonPair => "boson_pair",
            FockKind::BosonNeutral => "boson_neutral",
            FockKind::FermionPair => "fermion_pair",
            FockKind::FermionNeutral => "fermion_neutral",
        };
        write!(f, "{s}")
    }
}

/// The diagonal field operators A(t), C(t), D(t).
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum OpTag {
    A,
    C,
    D,
}

/// How one slot of a factor contributes to an eigenvalue: a part p adds
/// Σ c·t^{e(p−1/2)} over the listed (c, e); each part shifts the charge by
/// `charge`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlotRule {
    pub terms: Vec<(i64, i64)>,
    pub charge: i64,
}

/// Eigenvalue rule of an operator on a factor: slot contributions plus
/// `central`·β(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorRule {
    pub slots: Vec<SlotRule>,
    pub strict: bool,
    pub central: i64,
}

/// The eigenvalue rule of `op` on `kind`.
///
/// On charged factors C and D both act as A(t) − A(t^{−1}). Charge is
/// ℓ(μ) − ℓ(λ) on a bosonic pair and #a − #b on a fermionic pair.
pub fn rule(kind: FockKind, op: OpTag) -> Result<FactorRule> {
    let sym = vec![(1, 1), (-1, -1)];
    let r = match (kind, op) {
        (FockKind::BosonPair, OpTag::A) => FactorRule {
            slots: vec![SlotRule { terms: vec![(1, 1)], charge: -1 }, SlotRule { terms: vec![(-1, -1)], charge: 1 }],
            strict: false,
            central: 1,
        },
        (FockKind::BosonPair, OpTag::C | OpTag::D) => FactorRule {
            slots: vec![SlotRule { terms: sym.clone(), charge: -1 }, SlotRule { terms: sym, charge: 1 }],
            strict: false,
            central: 2,
        },
        (FockKind::FermionPair, OpTag::A) => FactorRule {
            slots: vec![SlotRule { terms: vec![(1, 1)], charge: 1 }, SlotRule { terms: vec![(-1, -1)], charge: -1 }],
            strict: true,
            central: -1,
        },
        (FockKind::FermionPair, OpTag::C | OpTag::D) => FactorRule {
            slots: vec![SlotRule { terms: sym.clone(), charge: 1 }, SlotRule { terms: sym, charge: -1 }],
            strict: true,
            central: -2,
        },
        (FockKind::BosonNeutral, OpTag::C) => FactorRule {
            slots: vec![SlotRule { terms: sym, charge: 0 }],
            strict: false,
            central: 1,
        },
        (FockKind::FermionNeutral, OpTag::D) => FactorRule {
            slots: vec![SlotRule { terms: sym, charge: 0 }],
            strict: true,
            central: -1,
        },
        _ => {
            return Err(Error::InvalidInput(format!("operator {op:?} does not act on a {kind} factor")));
        }
    };
    Ok(r)
}

/// A basis state of one factor: one part list per slot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisState {
    pub slots: Vec<Vec<u32>>,
}

impl BasisState {
    pub fn energy(&self) -> HalfInt {
        HalfInt::from_twice(self.slots.iter().flatten().map(|&p| 2 * p as i64 - 1).sum())
    }

    pub fn charge(&self, rule: &FactorRule) -> i64 {
        self.slots.iter().zip(&rule.slots).map(|(s, r)| s.len() as i64 * r.charge).sum()
    }
}

/// Diagonal eigenvalue of op(t) on a basis state, computed term by term with
/// series arithmetic.
pub fn eigenvalue(kind: FockKind, state: &BasisState, op: OpTag, t: &Param, n: HalfInt) -> Result<Series> {
    let r = rule(kind, op)?;
    if state.slots.len() != r.slots.len() {
        return Err(Error::InvalidInput(format!("a {kind} state has {} slots", r.slots.len())));
    }
    let mut ev = t.c_term(n)?.scale(&crate::qseries::rat(r.central, 1));
    for (parts, sr) in state.slots.iter().zip(&r.slots) {
        for &p in parts {
            let mode = HalfInt::from_twice(2 * p as i64 - 1);
            for &(c, e) in &sr.terms {
                ev = ev.add(&t.power(mode * e, n)?.scale(&crate::qseries::rat(c, 1)));
            }
        }
    }
    Ok(ev)
}

/// 𝔄^{(m)}: trace of q^{L₀}A(t₁)⋯A(t_n) over the charge-m sector of a bosonic
/// ghost pair.
pub fn a_sector_trace(m: i64, points: &[Param], n: HalfInt) -> Result<Series> {
    factor_trace(FockKind::BosonPair, OpTag::A, points, &Weighting::Sector(m), n)
}

/// tr q^{L₀} x^{ℓ(λ)} y^{ℓ(μ)} A(t₁)⋯A(t_n) over the full bosonic ghost space.
pub fn a_generalized_trace(x: &Param, y: &Param, points: &[Param], n: HalfInt) -> Result<Series> {
    factor_trace(FockKind::BosonPair, OpTag::A, points, &Weighting::Slots(vec![x.clone(), y.clone()]), n)
}

/// Trace over a neutral factor: C(t) on the neutral boson, D(t) on the
/// neutral fermion.
pub fn neutral_trace(kind: FockKind, op: OpTag, points: &[Param], n: HalfInt) -> Result<Series> {
    if kind.is_charged() {
        return Err(Error::InvalidInput(format!("{kind} is not a neutral factor")));
    }
    factor_trace(kind, op, points, &Weighting::None, n)
}

/// tr q^{L₀} z^{charge} A(t₁)⋯A(t_n) over one pair of charged fermions.
pub fn f1_charged_trace(z: &Param, points: &[Param], n: HalfInt) -> Result<Series> {
    factor_trace(FockKind::FermionPair, OpTag::A, points, &Weighting::Slots(vec![z.clone(), z.inv()]), n)
}

/// Trace of op over the charge-m sector of a charged factor.
pub fn sector_trace(kind: FockKind, op: OpTag, m: i64, points: &[Param], n: HalfInt) -> Result<Series> {
    factor_trace(kind, op, points, &Weighting::Sector(m), n)
}

#[cfg(test)]
mod tests;
