use num_traits::{One, Zero};

use super::{rule, FactorRule, FockKind, OpTag};
use crate::combinat::{partitions_by_energy, strict_partitions_by_energy};
use crate::error::{Error, Result};
use crate::qseries::{pow_rational, HalfInt, Monomial, Param, Rational, Series};

/// Which charge weighting a trace carries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Weighting {
    /// No weighting: sum over every basis state.
    None,
    /// Restrict to basis states of charge m.
    Sector(i64),
    /// Weight each part in slot i by the i-th parameter (for a bosonic pair
    /// x^{ℓ(λ)}y^{ℓ(μ)}, for a fermionic pair z^{#a}z^{−#b}).
    Slots(Vec<Param>),
}

/// A plain point: its eigenvalue on any state is rational.
struct Plain {
    beta: Rational,
    /// contrib[slot][p]: what one part p in the slot adds to the eigenvalue
    contrib: Vec<Vec<Rational>>,
}

/// A point t = q^δ·τ with δ = ±1 and τ rational.
struct Shifted {
    delta: i64,
    s: Rational,
    beta: Series,
    /// h[slot][term][mask]: Σ_{p≥1} c·τ^{e(p−1/2)}·Π_{j∈mask} a_j(p) summed in
    /// closed form
    h: Vec<Vec<Vec<Rational>>>,
}

struct Prepared {
    rule: FactorRule,
    plain: Vec<Plain>,
    shifted: Option<Shifted>,
    slot_weights: Option<Vec<(Rational, Monomial)>>,
}

/// β(x) = x^{1/2}/(1 − x) from the root x^{1/2}.
fn beta_root(root: &Rational) -> Result<Rational> {
    let den = Rational::one() - root * root;
    if den.is_zero() {
        return Err(Error::DegenerateParameter(format!("β has a pole at the point with root {root}")));
    }
    Ok(root / den)
}

fn prepare(kind: FockKind, op: OpTag, points: &[Param], weighting: &Weighting, n: HalfInt) -> Result<Prepared> {
    let rule = rule(kind, op)?;
    let pmax = (n + HalfInt::HALF).floor().max(0) as u32 + 1;
    let mut plain = Vec::new();
    let mut shifted_pts = Vec::new();
    for t in points {
        if !t.z().is_empty() {
            return Err(Error::NonTruncatable(format!(
                "point {t} carries charge variables; use a slot weighting instead"
            )));
        }
        if t.d == HalfInt::ZERO {
            let beta = beta_root(&t.s)?;
            let contrib = rule
                .slots
                .iter()
                .map(|sr| {
                    (0..=pmax)
                        .map(|p| {
                            if p == 0 {
                                return Rational::zero();
                            }
                            sr.terms
                                .iter()
                                .map(|&(c, e)| Rational::from_integer(c.into()) * pow_rational(&t.s, e * (2 * p as i64 - 1)))
                                .sum()
                        })
                        .collect()
                })
                .collect();
            plain.push(Plain { beta, contrib });
        } else if t.d == HalfInt::ONE || t.d == HalfInt::int(-1) {
            shifted_pts.push(t.clone());
        } else {
            return Err(Error::NonTruncatable(format!(
                "point {t}: only q-shifts of 0 or ±1 admit a truncated expansion"
            )));
        }
    }
    if shifted_pts.len() > 1 {
        return Err(Error::InvalidInput("at most one q-shifted point is supported".into()));
    }
    let shifted = match shifted_pts.pop() {
        None => None,
        Some(t) => Some(prepare_shifted(&rule, &t, points, n)?),
    };
    let slot_weights = match weighting {
        Weighting::Slots(ws) => {
            if ws.len() != rule.slots.len() {
                return Err(Error::InvalidInput(format!("a {kind} factor takes {} slot weights", rule.slots.len())));
            }
            let mut out = Vec::new();
            for w in ws {
                if w.d < HalfInt::ZERO {
                    return Err(Error::NonTruncatable(format!("slot weight {w} has negative q-order")));
                }
                out.push(w.power_parts(HalfInt::ONE)?);
            }
            Some(out)
        }
        _ => None,
    };
    Ok(Prepared { rule, plain, shifted, slot_weights })
}

fn prepare_shifted(rule: &FactorRule, t: &Param, points: &[Param], n: HalfInt) -> Result<Shifted> {
    let delta = t.d.to_int().expect("shift is ±1");
    let others: Vec<&Param> = points.iter().filter(|p| p.d == HalfInt::ZERO).collect();
    let k = others.len();
    let mut h = Vec::new();
    for sr in &rule.slots {
        let mut per_term = Vec::new();
        for &(c, e) in &sr.terms {
            if e * delta > 0 {
                per_term.push(Vec::new());
                continue;
            }
            let mut masks = vec![Rational::zero(); 1 << k];
            for (mask, slot) in masks.iter_mut().enumerate() {
                // choose one term of this slot for every point in the mask
                let members: Vec<usize> = (0..k).filter(|j| mask >> j & 1 == 1).collect();
                let nt = sr.terms.len();
                let mut acc = Rational::zero();
                for choice in 0..nt.pow(members.len() as u32) {
                    let mut root = pow_rational(&t.s, e);
                    let mut coef = Rational::from_integer(c.into());
                    let mut ch = choice;
                    for &j in &members {
                        let (cj, ej) = sr.terms[ch % nt];
                        ch /= nt;
                        root *= pow_rational(&others[j].s, ej);
                        coef *= Rational::from_integer(cj.into());
                    }
                    acc += coef * beta_root(&root)?;
                }
                *slot = acc;
            }
            per_term.push(masks);
        }
        h.push(per_term);
    }
    Ok(Shifted { delta, s: t.s.clone(), beta: t.c_term(n)?, h })
}

fn state_lists(kind: FockKind, n: HalfInt) -> Vec<(Vec<u32>, HalfInt)> {
    if kind.is_fermionic() {
        strict_partitions_by_energy(n).into_iter().map(|p| (p.parts().to_vec(), p.energy())).collect()
    } else {
        partitions_by_energy(n).into_iter().map(|p| (p.parts().to_vec(), p.energy())).collect()
    }
}

/// Trace of q^{L₀}·(weighting)·op(t₁)⋯op(t_n) over one Fock factor, exact to
/// q^N.
///
/// Points must be plain rationals, except that one point may carry a q-shift
/// of ±1. For that point the eigenvalue sum over parts is reorganised: terms
/// whose q-power would cancel the part energy are summed over the part in
/// closed form, which is the analytic continuation of the trace.
pub fn factor_trace(kind: FockKind, op: OpTag, points: &[Param], weighting: &Weighting, n: HalfInt) -> Result<Series> {
    let prep = prepare(kind, op, points, weighting, n)?;
    let lists = state_lists(kind, n);
    let mut out = Series::zero(n);
    let nslots = prep.rule.slots.len();
    let mut visit = |slots: &[&[u32]], energy: HalfInt| {
        accumulate(&prep, slots, energy, weighting, &mut out);
    };
    if nslots == 1 {
        for (a, ea) in &lists {
            visit(&[a], *ea);
        }
    } else {
        for (a, ea) in &lists {
            for (b, eb) in &lists {
                if *ea + *eb > n {
                    break;
                }
                visit(&[a, b], *ea + *eb);
            }
        }
    }
    Ok(out)
}

fn accumulate(prep: &Prepared, slots: &[&[u32]], energy: HalfInt, weighting: &Weighting, out: &mut Series) {
    let rule = &prep.rule;
    let charge: i64 = slots.iter().zip(&rule.slots).map(|(s, r)| s.len() as i64 * r.charge).sum();
    let mut wc = Rational::one();
    let mut wm = Monomial::q(energy);
    if let Some(ws) = &prep.slot_weights {
        for (parts, (c, m)) in slots.iter().zip(ws) {
            let k = parts.len() as i64;
            wc *= pow_rational(c, k);
            wm = wm.mul(&m.pow(k));
        }
    }
    let kappa = Rational::from_integer(rule.central.into());
    let evs: Vec<Rational> = prep
        .plain
        .iter()
        .map(|pt| {
            let mut ev = &kappa * &pt.beta;
            for (si, parts) in slots.iter().enumerate() {
                for &p in *parts {
                    ev += &pt.contrib[si][p as usize];
                }
            }
            ev
        })
        .collect();
    let in_sector = |c: i64| match weighting {
        Weighting::Sector(m) => c == *m,
        _ => true,
    };
    let prod: Rational = evs.iter().fold(wc.clone(), |a, b| a * b);
    let Some(sh) = &prep.shifted else {
        if in_sector(charge) {
            out.add_term(wm, prod);
        }
        return;
    };

    // regular part: the central term and the slot terms with positive q-power
    if in_sector(charge) && energy + HalfInt::HALF <= out.truncation() {
        for (m, c) in sh.beta.terms() {
            out.add_term(wm.mul(m), &prod * c * &kappa);
        }
        for (si, parts) in slots.iter().enumerate() {
            for &(c, e) in &rule.slots[si].terms {
                if e * sh.delta < 0 {
                    continue;
                }
                for &p in *parts {
                    let mode = HalfInt::from_twice(2 * p as i64 - 1);
                    let coef = Rational::from_integer(c.into()) * pow_rational(&sh.s, e * mode.twice());
                    out.add_term(wm.mul(&Monomial::q(mode)), &prod * coef);
                }
            }
        }
    }

    // singular part: this state plays the role of the state with one part
    // removed from slot si
    let k = evs.len();
    let full = (1usize << k) - 1;
    let mut sub = vec![Rational::one(); 1 << k];
    for mask in 1..=full {
        let j = mask.trailing_zeros() as usize;
        sub[mask] = &sub[mask & (mask - 1)] * &evs[j];
    }
    for (si, sr) in rule.slots.iter().enumerate() {
        if !in_sector(charge + sr.charge) {
            continue;
        }
        let (mut tc, mut tm) = (wc.clone(), wm.clone());
        if let Some(ws) = &prep.slot_weights {
            tc *= &ws[si].0;
            tm = tm.mul(&ws[si].1);
        }
        let fermionic = rule.strict;
        let mut total = Rational::zero();
        for (ti, &(c, e)) in sr.terms.iter().enumerate() {
            if e * sh.delta > 0 {
                continue;
            }
            let h = &sh.h[si][ti];
            for (mask, hv) in h.iter().enumerate() {
                total += hv * &sub[full ^ mask];
            }
            // correction from parts already present in the slot
            for &p in slots[si] {
                let mut g = Rational::from_integer(c.into()) * pow_rational(&sh.s, e * (2 * p as i64 - 1));
                for (j, ev) in evs.iter().enumerate() {
                    g *= ev + &prep.plain[j].contrib[si][p as usize];
                }
                if fermionic {
                    total -= g;
                } else {
                    total += g;
                }
            }
        }
        out.add_term(tm, tc * total);
    }
}
