use std::collections::HashMap;

use num_traits::One;

use super::engine::{factor_trace, Weighting};
use super::{eigenvalue, rule, BasisState, FockKind, OpTag};
use crate::combinat::{partitions_by_energy, strict_partitions_by_energy};
use crate::error::Result;
use crate::qseries::{HalfInt, Monomial, Param, Rational, Series};

/// Slot weights z_i^{charge} for the charged factor carrying variable `var`.
fn charge_weights(kind: FockKind, op: OpTag, var: u32) -> Result<Vec<Param>> {
    Ok(rule(kind, op)?
        .slots
        .iter()
        .map(|s| Param::point(Rational::one()).with_z(var, s.charge))
        .collect())
}

/// Assigns charge variables 1, 2, … to the charged factors in order.
fn variables(factors: &[FockKind]) -> Vec<Option<u32>> {
    let mut next = 0;
    factors
        .iter()
        .map(|f| {
            f.is_charged().then(|| {
                next += 1;
                next
            })
        })
        .collect()
}

/// tr q^{L₀} Π z_i^{J_i} op(t₁)⋯op(t_n) over a tensor product of Fock
/// factors, where J_i is the charge of the i-th charged factor.
///
/// The total eigenvalue is the sum of the factor eigenvalues, so the trace is
/// a sum over maps from points to factors of products of single-factor
/// traces.
pub fn duality_trace(factors: &[FockKind], op: OpTag, points: &[Param], n: HalfInt) -> Result<Series> {
    let vars = variables(factors);
    let np = points.len();
    let mut cache: HashMap<(usize, usize), Series> = HashMap::new();
    for (fi, &kind) in factors.iter().enumerate() {
        let weighting = match vars[fi] {
            Some(v) => Weighting::Slots(charge_weights(kind, op, v)?),
            None => Weighting::None,
        };
        for mask in 0..1usize << np {
            let pts: Vec<Param> = (0..np).filter(|j| mask >> j & 1 == 1).map(|j| points[j].clone()).collect();
            cache.insert((fi, mask), factor_trace(kind, op, &pts, &weighting, n)?);
        }
    }
    let nf = factors.len();
    let mut out = Series::zero(n);
    for map in 0..nf.pow(np as u32) {
        let mut masks = vec![0usize; nf];
        let mut m = map;
        for j in 0..np {
            masks[m % nf] |= 1 << j;
            m /= nf;
        }
        let mut term = Series::one(n);
        for (fi, &mask) in masks.iter().enumerate() {
            term = term.mul(&cache[&(fi, mask)]);
        }
        out = out.add(&term);
    }
    Ok(out)
}

fn factor_states(kind: FockKind, n: HalfInt) -> Vec<(BasisState, HalfInt)> {
    let lists: Vec<(Vec<u32>, HalfInt)> = if kind.is_fermionic() {
        strict_partitions_by_energy(n).into_iter().map(|p| (p.parts().to_vec(), p.energy())).collect()
    } else {
        partitions_by_energy(n).into_iter().map(|p| (p.parts().to_vec(), p.energy())).collect()
    };
    let mut out = Vec::new();
    if kind.slot_count() == 1 {
        for (a, e) in lists {
            out.push((BasisState { slots: vec![a] }, e));
        }
    } else {
        for (a, ea) in &lists {
            for (b, eb) in &lists {
                if *ea + *eb <= n {
                    out.push((BasisState { slots: vec![a.clone(), b.clone()] }, *ea + *eb));
                }
            }
        }
    }
    out
}

/// The same trace by direct enumeration of tensor-product basis states with
/// series-valued eigenvalues. Exponential in N; meant as a cross-check.
pub fn duality_trace_direct(factors: &[FockKind], op: OpTag, points: &[Param], n: HalfInt) -> Result<Series> {
    let vars = variables(factors);
    let per_factor: Vec<Vec<(BasisState, HalfInt)>> = factors.iter().map(|&k| factor_states(k, n)).collect();
    let mut out = Series::zero(n);
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        fi: usize,
        energy: HalfInt,
        chosen: &mut Vec<usize>,
        ctx: (&[FockKind], OpTag, &[Param], HalfInt, &[Option<u32>], &[Vec<(BasisState, HalfInt)>]),
        out: &mut Series,
    ) -> Result<()> {
        let (factors, op, points, n, vars, per_factor) = ctx;
        if fi == factors.len() {
            let mut z = Vec::new();
            for (k, &si) in chosen.iter().enumerate() {
                if let Some(v) = vars[k] {
                    let r = rule(factors[k], op)?;
                    z.push((v, per_factor[k][si].0.charge(&r)));
                }
            }
            let mut term = Series::monomial(Rational::one(), Monomial::new(energy, z), n);
            for t in points {
                let mut ev = Series::zero(n);
                for (k, &si) in chosen.iter().enumerate() {
                    ev = ev.add(&eigenvalue(factors[k], &per_factor[k][si].0, op, t, n)?);
                }
                term = term.mul(&ev);
            }
            *out = out.add(&term);
            return Ok(());
        }
        for (si, (_, e)) in per_factor[fi].iter().enumerate() {
            if energy + *e > n {
                continue;
            }
            chosen.push(si);
            rec(fi + 1, energy + *e, chosen, ctx, out)?;
            chosen.pop();
        }
        Ok(())
    }
    rec(0, HalfInt::ZERO, &mut chosen, (factors, op, points, n, &vars, &per_factor), &mut out)?;
    Ok(out)
}
