use std::fmt;

use crate::qseries::HalfInt;

/// A partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

/// A strict partition: strictly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

/// A weakly decreasing l-tuple of integers (entries may be negative).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenPartition {
    entries: Vec<i64>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Length {
    Any,
    Exactly(usize),
    AtMost(usize),
}

impl Length {
    fn admits(self, l: usize) -> bool {
        match self {
            Length::Any => true,
            Length::Exactly(k) => l == k,
            Length::AtMost(k) => l <= k,
        }
    }

    fn cap(self) -> usize {
        match self {
            Length::Any => usize::MAX,
            Length::Exactly(k) | Length::AtMost(k) => k,
        }
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity of the part p.
    pub fn multiplicity(&self, p: u32) -> usize {
        self.parts.iter().filter(|&&x| x == p).count()
    }

    /// L₀-energy of the corresponding bosonic or fermionic state:
    /// Σ (λ_i − 1/2).
    pub fn energy(&self) -> HalfInt {
        HalfInt::from_twice(self.parts.iter().map(|&p| 2 * p as i64 - 1).sum())
    }
}

impl StrictPartition {
    /// Returns `None` if the parts are not distinct and positive.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        if parts.iter().any(|&p| p == 0) || parts.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(StrictPartition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn energy(&self) -> HalfInt {
        HalfInt::from_twice(self.parts.iter().map(|&p| 2 * p as i64 - 1).sum())
    }

    pub fn as_partition(&self) -> Partition {
        Partition { parts: self.parts.clone() }
    }
}

impl GenPartition {
    /// Returns `None` unless the entries are weakly decreasing.
    pub fn new(entries: Vec<i64>) -> Option<Self> {
        entries.windows(2).all(|w| w[0] >= w[1]).then_some(GenPartition { entries })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn depth(&self) -> usize {
        self.entries.len()
    }

    /// True if all entries are non-negative (an ordinary partition padded with
    /// zeros).
    pub fn is_partition(&self) -> bool {
        self.entries.iter().all(|&e| e >= 0)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", p.join(","))
    }
}

impl fmt::Display for GenPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.entries.iter().map(i64::to_string).collect();
        write!(f, "({})", p.join(","))
    }
}

fn extend(
    prefix: &mut Vec<u32>,
    max_part: u32,
    budget: u64,
    strict: bool,
    cost: &dyn Fn(u32) -> u64,
    len: Length,
    out: &mut Vec<Vec<u32>>,
) {
    if len.admits(prefix.len()) {
        out.push(prefix.clone());
    }
    if prefix.len() >= len.cap() {
        return;
    }
    for p in 1..=max_part {
        let c = cost(p);
        if c > budget {
            break;
        }
        prefix.push(p);
        let next_max = if strict { p - 1 } else { p };
        extend(prefix, next_max, budget - c, strict, cost, len, out);
        prefix.pop();
    }
}

fn enumerate(budget: u64, strict: bool, cost: &dyn Fn(u32) -> u64, len: Length) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let max_part = (1..).take_while(|&p| cost(p) <= budget).last().unwrap_or(0);
    extend(&mut Vec::new(), max_part, budget, strict, cost, len, &mut out);
    out
}

fn by_weight(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    v.sort_by_key(|p| (p.iter().map(|&x| x as u64).sum::<u64>(), std::cmp::Reverse(p.clone())));
    v
}

/// All partitions of weight at most `max_weight` satisfying the length
/// constraint, in graded order (by weight, then reverse lexicographic).
pub fn partitions(max_weight: u64, len: Length) -> Vec<Partition> {
    by_weight(enumerate(max_weight, false, &|p| p as u64, len))
        .into_iter()
        .map(|parts| Partition { parts })
        .collect()
}

/// Partitions of exactly `n`.
pub fn partitions_of(n: u64) -> Vec<Partition> {
    partitions(n, Length::Any).into_iter().filter(|p| p.weight() == n).collect()
}

/// All strict partitions of weight at most `max_weight`.
pub fn strict_partitions(max_weight: u64, len: Length) -> Vec<StrictPartition> {
    by_weight(enumerate(max_weight, true, &|p| p as u64, len))
        .into_iter()
        .map(|parts| StrictPartition { parts })
        .collect()
}

/// All partitions with energy Σ(λ_i − 1/2) at most `max_energy`, sorted by
/// energy.
pub fn partitions_by_energy(max_energy: HalfInt) -> Vec<Partition> {
    if max_energy < HalfInt::ZERO {
        return Vec::new();
    }
    let mut v: Vec<Partition> = enumerate(max_energy.twice() as u64, false, &|p| 2 * p as u64 - 1, Length::Any)
        .into_iter()
        .map(|parts| Partition { parts })
        .collect();
    v.sort_by_key(|p| (p.energy(), std::cmp::Reverse(p.parts.clone())));
    v
}

/// All strict partitions with energy at most `max_energy`, sorted by energy.
pub fn strict_partitions_by_energy(max_energy: HalfInt) -> Vec<StrictPartition> {
    if max_energy < HalfInt::ZERO {
        return Vec::new();
    }
    let mut v: Vec<StrictPartition> = enumerate(max_energy.twice() as u64, true, &|p| 2 * p as u64 - 1, Length::Any)
        .into_iter()
        .map(|parts| StrictPartition { parts })
        .collect();
    v.sort_by_key(|p| (p.energy(), std::cmp::Reverse(p.parts.clone())));
    v
}

/// All generalized partitions of depth l with entries in [−bound, bound].
pub fn gen_partitions(l: usize, bound: i64) -> Vec<GenPartition> {
    fn rec(prefix: &mut Vec<i64>, l: usize, hi: i64, bound: i64, out: &mut Vec<GenPartition>) {
        if prefix.len() == l {
            out.push(GenPartition { entries: prefix.clone() });
            return;
        }
        for e in (-bound..=hi).rev() {
            prefix.push(e);
            rec(prefix, l, e, bound, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), l, bound, bound, &mut out);
    out
}
