use std::fmt;

use super::HalfInt;

/// Exponents of the charge variables, sorted by variable index, zeros omitted.
pub type ZExps = Vec<(u32, i64)>;

/// A monomial q^a · Π z_i^{k_i}.
///
/// The derived ordering compares the q-exponent first and then the z-exponent
/// list lexicographically, which is the canonical output order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub q: HalfInt,
    z: ZExps,
}

impl Monomial {
    pub fn new(q: HalfInt, z: impl IntoIterator<Item = (u32, i64)>) -> Self {
        let mut m = Monomial { q, z: Vec::new() };
        for (v, e) in z {
            m.z = add_z(&m.z, &[(v, e)]);
        }
        m
    }

    pub fn q(q: HalfInt) -> Self {
        Monomial { q, z: Vec::new() }
    }

    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn z(&self) -> &[(u32, i64)] {
        &self.z
    }

    pub fn z_exp(&self, var: u32) -> i64 {
        self.z
            .binary_search_by_key(&var, |p| p.0)
            .map(|i| self.z[i].1)
            .unwrap_or(0)
    }

    pub fn has_z(&self) -> bool {
        !self.z.is_empty()
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial {
            q: self.q + o.q,
            z: add_z(&self.z, &o.z),
        }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            q: -self.q,
            z: self.z.iter().map(|&(v, e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            q: self.q * k,
            z: self.z.iter().map(|&(v, e)| (v, e * k)).collect(),
        }
    }

    /// The same monomial with variable `var` removed.
    pub fn without(&self, var: u32) -> Monomial {
        Monomial {
            q: self.q,
            z: self.z.iter().copied().filter(|p| p.0 != var).collect(),
        }
    }

    /// z-part only (q-exponent set to zero).
    pub fn z_part(&self) -> Monomial {
        Monomial {
            q: HalfInt::ZERO,
            z: self.z.clone(),
        }
    }
}

fn add_z(a: &[(u32, i64)], b: &[(u32, i64)]) -> ZExps {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let next = match (a.get(i), b.get(j)) {
            (Some(&x), Some(&y)) if x.0 == y.0 => {
                i += 1;
                j += 1;
                (x.0, x.1 + y.1)
            }
            (Some(&x), Some(&y)) if x.0 < y.0 => {
                i += 1;
                x
            }
            (Some(&x), None) => {
                i += 1;
                x
            }
            (_, Some(&y)) => {
                j += 1;
                y
            }
            (None, None) => unreachable!(),
        };
        if next.1 != 0 {
            out.push(next);
        }
    }
    out
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.q != HalfInt::ZERO {
            parts.push(format!("q^({})", self.q));
        }
        for &(v, e) in &self.z {
            parts.push(format!("z{v}^({e})"));
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_exponents_are_dropped() {
        let a = Monomial::new(HalfInt::HALF, [(1, 2), (3, -1)]);
        let b = Monomial::new(HalfInt::ZERO, [(1, -2)]);
        let p = a.mul(&b);
        assert_eq!(p.z(), &[(3, -1)]);
        assert_eq!(p.z_exp(1), 0);
        assert_eq!(a.mul(&a.inv()), Monomial::one());
    }

    #[test]
    fn ordering_is_q_first() {
        let a = Monomial::new(HalfInt::ZERO, [(1, 5)]);
        let b = Monomial::q(HalfInt::HALF);
        assert!(a < b);
        let c = Monomial::new(HalfInt::ZERO, [(1, -1)]);
        assert!(c < a);
    }
}
