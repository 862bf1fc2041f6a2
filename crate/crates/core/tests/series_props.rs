//! Ring and serialization invariants of truncated series.

use proptest::prelude::*;
use qtrace_core::qseries::json::{from_csv, from_json_str, to_csv, to_json_string};
use qtrace_core::qseries::rat;
use qtrace_core::{HalfInt, Monomial, Series};

const N: i64 = 6;

fn trunc() -> HalfInt {
    HalfInt::int(N)
}

/// Terms at half-integer q-orders 0..=N with one charge variable.
fn series(with_z: bool) -> impl Strategy<Value = Series> {
    let zr = if with_z { -2i64..=2 } else { 0i64..=0 };
    prop::collection::vec((0i64..=2 * N, zr, -5i64..=5, 1i64..=4), 0..8).prop_map(|terms| {
        Series::from_terms(
            terms.into_iter().filter(|t| t.2 != 0).map(|(q, z, a, b)| {
                (Monomial::new(HalfInt::from_twice(q), [(1, z)]), rat(a, b))
            }),
            trunc(),
        )
    })
}

/// Series with a nonzero constant term and no charge variables.
fn unit_series() -> impl Strategy<Value = Series> {
    (series(false), 1i64..=5, prop::bool::ANY).prop_map(|(s, c, neg)| {
        let c = if neg { -c } else { c };
        let s = s.truncate(trunc());
        let constant = s.coeff_q(HalfInt::ZERO);
        s.add(&Series::constant(rat(c, 1) - constant, trunc()))
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in series(true), b in series(true), c in series(true)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn multiplication_is_a_ring_product(a in series(true), b in series(true), c in series(true)) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&Series::one(trunc())), a.clone());
    }

    #[test]
    fn invert_round_trips(u in unit_series(), a in series(false)) {
        let inv = u.invert().unwrap();
        prop_assert_eq!(u.mul(&inv), Series::one(trunc()));
        prop_assert_eq!(a.mul(&u).div(&u).unwrap(), a.clone());
    }

    #[test]
    fn truncation_commutes_with_operations(a in series(true), b in series(true), m in 0i64..=2 * N) {
        let m = HalfInt::from_twice(m);
        // nonnegative valuations: the truncated product is known at least to m
        let low = a.truncate(m).mul(&b.truncate(m));
        prop_assert!(low.truncation() >= m);
        prop_assert_eq!(a.mul(&b).truncate(m), low.truncate(m));
        prop_assert_eq!(a.add(&b).truncate(m), a.truncate(m).add(&b.truncate(m)));
        prop_assert!(a.agrees_to(&a.truncate(m), m));
    }

    #[test]
    fn powers_agree_with_products(u in unit_series(), k in 0u32..4) {
        let mut p = Series::one(trunc());
        for _ in 0..k {
            p = p.mul(&u);
        }
        prop_assert_eq!(u.pow(k), p.clone());
        prop_assert_eq!(u.powi(-(k as i64)).unwrap().mul(&p), Series::one(trunc()));
    }

    #[test]
    fn text_encodings_round_trip(a in series(true)) {
        prop_assert_eq!(from_json_str(&to_json_string(&a)).unwrap(), a.clone());
        prop_assert_eq!(from_csv(&to_csv(&a)).unwrap(), a.clone());
        prop_assert_eq!(to_json_string(&a), to_json_string(&from_json_str(&to_json_string(&a)).unwrap()));
    }
}
