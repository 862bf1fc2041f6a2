//! The default check set. Every check computes its two sides by independent
//! routes: a closed formula against a trace oracle or an enumeration, or two
//! different closed expressions.

use num_traits::One;

use super::CheckSpec;
use crate::closedform::cinf::{c_one_point_half, c_sector_minus1, d_sector_minus1, BaseSource};
use crate::closedform::duality::{
    duality_extract, duality_reduce, duality_reduce_d_printed, DualityInstance, Family, ReductionMode,
};
use crate::closedform::identities::{
    euler_sum, identity_ff_first, identity_ff_product, identity_ff_second, lemma222_i_closed, lemma222_i_enum,
    lemma222_ii_closed, lemma222_ii_enum, prop111_lhs, prop111_rhs, q_binomial_sum, Summation,
};
use crate::closedform::level1::level1_sector;
use crate::closedform::level_minus1::{
    a_sector_closed, claim555_closed, claim555_enum, generalized_one_point, generalized_two_point, one_point_minus1,
    qdim_minus1, CrossTerm,
};
use crate::closedform::qdiff::{qdiff_sides, QDiffEquation};
use crate::closedform::qdim::{c_positive_product, c_positive_weyl, gl_character_identity_residual, qdim_closed, qdim_d_printed};
use crate::combinat::{c_lambda, char_numerator, weyl_denominator, Algebra, CharKind, LaurentPoly, RhoVector, WeylType};
use crate::error::{Error, Result};
use crate::fock::{a_generalized_trace, a_sector_trace, neutral_trace, sector_trace, FockKind, OpTag};
use crate::qseries::{euler, pochhammer_inf, rat, theta_jet, HalfInt, Monomial, Param, Rational, Series};

/// Every result the registry must exercise at least once.
pub const TOPICS: &[&str] = &[
    "euler-expansions",
    "pochhammer-sum",
    "identity-ff",
    "marked-partitions",
    "a-one-point",
    "a-generalized-one-point",
    "omega-sum",
    "a-generalized-two-point",
    "a-sector-residue",
    "a-duality",
    "a-qdiff",
    "gl-character-identity",
    "a-qdim-minus1",
    "a-qdim",
    "c-neutral-one-point",
    "c-qdiff",
    "theta-triple-product",
    "level1-sector",
    "c-positive-duality",
    "c-positive-qdim",
    "c-sector-minus1",
    "c-minus-duality",
    "c-minus-half-duality",
    "character-numerators",
    "c-qdim",
    "d-sector-minus1",
    "d-minus-duality",
    "d-minus-half-duality",
    "neutral-fermion",
    "d-qdim",
];

/// Default sample points, as square roots s of t = s².
pub const SAMPLE: [(i64, i64); 3] = [(2, 3), (3, 5), (5, 7)];

fn h(v: i64) -> HalfInt {
    HalfInt::int(v)
}

fn pt((a, b): (i64, i64)) -> Param {
    Param::frac(a, b)
}

fn sname((a, b): (i64, i64)) -> String {
    if b == 1 {
        a.to_string()
    } else {
        format!("{a}/{b}")
    }
}

fn lname(lambda: &[i64]) -> String {
    lambda.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn pair(a: Result<Series>, b: Result<Series>) -> Result<(Series, Series)> {
    Ok((a?, b?))
}

fn beta(s: (i64, i64)) -> Rational {
    let s = rat(s.0, s.1);
    &s / (Rational::one() - &s * &s)
}

pub fn registry() -> Vec<CheckSpec> {
    let mut v = Vec::new();
    q_identities(&mut v);
    level_minus1(&mut v);
    level_one(&mut v);
    qdiff(&mut v);
    qdims(&mut v);
    sectors(&mut v);
    characters(&mut v);
    dualities(&mut v);
    v.sort_by(|a, b| a.name.cmp(&b.name));
    v
}

fn q_identities(v: &mut Vec<CheckSpec>) {
    for (s, name) in [((1, 1), "1"), ((2, 3), "2/3")] {
        let z = Param::new(rat(s.0, s.1), HalfInt::ONE);
        v.push(CheckSpec::new(format!("euler-left-s={name}-d=1"), "euler-expansions", format!("z = {z}"), h(20), move |n| {
            let zs = z.value(n);
            pair(euler_sum(&zs, n), pochhammer_inf(&zs, n))
        }));
    }
    v.push(CheckSpec::new("euler-right-s=2/3-z=q", "euler-expansions", "a = (2/3)^2, z = q", h(20), |n| {
        let a = Param::frac(2, 3).value(n);
        let z = Series::q_pow(HalfInt::ONE, n);
        let rhs = pochhammer_inf(&a.mul(&z), n).and_then(|p| p.div(&pochhammer_inf(&z, n)?));
        pair(q_binomial_sum(&a, &z, n), rhs)
    }));

    for k in [0usize, 1, 3] {
        for s in [(2, 3), (5, 7)] {
            let t = pt(s);
            v.push(CheckSpec::new(
                format!("pochhammer-sum-k={k}-s={}", sname(s)),
                "pochhammer-sum",
                format!("k = {k}, t = {t}"),
                h(20),
                move |n| pair(prop111_lhs(k, &t, n), prop111_rhs(k, &t, n)),
            ));
        }
    }

    for (s, d) in [((2, 3), HalfInt::HALF), ((3, 5), HalfInt::ONE)] {
        let u = move |n: HalfInt| Series::monomial(rat(s.0, s.1), Monomial::q(d), n);
        let tag = format!("s={}-d={d}", sname(s));
        let params = format!("u = ({})*q^({d})", sname(s));
        v.push(CheckSpec::new(format!("identity-ff-first-{tag}"), "identity-ff", params.clone(), h(20), move |n| {
            pair(identity_ff_first(&u(n), n, Summation::Closed), identity_ff_product(&u(n), n))
        }));
        v.push(CheckSpec::new(format!("identity-ff-second-{tag}"), "identity-ff", params.clone(), h(20), move |n| {
            pair(identity_ff_second(&u(n), n, Summation::Closed), identity_ff_product(&u(n), n))
        }));
        // the termwise expansion has no formal meaning once u has q-order 1
        v.push(
            CheckSpec::new(format!("identity-ff-termwise-{tag}"), "identity-ff", params, h(20), move |n| {
                pair(identity_ff_second(&u(n), n, Summation::Termwise), identity_ff_product(&u(n), n))
            })
            .informational(),
        );
    }

    let t = rat(4, 9);
    for l in 1..=5usize {
        v.push(CheckSpec::new(format!("marked-partitions-i-l={l}"), "marked-partitions", format!("l = {l}"), h(15), move |n| {
            Ok((lemma222_i_enum(l, n), lemma222_i_closed(l, n)?))
        }));
        for i in 1..=l {
            let t = t.clone();
            v.push(CheckSpec::new(
                format!("marked-partitions-ii-l={l}-i={i}"),
                "marked-partitions",
                format!("l = {l}, i = {i}, t = {t}"),
                h(15),
                move |n| pair(lemma222_ii_enum(l, i, &t, n), lemma222_ii_closed(l, i, &t, n)),
            ));
        }
    }
}

fn level_minus1(v: &mut Vec<CheckSpec>) {
    for s in SAMPLE {
        let t = pt(s);
        let t2 = t.clone();
        v.push(CheckSpec::new(format!("a-one-point-s={}", sname(s)), "a-one-point", format!("t = {t}"), h(12), move |n| {
            pair(one_point_minus1(&t, n), a_sector_trace(0, &[t.clone()], n))
        }));
        v.push(CheckSpec::new(
            format!("a-one-point-leading-s={}", sname(s)),
            "a-one-point",
            format!("t = {t2}; q^0 and q^1 against beta and beta - 1/beta"),
            h(1),
            move |n| {
                let b = beta(s);
                let want = Series::from_terms(
                    [(Monomial::one(), b.clone()), (Monomial::q(HalfInt::ONE), &b - b.recip())],
                    n.min(HalfInt::ONE),
                );
                Ok((one_point_minus1(&t2, n)?.truncate(n.min(HalfInt::ONE)), want))
            },
        ));
    }

    let (x, y) = (Param::frac(2, 5), Param::frac(3, 7));
    for s in [(2, 3), (3, 5)] {
        let (x, y, t) = (x.clone(), y.clone(), pt(s));
        v.push(CheckSpec::new(
            format!("a-generalized-one-point-s={}", sname(s)),
            "a-generalized-one-point",
            format!("x = {x}, y = {y}, t = {t}"),
            h(10),
            move |n| pair(generalized_one_point(&x, &y, &t, n), a_generalized_trace(&x, &y, &[t.clone()], n)),
        ));
    }
    for (cross, tag) in [(CrossTerm::Paired, "paired"), (CrossTerm::Printed, "printed")] {
        let (x, y) = (x.clone(), y.clone());
        let (t1, t2) = (Param::frac(2, 3), Param::frac(3, 5));
        let spec = CheckSpec::new(
            format!("a-generalized-two-point-{tag}"),
            "a-generalized-two-point",
            format!("x = {x}, y = {y}, t = {t1}, {t2}"),
            h(8),
            move |n| {
                pair(
                    generalized_two_point(&x, &y, &t1, &t2, cross, n),
                    a_generalized_trace(&x, &y, &[t1.clone(), t2.clone()], n),
                )
            },
        );
        v.push(if cross == CrossTerm::Printed { spec.informational() } else { spec });
    }
    for (xs, s) in [((2, 5), (2, 3)), ((3, 7), (3, 5))] {
        let (x, t) = (pt(xs), pt(s));
        v.push(CheckSpec::new(
            format!("omega-sum-x={}-s={}", sname(xs), sname(s)),
            "omega-sum",
            format!("x = {x}, t = {t}"),
            h(10),
            move |n| pair(claim555_enum(&x, &t, n), claim555_closed(&x, &t, n)),
        ));
    }
    for np in [1usize, 2] {
        for k in [-1i64, 0, 2] {
            let pts: Vec<Param> = [(2, 3), (3, 5)][..np].iter().map(|&s| pt(s)).collect();
            v.push(CheckSpec::new(
                format!("a-sector-residue-n={np}-k={k}"),
                "a-sector-residue",
                format!("charge {k}, points {}", pts.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")),
                h(8),
                move |n| {
                    let closed = a_sector_closed(k, &pts, n)?
                        .ok_or_else(|| Error::InvalidInput("no closed sector formula".into()))?;
                    Ok((closed, a_sector_trace(k, &pts, n)?))
                },
            ));
        }
    }
    for s in SAMPLE {
        let t = pt(s);
        v.push(CheckSpec::new(
            format!("c-neutral-one-point-s={}", sname(s)),
            "c-neutral-one-point",
            format!("t = {t}"),
            h(10),
            move |n| pair(c_one_point_half(&t, n), neutral_trace(FockKind::BosonNeutral, OpTag::C, &[t.clone()], n)),
        ));
    }
}

fn level_one(v: &mut Vec<CheckSpec>) {
    v.push(CheckSpec::new("theta-triple-product", "theta-triple-product", "t = 1", h(20), |n| {
        let j = theta_jet(&Param::frac(1, 1), 1, n)?;
        let e = euler(n);
        let lhs = j.derivative(1).mul(&e.mul(&e).mul(&e));
        let mut rhs = Series::zero(n);
        let mut m = 0i64;
        while h(m * (m + 1) / 2) <= n {
            let sign = if m % 2 == 0 { 1 } else { -1 };
            rhs.add_term(Monomial::q(h(m * (m + 1) / 2)), rat(sign * (2 * m + 1), 1));
            m += 1;
        }
        Ok((lhs, rhs))
    }));
    for np in [1usize, 2] {
        for k in [-1i64, 0, 2] {
            let pts: Vec<Param> = [(2, 3), (3, 5)][..np].iter().map(|&s| pt(s)).collect();
            v.push(CheckSpec::new(
                format!("level1-sector-n={np}-k={k}"),
                "level1-sector",
                format!("charge {k}"),
                h(8),
                move |n| pair(level1_sector(k, &pts, n), sector_trace(FockKind::FermionPair, OpTag::A, k, &pts, n)),
            ));
        }
    }
}

fn qdiff(v: &mut Vec<CheckSpec>) {
    let pts: Vec<Param> = SAMPLE.iter().map(|&s| pt(s)).collect();
    for eq in QDiffEquation::ALL {
        for np in 1..=3usize {
            let p = pts[..np].to_vec();
            let topic = if eq == QDiffEquation::C { "c-qdiff" } else { "a-qdiff" };
            let spec = CheckSpec::new(format!("qdiff-{}-n={np}", eq.slug()), topic, format!("{np} points"), h(10), move |n| {
                qdiff_sides(eq, &p, n)
            });
            v.push(if eq == QDiffEquation::APrinted { spec.informational() } else { spec });
        }
    }
}

fn extract(family: Family, l: usize, lambda: &[i64], n: HalfInt) -> Result<Series> {
    duality_extract(&DualityInstance::new(family, l)?, lambda, &[], n)
}

fn qdims(v: &mut Vec<CheckSpec>) {
    for k in [0i64, 1, -2, 5] {
        v.push(CheckSpec::new(format!("qdim-a-minus1-k={k}"), "a-qdim-minus1", format!("charge {k}"), h(20), move |n| {
            pair(qdim_minus1(k, n), a_sector_trace(k, &[], n))
        }));
    }
    v.push(CheckSpec::new("qdim-a-minus1-leading", "a-qdim-minus1", "first four coefficients 1, 1, 3, 6", h(3), |n| {
        let want = Series::from_terms((0..4).map(|i| (Monomial::q(h(i)), rat([1, 1, 3, 6][i as usize], 1))), n.min(h(3)));
        Ok((qdim_minus1(0, n)?.truncate(n.min(h(3))), want))
    }));
    for l in [1usize, 2] {
        v.push(CheckSpec::new(
            format!("gl-character-identity-l={l}"),
            "gl-character-identity",
            format!("rank {l}, labels with entries up to 12, z-exponents up to 10"),
            h(10),
            move |n| {
                let r = gl_character_identity_residual(l, 12, n)?;
                let kept = r.terms().iter().filter(|(m, _)| m.z().iter().all(|&(_, e)| e.abs() <= 10));
                Ok((Series::from_terms(kept.map(|(m, c)| (m.clone(), c.clone())), n), Series::zero(n)))
            },
        ));
    }

    // (algebra, level, family, rank, labels, topic)
    let grid: Vec<(Algebra, HalfInt, Family, usize, Vec<Vec<i64>>, &'static str)> = vec![
        (Algebra::A, h(-2), Family::AMinus, 2, vec![vec![0, 0], vec![1, -1], vec![2, -1], vec![0, -2]], "a-qdim"),
        (Algebra::A, h(-3), Family::AMinus, 3, vec![vec![0, 0, 0], vec![1, 0, -1], vec![2, 1, -1]], "a-qdim"),
        (Algebra::C, HalfInt::from_twice(3), Family::CPlusHalf, 2, vec![vec![0, 0], vec![1, 0], vec![2, 1]], "c-positive-qdim"),
        (Algebra::C, h(-1), Family::CMinus, 1, vec![vec![0], vec![1], vec![2]], "c-qdim"),
        (Algebra::C, h(-2), Family::CMinus, 2, vec![vec![0, 0], vec![1, 0], vec![1, 1]], "c-qdim"),
        (Algebra::C, HalfInt::from_twice(-3), Family::CMinusHalf, 1, vec![vec![0], vec![1]], "c-qdim"),
        (Algebra::C, HalfInt::from_twice(-5), Family::CMinusHalf, 2, vec![vec![0, 0], vec![1, 0], vec![1, 1]], "c-qdim"),
        (Algebra::D, h(-1), Family::DMinus, 1, vec![vec![0], vec![1], vec![2]], "d-qdim"),
        (Algebra::D, h(-2), Family::DMinus, 2, vec![vec![0, 0], vec![1, 0], vec![1, 1]], "d-qdim"),
        (Algebra::D, HalfInt::from_twice(-1), Family::DMinusHalf, 1, vec![vec![0], vec![1]], "d-qdim"),
        (Algebra::D, HalfInt::from_twice(-3), Family::DMinusHalf, 2, vec![vec![0, 0], vec![1, 0], vec![1, 1]], "d-qdim"),
    ];
    for (alg, level, family, l, labels, topic) in grid {
        for lam in labels {
            let lam2 = lam.clone();
            v.push(CheckSpec::new(
                format!("qdim-{alg}-level={level}-lambda={}", lname(&lam)),
                topic,
                format!("{alg}, level {level}, lambda ({})", lname(&lam)),
                h(10),
                move |n| pair(qdim_closed(alg, level, &lam, n), extract(family, l, &lam, n)),
            ));
            if alg == Algebra::D {
                v.push(
                    CheckSpec::new(
                        format!("qdim-d-printed-level={level}-lambda={}", lname(&lam2)),
                        topic,
                        format!("d, level {level}, lambda ({}), blocks X_k - X_(k+2)", lname(&lam2)),
                        h(10),
                        move |n| pair(qdim_d_printed(level, &lam2, n), extract(family, l, &lam2, n)),
                    )
                    .informational(),
                );
            }
        }
    }
    for lam in [vec![0i64, 0], vec![1, 0], vec![2, 1]] {
        v.push(CheckSpec::new(
            format!("qdim-c-level=3/2-forms-lambda={}", lname(&lam)),
            "c-positive-qdim",
            format!("Weyl-sum form against product form, lambda ({})", lname(&lam)),
            h(20),
            move |n| pair(c_positive_weyl(&lam, n), c_positive_product(&lam, n)),
        ));
    }
    v.push(CheckSpec::new("qdim-c-level=-1/2", "c-qdim", "neutral boson", h(10), |n| {
        pair(qdim_closed(Algebra::C, HalfInt::from_twice(-1), &[], n), neutral_trace(FockKind::BosonNeutral, OpTag::C, &[], n))
    }));
    v.push(CheckSpec::new("qdim-d-level=1/2", "neutral-fermion", "neutral fermion", h(10), |n| {
        pair(qdim_closed(Algebra::D, HalfInt::HALF, &[], n), neutral_trace(FockKind::FermionNeutral, OpTag::D, &[], n))
    }));
}

fn sectors(v: &mut Vec<CheckSpec>) {
    for m in [0i64, 1, 3] {
        let t = vec![Param::frac(2, 3)];
        v.push(CheckSpec::new(format!("c-sector-minus1-n=1-m={m}"), "c-sector-minus1", format!("charge {m}"), h(8), move |n| {
            pair(c_sector_minus1(m, &t, n, BaseSource::Closed), sector_trace(FockKind::BosonPair, OpTag::C, m, &t, n))
        }));
        let t = vec![Param::frac(2, 3)];
        v.push(CheckSpec::new(format!("d-sector-minus1-n=1-m={m}"), "d-sector-minus1", format!("charge {m}"), h(8), move |n| {
            let oracle = sector_trace(FockKind::BosonPair, OpTag::D, m, &t, n)?
                .sub(&sector_trace(FockKind::BosonPair, OpTag::D, m + 2, &t, n)?);
            Ok((d_sector_minus1(m, &t, n, BaseSource::Closed)?, oracle))
        }));
    }
    let pts = vec![Param::frac(2, 3), Param::frac(3, 5)];
    v.push(CheckSpec::new("c-sector-minus1-n=2-m=1", "c-sector-minus1", "charge 1, two points", h(6), move |n| {
        pair(c_sector_minus1(1, &pts, n, BaseSource::Closed), sector_trace(FockKind::BosonPair, OpTag::C, 1, &pts, n))
    }));
}

/// A Laurent polynomial with half-integer exponents as a constant series
/// in z-variables carrying the doubled exponents.
fn doubled(p: &LaurentPoly, n: HalfInt) -> Series {
    let terms = p.terms().iter().map(|(exps, &c)| {
        let z = exps.iter().enumerate().map(|(i, e)| (i as u32 + 1, e.twice()));
        (Monomial::new(HalfInt::ZERO, z), Rational::from_integer(c.into()))
    });
    Series::from_terms(terms, n)
}

fn characters(v: &mut Vec<CheckSpec>) {
    for l in 1..=3usize {
        let cases: [(&str, WeylType, RhoVector, CharKind, i64); 4] = [
            ("gl", WeylType::A, RhoVector::a(l), CharKind::Gl, 1),
            ("osp", WeylType::BC, RhoVector::b(l), CharKind::OspB, 1),
            ("sp", WeylType::BC, RhoVector::c(l), CharKind::Sp, 1),
            ("o-even", WeylType::D, RhoVector::a(l), CharKind::OEven, 2),
        ];
        for (tag, ty, rho, kind, mult) in cases {
            v.push(CheckSpec::new(
                format!("character-denominator-{tag}-l={l}"),
                "character-numerators",
                "Weyl denominator against the trivial-character numerator",
                h(0),
                move |n| {
                    let zero = vec![0; l];
                    let den = weyl_denominator(ty, &rho)?.scale(mult);
                    Ok((doubled(&den, n), doubled(&char_numerator(kind, &zero, l)?, n)))
                },
            ));
        }
    }
    for lam in [vec![0i64, 0], vec![1, 0], vec![2, 1], vec![1, 1]] {
        v.push(CheckSpec::new(
            format!("character-o-even-dominant-lambda={}", lname(&lam)),
            "character-numerators",
            "coefficient of the dominant monomial is 2/c_lambda",
            h(0),
            move |n| {
                let p = char_numerator(CharKind::OEven, &lam, lam.len())?;
                let dom: Vec<HalfInt> = lam.iter().enumerate().map(|(i, &x)| h(x + (lam.len() - 1 - i) as i64)).collect();
                let c = Rational::from_integer(p.coeff(&dom).into());
                Ok((Series::constant(c, n), Series::from_int(2 / c_lambda(&lam), n)))
            },
        ));
    }
}

fn duality_topic(f: Family) -> &'static str {
    match f {
        Family::AMinus => "a-duality",
        Family::CPlusHalf => "c-positive-duality",
        Family::CMinus => "c-minus-duality",
        Family::CMinusHalf => "c-minus-half-duality",
        Family::DMinus => "d-minus-duality",
        Family::DMinusHalf => "d-minus-half-duality",
    }
}

/// Labels used for the rank-2 duality grid.
pub fn duality_labels(f: Family) -> [Vec<i64>; 2] {
    if f == Family::AMinus {
        [vec![0, 0], vec![1, -1]]
    } else {
        [vec![0, 0], vec![1, 0]]
    }
}

fn dualities(v: &mut Vec<CheckSpec>) {
    let all_pts = [Param::frac(2, 3), Param::frac(3, 5)];
    for f in Family::ALL {
        let inst = DualityInstance::new(f, 2).expect("rank 2 is supported");
        for np in 0..=2usize {
            for lam in duality_labels(f) {
                let pts = all_pts[..np].to_vec();
                let tag = format!("{}-l=2-n={np}-lambda={}", f.slug(), lname(&lam));
                let params = format!("{inst}, lambda ({}), {np} points", lname(&lam));
                for mode in [ReductionMode::Assignment, ReductionMode::Literal] {
                    let (pts, lam) = (pts.clone(), lam.clone());
                    let word = if mode == ReductionMode::Assignment { "assign" } else { "literal" };
                    let spec = CheckSpec::new(format!("duality-{word}-{tag}"), duality_topic(f), params.clone(), h(8), move |n| {
                        pair(
                            duality_reduce(&inst, &lam, &pts, n, mode, BaseSource::Closed),
                            duality_extract(&inst, &lam, &pts, n),
                        )
                    });
                    v.push(if mode == ReductionMode::Literal { spec.informational() } else { spec });
                }
                if matches!(f, Family::DMinus | Family::DMinusHalf) && np == 1 {
                    let (pts, lam) = (pts.clone(), lam.clone());
                    v.push(
                        CheckSpec::new(format!("duality-d-printed-{tag}"), duality_topic(f), params, h(8), move |n| {
                            pair(
                                duality_reduce_d_printed(&inst, &lam, &pts, n, BaseSource::Closed),
                                duality_extract(&inst, &lam, &pts, n),
                            )
                        })
                        .informational(),
                    );
                }
            }
        }
    }

    // the q^0 case a∞, l = 2, λ = (0,0), one point: 2β by the trace
    let inst = DualityInstance::new(Family::AMinus, 2).expect("rank 2 is supported");
    for mode in [ReductionMode::Assignment, ReductionMode::Literal] {
        let word = if mode == ReductionMode::Assignment { "assign" } else { "literal" };
        let spec = CheckSpec::new(
            format!("duality-{word}-q0-case"),
            "a-duality",
            "a-minus-l(l=2), lambda (0,0), t = (2/3)^2: q^0 coefficient against 2 beta",
            h(0),
            move |n| {
                let r = duality_reduce(&inst, &[0, 0], &[Param::frac(2, 3)], n, mode, BaseSource::Closed)?;
                Ok((r.truncate(HalfInt::ZERO.min(n)), Series::constant(beta((2, 3)) * rat(2, 1), HalfInt::ZERO.min(n))))
            },
        );
        v.push(if mode == ReductionMode::Literal { spec.informational() } else { spec });
    }
    // with one charged factor the assignment sum is the base function itself
    let inst1 = DualityInstance::new(Family::AMinus, 1).expect("rank 1 is supported");
    v.push(CheckSpec::new("duality-assign-a-minus-l-l=1-n=2-lambda=1", "a-duality", "rank one reduces to the sector", h(6), move |n| {
        let pts = [Param::frac(2, 3), Param::frac(3, 5)];
        pair(duality_reduce(&inst1, &[1], &pts, n, ReductionMode::Assignment, BaseSource::Closed), a_sector_trace(1, &pts, n))
    }));
}
