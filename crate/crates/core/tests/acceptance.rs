//! Acceptance criteria 1-12, one PASS/FAIL line each.
//!
//! Criteria 1-11 read their results from one run of the full verification
//! suite; criterion 12 runs it a second time for determinism and adds the
//! infrastructure properties. The process exits nonzero when a criterion's
//! outcome differs from the expected one. Criterion 9 is expected to fail:
//! the a-infinity q-difference equation as printed has a nonzero residual.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::One;
use qtrace_core::closedform::cinf::BaseSource;
use qtrace_core::closedform::duality::{duality_reduce, DualityInstance, Family, ReductionMode};
use qtrace_core::closedform::level1::f_bo;
use qtrace_core::combinat::{weyl_group, WeylType};
use qtrace_core::qseries::json::{from_csv, from_json_str, to_csv, to_json_string};
use qtrace_core::qseries::rat;
use qtrace_core::verify::{matches, run_suite, CheckResult, Status};
use qtrace_core::{HalfInt, Monomial, Param, Rational, Series};

/// Criteria whose honest outcome is FAIL.
const EXPECTED_FAIL: &[u32] = &[9];

struct Outcome {
    pass: bool,
    note: String,
}

fn h(v: i64) -> HalfInt {
    HalfInt::int(v)
}

/// All gating results whose names match one of the patterns.
fn select<'a>(all: &'a [CheckResult], patterns: &[&str]) -> Vec<&'a CheckResult> {
    all.iter().filter(|r| patterns.iter().any(|p| matches(p, &r.name))).collect()
}

fn all_pass(all: &[CheckResult], patterns: &[&str], expect_at_least: usize) -> Outcome {
    let chosen: Vec<&CheckResult> = select(all, patterns).into_iter().filter(|r| r.gating).collect();
    let bad: Vec<String> = chosen
        .iter()
        .filter(|r| r.status != Status::Pass)
        .map(|r| format!("{} {}", r.name, r.status))
        .collect();
    let pass = bad.is_empty() && chosen.len() >= expect_at_least;
    let note = if bad.is_empty() {
        format!("{} checks pass", chosen.len())
    } else {
        format!("{} of {} checks fail: {}", bad.len(), chosen.len(), bad.join("; "))
    };
    Outcome { pass, note }
}

fn status_of<'a>(all: &'a [CheckResult], name: &str) -> &'a CheckResult {
    all.iter().find(|r| r.name == name).unwrap_or_else(|| panic!("no check named {name}"))
}

fn criterion9(all: &[CheckResult]) -> Outcome {
    let printed = select(all, &["qdiff-a-printed-*"]);
    let corrected = all_pass(all, &["qdiff-a-corrected-*"], 3);
    let c = all_pass(all, &["qdiff-c-*"], 3);
    let printed_zero = printed.len() == 3 && printed.iter().all(|r| r.status == Status::Pass);
    let first = printed
        .first()
        .and_then(|r| r.first_discrepancy.as_ref())
        .map(|d| format!("n=1 first difference at {}: {} vs {}", d.monomial, d.lhs, d.rhs))
        .unwrap_or_default();
    Outcome {
        pass: printed_zero && corrected.pass && c.pass,
        note: format!(
            "a-infinity as printed: residual {}zero ({first}); with the right side in charge sector -1 and sign (-1)^s: {}; c-infinity: {}",
            if printed_zero { "" } else { "non" },
            corrected.note,
            c.note
        ),
    }
}

fn criterion10(all: &[CheckResult]) -> Outcome {
    let groups = [
        all_pass(all, &["qdim-a-minus1-*"], 5),
        all_pass(all, &["qdim-a-level=-2-*", "qdim-a-level=-3-*"], 7),
        all_pass(all, &["qdim-c-level=3/2-forms-*"], 3),
        all_pass(all, &["qdim-c-level=-*", "qdim-d-level=-*", "qdim-d-level=1/2"], 20),
    ];
    let has_negative = all.iter().any(|r| r.name == "qdim-a-level=-2-lambda=1,-1");
    let printed_d = select(all, &["qdim-d-printed-*"]);
    let printed_fail = printed_d.iter().filter(|r| r.status != Status::Pass).count();
    Outcome {
        pass: groups.iter().all(|g| g.pass) && has_negative,
        note: format!(
            "{}; d-infinity Weyl sums use the sector blocks X_k (the printed blocks X_k - X_(k+2) fail {printed_fail} of {} informational checks)",
            groups.iter().map(|g| g.note.clone()).collect::<Vec<_>>().join(", "),
            printed_d.len()
        ),
    }
}

fn criterion11(all: &[CheckResult]) -> Outcome {
    let assign = all_pass(all, &["duality-assign-*-l=2-n=*"], 36);
    let literal = select(all, &["duality-literal-*-l=2-n=*"]);
    let literal_pass = literal.iter().filter(|r| r.status == Status::Pass).count();
    let literal_n0 = literal.iter().filter(|r| r.status == Status::Pass && r.name.contains("-n=0-")).count();

    // literal = assignment exactly at n = 0
    let mut n0_equal = true;
    for f in Family::ALL {
        let inst = DualityInstance::new(f, 2).unwrap();
        let lam: &[i64] = if f == Family::AMinus { &[1, -1] } else { &[1, 0] };
        let a = duality_reduce(&inst, lam, &[], h(8), ReductionMode::Assignment, BaseSource::Closed).unwrap();
        let l = duality_reduce(&inst, lam, &[], h(8), ReductionMode::Literal, BaseSource::Closed).unwrap();
        n0_equal &= a == l;
    }

    // the q^0 case: 2β by assignment and trace, β² by the literal product
    let s = rat(2, 3);
    let beta = &s / (Rational::one() - &s * &s);
    let inst = DualityInstance::new(Family::AMinus, 2).unwrap();
    let t = [Param::frac(2, 3)];
    let q0 = |mode| {
        duality_reduce(&inst, &[0, 0], &t, HalfInt::ZERO, mode, BaseSource::Closed).unwrap().coeff_q(HalfInt::ZERO)
    };
    let (qa, ql) = (q0(ReductionMode::Assignment), q0(ReductionMode::Literal));
    let hand = qa == &beta * rat(2, 1) && ql == &beta * &beta && status_of(all, "duality-assign-q0-case").status == Status::Pass;

    Outcome {
        pass: assign.pass && literal.len() == 36 && n0_equal && hand,
        note: format!(
            "assignment: {}; literal report: {literal_pass} of {} agree with the trace ({literal_n0} of them at n=0); n=0 literal = assignment: {n0_equal}; q^0 case: assignment {qa}, literal {ql}, 2beta = {}",
            assign.note,
            literal.len(),
            &beta * rat(2, 1)
        ),
    }
}

fn criterion12(first: &[CheckResult], second: &[CheckResult], elapsed: Duration) -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;

    // truncation coherence: truncating before or after a product agrees
    let a = Param::frac(2, 3).q_shift(HalfInt::HALF);
    let x = qtrace_core::qseries::poch_inf(&a, h(12)).unwrap();
    let y = qtrace_core::qseries::euler(h(12)).invert().unwrap();
    let coherent = (2..12).all(|m| x.mul(&y).truncate(h(m)) == x.truncate(h(m)).mul(&y.truncate(h(m))));
    pass &= coherent;
    notes.push(format!("truncation coherence {coherent}"));

    // invert round trips
    let samples = [x.clone(), y.clone(), x.add(&Series::from_int(3, h(12)))];
    let inverts = samples.iter().all(|s| s.mul(&s.invert().unwrap()) == Series::one(h(12)));
    pass &= inverts;
    notes.push(format!("invert round trips {inverts}"));

    // Weyl group cardinalities
    let fact = |l: usize| (1..=l).product::<usize>();
    let mut weyl = true;
    for l in 1..=4usize {
        weyl &= weyl_group(WeylType::A, l).unwrap().len() == fact(l);
        weyl &= weyl_group(WeylType::BC, l).unwrap().len() == (1 << l) * fact(l);
        weyl &= weyl_group(WeylType::D, l).unwrap().len() == (1 << (l - 1)) * fact(l);
    }
    pass &= weyl;
    notes.push(format!("Weyl cardinalities {weyl}"));

    // determinism of the suite, timings aside
    let same = first.len() == second.len() && first.iter().zip(second).all(|(a, b)| a.untimed() == b.untimed());
    pass &= same;
    notes.push(format!("suite deterministic {same}"));

    // JSON and CSV round trips
    let f = f_bo(&[Param::frac(2, 3)], h(8)).unwrap();
    let mixed = Series::from_terms(
        [
            (Monomial::new(HalfInt::from_twice(-1), [(1, 2), (3, -1)]), rat(-4, 9)),
            (Monomial::new(HalfInt::from_twice(5), [(2, 1)]), rat(7, 3)),
        ],
        HalfInt::from_twice(9),
    );
    let trips = [f, mixed]
        .iter()
        .all(|s| from_json_str(&to_json_string(s)).unwrap() == *s && from_csv(&to_csv(s)).unwrap() == *s);
    pass &= trips;
    notes.push(format!("JSON/CSV round trips {trips}"));

    let fast = elapsed < Duration::from_secs(600);
    pass &= fast;
    notes.push(format!("full suite {:.1} s", elapsed.as_secs_f64()));
    Outcome { pass, note: notes.join(", ") }
}

fn main() {
    let start = Instant::now();
    let first = run_suite("");
    let elapsed = start.elapsed();
    let second = run_suite("");

    let ff_ms: u64 = select(&first, &["identity-ff-first-*", "identity-ff-second-*"]).iter().map(|r| r.ms).sum();
    let mut c1 = all_pass(&first, &["identity-ff-first-*", "identity-ff-second-*"], 4);
    c1.pass &= ff_ms < 5000;
    c1.note = format!("{}, {ff_ms} ms total", c1.note);

    let mut results: BTreeMap<u32, (&str, Outcome)> = BTreeMap::new();
    results.insert(1, ("bilateral identity to q^20", c1));
    results.insert(2, ("Pochhammer sum identity to q^20", all_pass(&first, &["pochhammer-sum-*"], 6)));
    results.insert(3, ("Euler expansions to q^20", all_pass(&first, &["euler-*"], 3)));
    results.insert(4, ("marked partition generating functions to q^15", all_pass(&first, &["marked-partitions-*"], 20)));
    results.insert(5, ("level -1 one-point function to q^12", all_pass(&first, &["a-one-point-*"], 6)));
    results.insert(
        6,
        (
            "generalized one- and two-point functions, Omega sum",
            all_pass(&first, &["a-generalized-one-point-*", "a-generalized-two-point-paired", "omega-sum-*"], 5),
        ),
    );
    results.insert(
        7,
        ("level 1 sectors and theta derivative", all_pass(&first, &["level1-sector-*", "theta-triple-product"], 7)),
    );
    results.insert(8, ("neutral boson one-point function to q^10", all_pass(&first, &["c-neutral-one-point-*"], 3)));
    results.insert(9, ("q-difference equations to q^10, n = 1..3", criterion9(&first)));
    results.insert(10, ("q-dimension formulas", criterion10(&first)));
    results.insert(11, ("duality engine, assignment and literal modes", criterion11(&first)));
    results.insert(12, ("infrastructure properties", criterion12(&first, &second, elapsed)));

    let mut unexpected = 0;
    for (k, (title, o)) in &results {
        let expected_fail = EXPECTED_FAIL.contains(k);
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let flag = match (o.pass, expected_fail) {
            (false, true) => " [expected]",
            (true, true) | (false, false) => {
                unexpected += 1;
                " [UNEXPECTED]"
            }
            (true, false) => "",
        };
        println!("criterion {k:>2}: {tag}{flag} {title}: {}", o.note);
    }
    let passed = results.values().filter(|(_, o)| o.pass).count();
    println!("{passed}/12 criteria pass; {unexpected} unexpected outcomes");
    if unexpected > 0 {
        std::process::exit(1);
    }
}
