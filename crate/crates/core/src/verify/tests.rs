use super::*;
use crate::closedform::identities::{prop111_lhs, prop111_rhs};
use crate::qseries::Param;

fn h(v: i64) -> HalfInt {
    HalfInt::int(v)
}

#[test]
fn names_are_unique_and_topics_known() {
    let specs = registry();
    let mut names: Vec<&str> = specs.iter().map(|s| s.name.as_str()).collect();
    let before = names.len();
    names.sort_unstable();
    names.dedup();
    assert_eq!(names.len(), before);
    for s in &specs {
        assert!(TOPICS.contains(&s.topic), "{} has unknown topic {}", s.name, s.topic);
    }
    assert!(uncovered(&specs).is_empty());
}

#[test]
fn coverage_check_detects_gaps() {
    let specs: Vec<CheckSpec> = registry().into_iter().filter(|s| s.topic != "omega-sum").collect();
    assert_eq!(uncovered(&specs), vec!["omega-sum"]);
    let r = coverage_result(&specs);
    assert_eq!(r.status, Status::Fail);
    assert!(r.detail.unwrap().contains("omega-sum"));
}

#[test]
fn filters() {
    assert!(matches("", "anything"));
    assert!(matches("identity-ff", "identity-ff-first-s=2/3-d=1/2"));
    assert!(matches("qdim-*", "qdim-a-level=-2-lambda=0,0"));
    assert!(!matches("qdim-*", "duality-assign-x"));
    assert!(matches("duality-literal-*", "duality-literal-a-minus-l-l=2-n=0-lambda=0,0"));
}

#[test]
fn degenerate_point_is_an_error() {
    let t = Param::frac(1, 1);
    let spec = CheckSpec::new("pochhammer-sum-k=0-s=1", "pochhammer-sum", "t = 1", h(5), move |n| {
        Ok((prop111_lhs(0, &t, n)?, prop111_rhs(0, &t, n)?))
    });
    let r = run_check(&spec);
    assert_eq!(r.status, Status::Error);
    assert!(r.detail.as_ref().unwrap().contains("degenerate parameter"));
    assert!(r.blocks());
}

#[test]
fn order_zero_compares_constants() {
    let spec = CheckSpec::new("const", "pochhammer-sum", "", h(0), |n| {
        Ok((Series::from_int(3, n).add(&Series::q_pow(h(1), h(2))), Series::from_int(3, n)))
    });
    assert_eq!(run_check(&spec).status, Status::Pass);
}

#[test]
fn failure_reports_first_monomial() {
    let spec = CheckSpec::new("diff", "pochhammer-sum", "", h(3), |n| {
        let a = Series::one(n).add(&Series::q_pow(HalfInt::from_twice(3), n));
        Ok((a, Series::one(n)))
    });
    let r = run_check(&spec);
    assert_eq!(r.status, Status::Fail);
    let d = r.first_discrepancy.unwrap();
    assert_eq!((d.monomial.as_str(), d.lhs.as_str(), d.rhs.as_str()), ("q^(3/2)", "1", "0"));
}

#[test]
fn short_side_fails() {
    let spec = CheckSpec::new("short", "pochhammer-sum", "", h(4), |_| Ok((Series::one(h(2)), Series::one(h(4)))));
    assert_eq!(run_check(&spec).status, Status::Fail);
}

#[test]
fn informational_failures_do_not_block() {
    let spec = CheckSpec::new("x", "pochhammer-sum", "", h(0), |n| Ok((Series::one(n), Series::zero(n)))).informational();
    let results = run_specs(&[spec]);
    assert_eq!(results[0].status, Status::Fail);
    assert!(suite_passes(&results));
}

#[test]
fn report_schema() {
    let results = run_suite("identity-ff-first");
    assert_eq!(results.len(), 2);
    let v: serde_json::Value = serde_json::from_str(&report_json(&results)).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks[0]["status"], "pass");
    assert!(checks[0]["first_discrepancy"].is_null());
    assert!(checks[0]["ms"].is_u64());
    assert!(report_table(&results).contains("identity-ff-first-s=2/3-d=1/2"));
}

#[test]
fn passing_check_passes_at_lower_orders() {
    let spec = registry().into_iter().find(|s| s.name == "pochhammer-sum-k=1-s=2/3").unwrap();
    for m in [0, 3, 7] {
        assert_eq!(run_check(&spec.at_order(h(m))).status, Status::Pass);
    }
}
