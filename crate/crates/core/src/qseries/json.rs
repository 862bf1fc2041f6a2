//! Lossless text encodings of series.
//!
//! JSON: `{"truncation": "21/2", "terms": [{"q": "3/2", "z": {"1": -2}, "c": "-4/9"}]}`.
//! Exponents are written as `k` or `a/2` strings; integer JSON numbers are
//! also accepted on input and read as doubled exponents.
//!
//! CSV: header `q_num,z,coeff_num,coeff_den` with `q_num` the doubled
//! q-exponent and `z` a semicolon-joined list of `var:exp`.

use serde_json::{json, Map, Value};

use super::{parse_rational, HalfInt, Monomial, Series};
use crate::error::{Error, Result};

pub fn to_json(s: &Series) -> Value {
    let terms: Vec<Value> = s
        .terms()
        .iter()
        .map(|(m, c)| {
            let z: Map<String, Value> = m.z().iter().map(|&(v, e)| (v.to_string(), json!(e))).collect();
            json!({"q": m.q.to_string(), "z": z, "c": c.to_string()})
        })
        .collect();
    json!({"truncation": s.truncation().to_string(), "terms": terms})
}

fn exponent(v: &Value) -> Result<HalfInt> {
    match v {
        Value::String(s) => s.parse(),
        Value::Number(n) => n
            .as_i64()
            .map(HalfInt::from_twice)
            .ok_or_else(|| Error::Parse(format!("bad exponent {n}"))),
        other => Err(Error::Parse(format!("bad exponent {other}"))),
    }
}

pub fn from_json(v: &Value) -> Result<Series> {
    let trunc = exponent(v.get("truncation").ok_or_else(|| Error::Parse("missing truncation".into()))?)?;
    let terms = v
        .get("terms")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("missing terms array".into()))?;
    let mut out = Series::zero(trunc);
    for t in terms {
        let q = exponent(t.get("q").ok_or_else(|| Error::Parse("term without q".into()))?)?;
        let mut z = Vec::new();
        if let Some(obj) = t.get("z").and_then(Value::as_object) {
            for (k, e) in obj {
                let var: u32 = k.parse().map_err(|_| Error::Parse(format!("bad variable {k:?}")))?;
                let e = e.as_i64().ok_or_else(|| Error::Parse(format!("bad z exponent {e}")))?;
                z.push((var, e));
            }
        }
        let c = t
            .get("c")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("term without coefficient string".into()))?;
        out.add_term(Monomial::new(q, z), parse_rational(c)?);
    }
    Ok(out)
}

pub fn to_json_string(s: &Series) -> String {
    serde_json::to_string(&to_json(s)).expect("series JSON is always serializable")
}

pub fn from_json_str(text: &str) -> Result<Series> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_json(&v)
}

/// CSV encoding. The truncation travels in a leading `# truncation=` comment.
pub fn to_csv(s: &Series) -> String {
    let mut out = format!("# truncation={}\nq_num,z,coeff_num,coeff_den\n", s.truncation().twice());
    for (m, c) in s.terms() {
        let z: Vec<String> = m.z().iter().map(|(v, e)| format!("{v}:{e}")).collect();
        out.push_str(&format!("{},{},{},{}\n", m.q.twice(), z.join(";"), c.numer(), c.denom()));
    }
    out
}

pub fn from_csv(text: &str) -> Result<Series> {
    let mut trunc = None;
    let mut rows = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with("q_num") {
            continue;
        }
        if let Some(t) = line.strip_prefix("# truncation=") {
            trunc = Some(HalfInt::from_twice(t.trim().parse().map_err(|_| Error::Parse(line.into()))?));
            continue;
        }
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 4 {
            return Err(Error::Parse(format!("bad CSV row {line:?}")));
        }
        let q = HalfInt::from_twice(f[0].parse().map_err(|_| Error::Parse(line.into()))?);
        let mut z = Vec::new();
        for part in f[1].split(';').filter(|p| !p.is_empty()) {
            let (v, e) = part.split_once(':').ok_or_else(|| Error::Parse(line.into()))?;
            z.push((
                v.parse().map_err(|_| Error::Parse(line.into()))?,
                e.parse().map_err(|_| Error::Parse(line.into()))?,
            ));
        }
        let c = parse_rational(&format!("{}/{}", f[2], f[3]))?;
        rows.push((Monomial::new(q, z), c));
    }
    let trunc = trunc.ok_or_else(|| Error::Parse("missing truncation comment".into()))?;
    Ok(Series::from_terms(rows, trunc))
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::rat;

    fn sample() -> Series {
        Series::from_terms(
            [
                (Monomial::q(HalfInt::ZERO), rat(1, 1)),
                (Monomial::new(HalfInt::from_twice(3), [(1, -2)]), rat(-4, 9)),
                (Monomial::new(HalfInt::from_twice(3), [(1, 1), (2, 5)]), rat(7, 3)),
            ],
            HalfInt::int(4),
        )
    }

    #[test]
    fn json_round_trip() {
        let s = sample();
        let text = to_json_string(&s);
        assert_eq!(from_json_str(&text).unwrap(), s);
        assert!(text.contains(r#""q":"3/2""#));
    }

    #[test]
    fn json_accepts_doubled_numbers() {
        let s = from_json_str(r#"{"truncation": 8, "terms": [{"q": 3, "z": {}, "c": "1/2"}]}"#).unwrap();
        assert_eq!(s.truncation(), HalfInt::int(4));
        assert_eq!(s.coeff_q(HalfInt::from_twice(3)), rat(1, 2));
    }

    #[test]
    fn csv_round_trip() {
        let s = sample();
        assert_eq!(from_csv(&to_csv(&s)).unwrap(), s);
    }
}
