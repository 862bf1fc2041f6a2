use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::qseries::HalfInt;

/// The infinite-rank algebras with negative-level Howe dualities.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    A,
    C,
    D,
}

impl FromStr for Algebra {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "a" | "A" => Ok(Algebra::A),
            "c" | "C" => Ok(Algebra::C),
            "d" | "D" => Ok(Algebra::D),
            "b" | "B" => Err(Error::InvalidInput(
                "b-infinity does not feature in a Howe duality on these Fock spaces".into(),
            )),
            other => Err(Error::Parse(format!("unknown algebra {other:?}"))),
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algebra::A => "a",
            Algebra::C => "c",
            Algebra::D => "d",
        };
        write!(f, "{s}")
    }
}

/// A highest weight written over fundamental weights, for display.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightLabel {
    pub text: String,
    /// Set when the printed formula is reproduced despite a suspected typo.
    pub warning: Option<String>,
}

fn render(alg: Algebra, terms: &[(HalfInt, usize)]) -> String {
    let mut out = Vec::new();
    for (i, &(c, k)) in terms.iter().enumerate() {
        if i > 0 && c == HalfInt::ZERO {
            continue;
        }
        out.push(format!("{c}·Λ_{k}^{alg}"));
    }
    out.join(" + ")
}

/// Λ(λ) for the module labelled by λ at the given level. `det` selects the
/// λ⊗det twin for the orthogonal dualities.
pub fn highest_weight_label(alg: Algebra, level: HalfInt, lambda: &[i64], det: bool) -> Result<WeightLabel> {
    let l = lambda.len() as i64;
    let lam = |k: usize| -> i64 { if k >= 1 && k <= lambda.len() { lambda[k - 1] } else { 0 } };
    let j = lambda.iter().filter(|&&x| x > 0).count();
    let int = HalfInt::int;
    let mut warning = None;
    let terms: Vec<(HalfInt, usize)> = match alg {
        Algebra::A => {
            if level != int(-l) {
                return Err(Error::InvalidInput(format!("a-infinity label needs level -{l}, got {level}")));
            }
            let i = lambda.iter().rposition(|&x| x > 0).map(|p| p + 1).unwrap_or(0);
            let mut t = vec![(int(lam(l as usize) - lam(1) - l), 0)];
            for k in 1..i {
                t.push((int(lam(k) - lam(k + 1)), k));
            }
            if i > 0 {
                t.push((int(lam(i)), i));
            }
            warning = Some("the printed sum carries the index Λ_l on every term; rendered with Λ_k".into());
            t
        }
        Algebra::C if level > HalfInt::ZERO => {
            if level != HalfInt::from_twice(2 * l - 1) {
                return Err(Error::InvalidInput(format!("level {level} does not match depth {l}")));
            }
            let mut t = vec![(HalfInt::from_twice(2 * (l - j as i64) - 1), 0)];
            for k in 1..=j {
                t.push((int(1), lam(k) as usize));
            }
            t
        }
        Algebra::C if level == HalfInt::from_twice(-1) && lambda.iter().all(|&x| x == 0) => {
            vec![(HalfInt::from_twice(-1), 0)]
        }
        Algebra::C if level.is_integer() => {
            if level != int(-l) {
                return Err(Error::InvalidInput(format!("level {level} does not match depth {l}")));
            }
            let mut t = vec![(int(-l - lam(1)), 0)];
            if det {
                for k in 1..j {
                    t.push((int(lam(k) - lam(k + 1)), 0));
                }
                if j > 0 {
                    t.push((int(lam(j) - 1), j));
                }
                t.push((int(1), (2 * l) as usize - j));
            } else {
                for k in 1..=j {
                    t.push((int(lam(k) - lam(k + 1)), 0));
                }
            }
            warning = Some("the printed formula repeats Λ_0 inside the sum over k; reproduced verbatim".into());
            t
        }
        Algebra::C => {
            if level != HalfInt::from_twice(-2 * l - 1) {
                return Err(Error::InvalidInput(format!("level {level} does not match depth {l}")));
            }
            let mut t = vec![(HalfInt::from_twice(-2 * l - 2 * lam(1) - 1), 0)];
            let upto = if det { j.saturating_sub(1) } else { j };
            for k in 1..=upto {
                t.push((int(lam(k) - lam(k + 1)), k));
            }
            if det {
                if j > 0 {
                    t.push((int(lam(j) - 1), j));
                }
                t.push((int(1), (2 * l + 1) as usize - j));
            }
            t
        }
        Algebra::D => {
            let shift = if level == int(-l) {
                0
            } else if level == HalfInt::from_twice(-2 * l + 1) {
                1
            } else if level == HalfInt::HALF && lambda.iter().all(|&x| x == 0) {
                return Ok(WeightLabel { text: render(alg, &[(HalfInt::HALF, 0)]), warning: None });
            } else {
                return Err(Error::InvalidInput(format!("level {level} does not match depth {l}")));
            };
            let mut t = vec![(int(-2 * l + shift - lam(1) - lam(2)), 0)];
            for k in 1..=l as usize {
                t.push((int(lam(k) - lam(k + 1)), k));
            }
            t
        }
    };
    Ok(WeightLabel { text: render(alg, &terms), warning })
}
