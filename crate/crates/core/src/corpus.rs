//! Transcribed example diagrams and the `K_n` / `MK_n` mutant family.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::codec::{GaussCode, Pass, Sign};
use crate::laurent::LaurentPoly2;
use crate::lfpoly::InvariantBundle;
use crate::{Error, Result};

const ASSET: &str = include_str!("../assets/fixtures.txt");

/// A polynomial written either in display syntax or as `[i, j, coeff]`
/// triples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PolyValue {
    Text(String),
    Triples(LaurentPoly2),
}

impl PolyValue {
    pub fn poly(&self) -> LaurentPoly2 {
        match self {
            PolyValue::Text(s) => s.parse().unwrap_or_else(|e| panic!("bad polynomial {s:?}: {e}")),
            PolyValue::Triples(p) => p.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedCrossing {
    pub label: u32,
    pub sign: i64,
    pub index: i64,
}

/// Whatever is known in advance about a fixture.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default)]
    pub writhe: Option<i64>,
    #[serde(default)]
    pub crossings: Option<Vec<ExpectedCrossing>>,
    #[serde(default)]
    pub nset: Option<Vec<i64>>,
    #[serde(default)]
    pub dwrithe: Option<BTreeMap<i64, i64>>,
    #[serde(default, rename = "P")]
    pub p: Option<PolyValue>,
    #[serde(default, rename = "W")]
    pub w: Option<PolyValue>,
    #[serde(default, rename = "L")]
    pub l: Option<BTreeMap<i64, PolyValue>>,
    #[serde(default, rename = "F")]
    pub f: Option<BTreeMap<i64, PolyValue>>,
    #[serde(default, rename = "T")]
    pub t: Option<BTreeMap<i64, Vec<u32>>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: String,
    pub code: GaussCode,
    pub expected: Expected,
}

fn load() -> &'static Vec<Fixture> {
    static ALL: OnceLock<Vec<Fixture>> = OnceLock::new();
    ALL.get_or_init(|| {
        ASSET
            .lines()
            .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|line| {
                let mut parts = line.splitn(3, '|');
                let name = parts.next().unwrap_or_default().trim().to_string();
                let code = parts.next().unwrap_or_default().trim();
                let code = code.parse().unwrap_or_else(|e| panic!("fixture {name}: {e}"));
                let expected = match parts.next().map(str::trim) {
                    Some(js) if !js.is_empty() => serde_json::from_str(js)
                        .unwrap_or_else(|e| panic!("fixture {name}: {e}")),
                    _ => Expected::default(),
                };
                Fixture { name, code, expected }
            })
            .collect()
    })
}

pub fn fixture_names() -> Vec<&'static str> {
    load().iter().map(|f| f.name.as_str()).collect()
}

pub fn fixtures() -> &'static [Fixture] {
    load()
}

pub fn fixture(name: &str) -> Result<Fixture> {
    load().iter().find(|f| f.name == name).cloned().ok_or_else(|| Error::UnknownFixture(name.into()))
}

/// Lists every disagreement between the expected data and a computed bundle.
pub fn check(expected: &Expected, b: &InvariantBundle) -> Vec<String> {
    let mut bad = Vec::new();
    let mut cmp = |what: String, want: String, got: String| {
        if want != got {
            bad.push(format!("{what}: expected {want}, got {got}"));
        }
    };
    if let Some(w) = expected.writhe {
        cmp("writhe".into(), w.to_string(), b.writhes.writhe.to_string());
    }
    if let Some(xs) = &expected.crossings {
        for x in xs {
            let got = b.crossing(x.label).map(|c| (c.sign, c.index));
            cmp(format!("crossing {}", x.label), format!("{:?}", Some((x.sign, x.index))), format!("{got:?}"));
        }
        cmp("crossing count".into(), xs.len().to_string(), b.crossings.len().to_string());
    }
    if let Some(ns) = &expected.nset {
        cmp("nset".into(), format!("{ns:?}"), format!("{:?}", b.nset.iter().collect::<Vec<_>>()));
    }
    if let Some(d) = &expected.dwrithe {
        for (&n, &v) in d {
            cmp(format!("dwrithe {n}"), v.to_string(), b.writhes.dwrithe(n).to_string());
        }
    }
    if let Some(p) = &expected.p {
        cmp("P".into(), p.poly().to_string(), b.p.to_string());
    }
    if let Some(w) = &expected.w {
        cmp("W".into(), w.poly().to_string(), b.w.to_string());
    }
    for (name, want, get) in [
        ("L", &expected.l, &(|n| b.l(n)) as &dyn Fn(i64) -> LaurentPoly2),
        ("F", &expected.f, &(|n| b.f(n)) as &dyn Fn(i64) -> LaurentPoly2),
    ] {
        if let Some(m) = want {
            for (&n, q) in m {
                cmp(format!("{name}^{n}"), q.poly().to_string(), get(n).to_string());
            }
        }
    }
    if let Some(ts) = &expected.t {
        for (&n, v) in ts {
            cmp(format!("T_{n}"), format!("{v:?}"), format!("{:?}", b.t(n).into_iter().collect::<Vec<_>>()));
        }
    }
    bad
}

/// Labels used by [`family_kn`].
pub const LABEL_A: u32 = 1;
pub const LABEL_B: u32 = 2;
pub const LABEL_D: u32 = 3;

/// Label of the k-th twist crossing (1-based).
pub fn twist_label(k: usize) -> u32 {
    LABEL_D + k as u32
}

/// `K_n`, or its mutant `MK_n`: the crossing `c` of the four-crossing knot
/// (and its mutant) is replaced by a chain of `n` twist crossings `c_1..c_n`
/// whose strands meet them in opposite orders. `n = 1` gives the base pair.
pub fn family_kn(n: usize, mutant: bool) -> GaussCode {
    assert!(n >= 1, "the twist region needs at least one crossing");
    let d_sign = if n % 2 == 1 { Sign::Positive } else { Sign::Negative };
    let (a, b, d) = (LABEL_A, LABEL_B, LABEL_D);
    let twist = |k: usize, first_over: bool| {
        let label = twist_label(k);
        if (k % 2 == 1) == first_over {
            Pass::over(label, Sign::Negative)
        } else {
            Pass::under(label, Sign::Negative)
        }
    };
    let forward = |first_over: bool| (1..=n).map(move |k| twist(k, first_over));
    let backward = |first_over: bool| (1..=n).rev().map(move |k| twist(k, !first_over));

    let mut w = vec![Pass::under(a, Sign::Positive), Pass::under(b, Sign::Positive)];
    if mutant {
        w.extend(forward(false));
        w.push(Pass::under(d, d_sign));
        w.extend(backward(false));
        w.extend([Pass::over(a, Sign::Positive), Pass::over(b, Sign::Positive), Pass::over(d, d_sign)]);
    } else {
        w.extend([Pass::under(d, d_sign), Pass::over(a, Sign::Positive), Pass::over(b, Sign::Positive)]);
        w.extend(forward(true));
        w.push(Pass::over(d, d_sign));
        w.extend(backward(true));
    }
    GaussCode::new(w).expect("family words are valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfpoly::bundle;

    #[test]
    fn all_fixtures_match() {
        for f in fixtures() {
            let bad = check(&f.expected, &bundle(&f.code));
            assert!(bad.is_empty(), "{}: {bad:#?}", f.name);
        }
    }

    #[test]
    fn lookup() {
        let f = fixture("four-crossing").unwrap();
        let signs: Vec<i64> = f.code.crossings().iter().map(|c| c.sign.value()).collect();
        assert_eq!(signs, vec![-1, -1, 1, -1]);
        assert_eq!(fixture("trefoil-classical").unwrap().code.to_string(), "O1+U2+O3+U1+O2+U3+");
        assert!(matches!(fixture("nope"), Err(Error::UnknownFixture(_))));
        assert!(fixture_names().contains(&"f-pair-Kprime"));
    }

    #[test]
    fn family_base_case() {
        assert!(family_kn(1, false).same_diagram(&fixture("twist-K").unwrap().code));
        assert!(family_kn(1, true).same_diagram(&fixture("twist-MK").unwrap().code));
        assert_eq!(family_kn(4, false).crossing_count(), 7);
    }

    #[test]
    fn mutants_share_counts() {
        for n in 1..=6 {
            let (k, m) = (family_kn(n, false), family_kn(n, true));
            assert_eq!(k.crossing_count(), m.crossing_count());
            assert_eq!(k.writhe(), m.writhe());
        }
    }
}
