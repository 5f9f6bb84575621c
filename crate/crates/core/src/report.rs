//! JSON documents emitted by the command line tool.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly2;
use crate::lfpoly::{CosmeticVerdict, InvariantBundle, Verdict, Witness};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub label: u32,
    pub sign: i64,
    pub index: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleJson {
    pub code: String,
    pub writhe: i64,
    pub crossings: Vec<CrossingJson>,
    pub nset: Vec<i64>,
    pub stable_bound: i64,
    pub dwrithe: BTreeMap<i64, i64>,
    #[serde(rename = "P")]
    pub p: LaurentPoly2,
    #[serde(rename = "W")]
    pub w: LaurentPoly2,
    #[serde(rename = "L")]
    pub l: BTreeMap<i64, LaurentPoly2>,
    #[serde(rename = "F")]
    pub f: BTreeMap<i64, LaurentPoly2>,
    #[serde(rename = "T")]
    pub t: BTreeMap<i64, Vec<u32>>,
    /// crossing label -> n -> dwrithe of the smoothed diagram.
    pub smoothed_dwrithe: BTreeMap<u32, BTreeMap<i64, i64>>,
    pub cosmetic: BTreeMap<u32, CosmeticVerdict>,
}

impl From<&InvariantBundle> for BundleJson {
    fn from(b: &InvariantBundle) -> Self {
        let mut smoothed: BTreeMap<u32, BTreeMap<i64, i64>> =
            b.code.labels().map(|c| (c, BTreeMap::new())).collect();
        for (&(c, n), &v) in &b.smoothed_dwrithes {
            smoothed.entry(c).or_default().insert(n, v);
        }
        BundleJson {
            code: b.code.to_string(),
            writhe: b.writhes.writhe,
            crossings: b
                .crossings
                .iter()
                .map(|c| CrossingJson { label: c.label, sign: c.sign, index: c.index })
                .collect(),
            nset: b.nset.iter().copied().collect(),
            stable_bound: b.stable_bound,
            dwrithe: b.writhes.dwrithe.clone(),
            p: b.p.clone(),
            w: b.w.clone(),
            l: b.l.clone(),
            f: b.f.clone(),
            t: b.t.iter().map(|(n, s)| (*n, s.iter().copied().collect())).collect(),
            smoothed_dwrithe: smoothed,
            cosmetic: b.cosmetic.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareJson {
    pub first: String,
    pub second: String,
    pub distinguished: bool,
    pub witness: Option<Witness>,
    pub message: String,
}

impl CompareJson {
    pub fn new(first: String, second: String, v: Verdict) -> Self {
        let witness = match v {
            Verdict::Distinguished(w) => Some(w),
            Verdict::Indistinguishable => None,
        };
        CompareJson { first, second, distinguished: witness.is_some(), witness, message: v.to_string() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosmeticJson {
    pub code: String,
    pub crossings: BTreeMap<u32, CosmeticVerdict>,
}
