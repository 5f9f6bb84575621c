//! Arc labelings, crossing indices, n-writhes and the one-variable index
//! polynomials.

use std::collections::{BTreeMap, BTreeSet};

use crate::codec::{GaussCode, Sign};
use crate::laurent::LaurentPoly2;

/// Integer label for each arc. Arc `i` is the gap after pass `i`; the unknot
/// has one arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArcLabeling {
    pub labels: Vec<i64>,
}

impl ArcLabeling {
    /// Label of the arc that enters pass `pos`.
    pub fn incoming(&self, pos: usize) -> i64 {
        let m = self.labels.len();
        self.labels[(pos + m - 1) % m]
    }

    pub fn outgoing(&self, pos: usize) -> i64 {
        self.labels[pos]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexedCrossing {
    pub label: u32,
    pub sign: i64,
    pub index: i64,
    /// Left incoming label in the standard picture of the crossing: the
    /// incoming over arc when the crossing is positive, the incoming under
    /// arc when it is negative.
    pub a: i64,
    /// The other incoming label.
    pub b: i64,
}

/// Signed counts of crossings by index, with the derived dwrithes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WritheTable {
    /// index value -> signed count; zero counts are not stored.
    pub j: BTreeMap<i64, i64>,
    /// n -> J_n - J_{-n}, for n in the support.
    pub dwrithe: BTreeMap<i64, i64>,
    pub support: BTreeSet<i64>,
    pub writhe: i64,
}

impl WritheTable {
    pub fn j(&self, n: i64) -> i64 {
        self.j.get(&n).copied().unwrap_or(0)
    }

    /// n-th dwrithe for any n; zero outside the support.
    pub fn dwrithe(&self, n: i64) -> i64 {
        self.j(n) - self.j(-n)
    }

    /// The nonzero dwrithes.
    pub fn nonzero_dwrithes(&self) -> BTreeMap<i64, i64> {
        self.dwrithe.iter().filter(|(_, v)| **v != 0).map(|(k, v)| (*k, *v)).collect()
    }
}

/// Labels each arc by the signed count of crossings first met as over passes
/// when travelling forward from that arc, then checks the local rule at every
/// crossing.
pub fn arc_labeling(code: &GaussCode) -> ArcLabeling {
    let m = code.len();
    if m == 0 {
        return ArcLabeling { labels: vec![0] };
    }
    let labels: Vec<i64> = (0..m)
        .map(|arc| {
            let start = arc + 1;
            code.crossings()
                .iter()
                .filter(|c| (c.over + m - start % m) % m < (c.under + m - start % m) % m)
                .map(|c| c.sign.value())
                .sum()
        })
        .collect();
    let lab = ArcLabeling { labels };
    for c in code.crossings() {
        let s = c.sign.value();
        assert_eq!(
            lab.outgoing(c.over),
            lab.incoming(c.over) - s,
            "label rule fails on the over pass of crossing {}",
            c.label
        );
        assert_eq!(
            lab.outgoing(c.under),
            lab.incoming(c.under) + s,
            "label rule fails on the under pass of crossing {}",
            c.label
        );
    }
    lab
}

/// One record per crossing, in order of first appearance.
pub fn index_crossings(code: &GaussCode) -> Vec<IndexedCrossing> {
    let lab = arc_labeling(code);
    code.crossings()
        .iter()
        .map(|c| {
            let over_in = lab.incoming(c.over);
            let under_in = lab.incoming(c.under);
            let (a, b) = match c.sign {
                Sign::Positive => (over_in, under_in),
                Sign::Negative => (under_in, over_in),
            };
            let sign = c.sign.value();
            IndexedCrossing { label: c.label, sign, index: sign * (a - b - 1), a, b }
        })
        .collect()
}

pub fn table_from(crossings: &[IndexedCrossing]) -> WritheTable {
    let mut j: BTreeMap<i64, i64> = BTreeMap::new();
    for c in crossings {
        *j.entry(c.index).or_default() += c.sign;
    }
    j.retain(|_, v| *v != 0);
    let support: BTreeSet<i64> =
        crossings.iter().map(|c| c.index.abs()).filter(|&n| n != 0).collect();
    let mut table = WritheTable {
        j,
        dwrithe: BTreeMap::new(),
        support,
        writhe: crossings.iter().map(|c| c.sign).sum(),
    };
    table.dwrithe = table.support.iter().map(|&n| (n, table.dwrithe(n))).collect();
    table
}

pub fn writhe_table(code: &GaussCode) -> WritheTable {
    table_from(&index_crossings(code))
}

pub fn affine_index_poly_from(crossings: &[IndexedCrossing]) -> LaurentPoly2 {
    let mut p = LaurentPoly2::zero();
    for c in crossings {
        p.add_term(c.sign.into(), c.index, 0);
        p.add_term((-c.sign).into(), 0, 0);
    }
    p
}

/// Sum over crossings of `sgn(c) (t^Ind(c) - 1)`.
pub fn affine_index_poly(code: &GaussCode) -> LaurentPoly2 {
    affine_index_poly_from(&index_crossings(code))
}

pub fn writhe_poly_from(crossings: &[IndexedCrossing]) -> LaurentPoly2 {
    let mut p = LaurentPoly2::zero();
    for c in crossings {
        p.add_term(c.sign.into(), c.index, 0);
    }
    let w: i64 = crossings.iter().map(|c| c.sign).sum();
    p.add_term((-w).into(), 0, 0);
    p
}

/// `sum sgn(c) t^Ind(c) - w`.
pub fn writhe_poly(code: &GaussCode) -> LaurentPoly2 {
    writhe_poly_from(&index_crossings(code))
}
