//! The L and F polynomial families, the full invariant bundle, the pair
//! distinguisher and the non-cosmetic crossing test.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::codec::GaussCode;
use crate::invariants::{self, IndexedCrossing, WritheTable};
use crate::laurent::LaurentPoly2;
use crate::transforms::{self, smooth_against};

/// Writhe tables of `D_c` for every crossing `c`, in crossing order.
pub fn smoothed_tables(code: &GaussCode) -> Vec<(u32, WritheTable)> {
    code.crossings()
        .par_iter()
        .map(|c| {
            let s = smooth_against(code, c.label).expect("label comes from the code");
            (c.label, invariants::writhe_table(&s.result))
        })
        .collect()
}

fn nset_from(own: &WritheTable, smoothed: &[(u32, WritheTable)]) -> BTreeSet<i64> {
    let mut out = own.support.clone();
    for (_, t) in smoothed {
        out.extend(t.support.iter().copied());
    }
    out
}

/// Union of the index supports of `D` and of every `D_c`. Outside this set
/// every dwrithe involved vanishes, so `L^n = F^n = P`.
pub fn nset(code: &GaussCode) -> BTreeSet<i64> {
    nset_from(&invariants::writhe_table(code), &smoothed_tables(code))
}

fn l_from(
    crossings: &[IndexedCrossing],
    own: &WritheTable,
    smoothed: &[(u32, WritheTable)],
    n: i64,
) -> LaurentPoly2 {
    let base = own.dwrithe(n).abs();
    let mut p = LaurentPoly2::zero();
    for (c, (_, t)) in crossings.iter().zip(smoothed) {
        p.add_term(c.sign.into(), c.index, t.dwrithe(n).abs());
        p.add_term((-c.sign).into(), 0, base);
    }
    p
}

fn in_t(own: &WritheTable, t: &WritheTable, n: i64) -> bool {
    t.dwrithe(n).abs() == own.dwrithe(n).abs()
}

fn f_from(
    crossings: &[IndexedCrossing],
    own: &WritheTable,
    smoothed: &[(u32, WritheTable)],
    n: i64,
) -> LaurentPoly2 {
    let base = own.dwrithe(n);
    let mut p = LaurentPoly2::zero();
    for (c, (_, t)) in crossings.iter().zip(smoothed) {
        let d = t.dwrithe(n);
        p.add_term(c.sign.into(), c.index, d);
        let corr = if in_t(own, t, n) { d } else { base };
        p.add_term((-c.sign).into(), 0, corr);
    }
    p
}

/// `sum_c sgn(c) (t^Ind(c) l^|dJ_n(D_c)| - l^|dJ_n(D)|)`.
pub fn l_poly(code: &GaussCode, n: i64) -> LaurentPoly2 {
    l_from(&invariants::index_crossings(code), &invariants::writhe_table(code), &smoothed_tables(code), n)
}

pub fn f_poly(code: &GaussCode, n: i64) -> LaurentPoly2 {
    f_from(&invariants::index_crossings(code), &invariants::writhe_table(code), &smoothed_tables(code), n)
}

/// Crossings `c` with `dJ_n(D_c) = ±dJ_n(D)`.
pub fn t_set(code: &GaussCode, n: i64) -> BTreeSet<u32> {
    let own = invariants::writhe_table(code);
    smoothed_tables(code).iter().filter(|(_, t)| in_t(&own, t, n)).map(|(l, _)| *l).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CosmeticVerdict {
    NotCosmetic { reason: String },
    Inconclusive,
}

impl CosmeticVerdict {
    pub fn is_not_cosmetic(&self) -> bool {
        matches!(self, CosmeticVerdict::NotCosmetic { .. })
    }
}

impl fmt::Display for CosmeticVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CosmeticVerdict::NotCosmetic { reason } => write!(f, "not cosmetic ({reason})"),
            CosmeticVerdict::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantBundle {
    pub code: GaussCode,
    pub crossings: Vec<IndexedCrossing>,
    pub writhes: WritheTable,
    pub p: LaurentPoly2,
    pub w: LaurentPoly2,
    pub nset: BTreeSet<i64>,
    pub l: BTreeMap<i64, LaurentPoly2>,
    pub f: BTreeMap<i64, LaurentPoly2>,
    pub t: BTreeMap<i64, BTreeSet<u32>>,
    /// `(c, n) -> dJ_n(D_c)` for `n` in the n-set, zero entries included.
    pub smoothed_dwrithes: BTreeMap<(u32, i64), i64>,
    pub stable_bound: i64,
    pub cosmetic: BTreeMap<u32, CosmeticVerdict>,
}

impl InvariantBundle {
    /// `L^n`, which equals `P` outside the n-set.
    pub fn l(&self, n: i64) -> LaurentPoly2 {
        self.l.get(&n).cloned().unwrap_or_else(|| self.p.clone())
    }

    pub fn f(&self, n: i64) -> LaurentPoly2 {
        self.f.get(&n).cloned().unwrap_or_else(|| self.p.clone())
    }

    pub fn t(&self, n: i64) -> BTreeSet<u32> {
        self.t.get(&n).cloned().unwrap_or_else(|| self.code.labels().collect())
    }

    pub fn crossing(&self, label: u32) -> Option<&IndexedCrossing> {
        self.crossings.iter().find(|c| c.label == label)
    }

    /// The diagram-independent part of the bundle: this is what must survive
    /// Reidemeister moves.
    pub fn signature(&self) -> Signature {
        Signature {
            p: self.p.clone(),
            w: self.w.clone(),
            dwrithe: self.writhes.nonzero_dwrithes(),
            l: self.l.iter().filter(|(_, q)| **q != self.p).map(|(n, q)| (*n, q.clone())).collect(),
            f: self.f.iter().filter(|(_, q)| **q != self.p).map(|(n, q)| (*n, q.clone())).collect(),
        }
    }
}

/// Invariant data only: no crossing lists, labels or diagram-dependent sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub p: LaurentPoly2,
    pub w: LaurentPoly2,
    pub dwrithe: BTreeMap<i64, i64>,
    pub l: BTreeMap<i64, LaurentPoly2>,
    pub f: BTreeMap<i64, LaurentPoly2>,
}

impl Signature {
    /// First field that differs, with both values rendered.
    pub fn first_difference(&self, other: &Signature) -> Option<String> {
        if self.p != other.p {
            return Some(format!("P: {} vs {}", self.p, other.p));
        }
        if self.w != other.w {
            return Some(format!("W: {} vs {}", self.w, other.w));
        }
        if self.dwrithe != other.dwrithe {
            return Some(format!("dwrithe: {:?} vs {:?}", self.dwrithe, other.dwrithe));
        }
        let ns: BTreeSet<i64> = self.l.keys().chain(other.l.keys()).copied().collect();
        for n in ns {
            if self.l.get(&n) != other.l.get(&n) {
                return Some(format!("L^{n} differs"));
            }
        }
        let ns: BTreeSet<i64> = self.f.keys().chain(other.f.keys()).copied().collect();
        for n in ns {
            if self.f.get(&n) != other.f.get(&n) {
                return Some(format!("F^{n} differs"));
            }
        }
        None
    }
}

pub fn bundle(code: &GaussCode) -> InvariantBundle {
    let crossings = invariants::index_crossings(code);
    let writhes = invariants::table_from(&crossings);
    let smoothed = smoothed_tables(code);
    let nset = nset_from(&writhes, &smoothed);
    let p = invariants::affine_index_poly_from(&crossings);
    let w = invariants::writhe_poly_from(&crossings);

    let mut l = BTreeMap::new();
    let mut f = BTreeMap::new();
    let mut t = BTreeMap::new();
    let mut smoothed_dwrithes = BTreeMap::new();
    for &n in &nset {
        let ln = l_from(&crossings, &writhes, &smoothed, n);
        let fn_ = f_from(&crossings, &writhes, &smoothed, n);
        assert_eq!(ln.set_l_to_one(), p, "L^{n}(t, 1) must be P");
        assert_eq!(fn_.fold_abs_l(), ln, "folded F^{n} must be L^{n}");
        l.insert(n, ln);
        f.insert(n, fn_);
        t.insert(
            n,
            smoothed.iter().filter(|(_, s)| in_t(&writhes, s, n)).map(|(c, _)| *c).collect(),
        );
        for (c, s) in &smoothed {
            smoothed_dwrithes.insert((*c, n), s.dwrithe(n));
        }
    }

    let cosmetic = crossings
        .iter()
        .zip(&smoothed)
        .map(|(c, (_, s))| (c.label, cosmetic_from(c, &writhes, s, &nset)))
        .collect();

    InvariantBundle {
        code: code.clone(),
        crossings,
        writhes,
        p,
        w,
        nset,
        l,
        f,
        t,
        smoothed_dwrithes,
        stable_bound: 2 * code.crossing_count() as i64 + 1,
        cosmetic,
    }
}

fn cosmetic_from(
    c: &IndexedCrossing,
    own: &WritheTable,
    smoothed: &WritheTable,
    nset: &BTreeSet<i64>,
) -> CosmeticVerdict {
    if c.index != 0 {
        return CosmeticVerdict::NotCosmetic { reason: format!("index {}", c.index) };
    }
    for &n in nset {
        if !in_t(own, smoothed, n) {
            return CosmeticVerdict::NotCosmetic {
                reason: format!(
                    "dwrithe_{n} after smoothing is {} but the diagram has {}",
                    smoothed.dwrithe(n),
                    own.dwrithe(n)
                ),
            };
        }
    }
    CosmeticVerdict::Inconclusive
}

/// A crossing is reported not cosmetic when its index is nonzero or when
/// smoothing it changes some dwrithe beyond a sign. Otherwise the test says
/// nothing.
pub fn cosmetic_verdicts(code: &GaussCode) -> BTreeMap<u32, CosmeticVerdict> {
    bundle(code).cosmetic
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "invariant", content = "n")]
pub enum Witness {
    P,
    W,
    L(i64),
    F(i64),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::P => f.write_str("P"),
            Witness::W => f.write_str("W"),
            Witness::L(n) => write!(f, "L^{n}"),
            Witness::F(n) => write!(f, "F^{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Distinguished(Witness),
    Indistinguishable,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Distinguished(w) => write!(f, "distinguished by {w}"),
            Verdict::Indistinguishable => f.write_str("indistinguishable by computed invariants"),
        }
    }
}

/// Looks for the first invariant that separates the two knots, in the order
/// P, W, L^n by n, F^n by n. Agreement never implies equivalence.
pub fn distinguish(a: &InvariantBundle, b: &InvariantBundle) -> Verdict {
    if a.p != b.p {
        return Verdict::Distinguished(Witness::P);
    }
    if a.w != b.w {
        return Verdict::Distinguished(Witness::W);
    }
    let ns: BTreeSet<i64> = a.nset.union(&b.nset).copied().collect();
    if let Some(&n) = ns.iter().find(|&&n| a.l(n) != b.l(n)) {
        return Verdict::Distinguished(Witness::L(n));
    }
    if let Some(&n) = ns.iter().find(|&&n| a.f(n) != b.f(n)) {
        return Verdict::Distinguished(Witness::F(n));
    }
    Verdict::Indistinguishable
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorReverseRow {
    pub n: i64,
    pub mirror: bool,
    pub reverse: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MirrorReverseReport {
    pub rows: Vec<MirrorReverseRow>,
}

impl MirrorReverseReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.mirror && r.reverse)
    }
}

/// Checks `L^n(D*) = -L^n(D)(t^-1, l)` and `L^n(D^-) = L^n(D)(t^-1, l)` over
/// every n where any of the three diagrams has nontrivial data.
pub fn mirror_reverse_check(code: &GaussCode) -> MirrorReverseReport {
    let d = bundle(code);
    let m = bundle(&transforms::mirror(code));
    let r = bundle(&transforms::reverse(code));
    let ns: BTreeSet<i64> = d.nset.iter().chain(&m.nset).chain(&r.nset).copied().collect();
    let rows = ns
        .into_iter()
        .map(|n| {
            let base = d.l(n).invert_t();
            MirrorReverseRow { n, mirror: m.l(n) == base.negate(), reverse: r.l(n) == base }
        })
        .collect();
    MirrorReverseReport { rows }
}
