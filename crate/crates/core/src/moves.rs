//! Reidemeister moves as Gauss-code rewrites, plus seeded random walks.
//!
//! Virtual crossings are not recorded in a Gauss code, so the purely virtual
//! moves and the semi-virtual move do not change the word at all. Only the
//! three classical moves need rewriting rules:
//!
//! * R1: a crossing whose two passes are adjacent in the word.
//! * R2: two crossings of opposite sign whose over passes are adjacent and
//!   whose under passes are adjacent (in either order).
//! * R3: three crossings `p`, `q`, `r` with adjacent pass pairs
//!   `{O_p, O_q}` (top strand), `{U_p, O_r}` (middle strand) and
//!   `{U_q, U_r}` (bottom strand). The move swaps each pair and keeps all
//!   signs. Which combinations of pair orders and signs occur is read off
//!   from three straight lines in the plane; see [`r3_patterns`].

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::codec::{GaussCode, Pass, Sign, Strand};
use crate::lfpoly;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MoveKind {
    R1Insert,
    R1Delete,
    R2Insert,
    R2Delete,
    R3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 5] =
        [MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3];
}

/// A concrete move. Gaps are insertion points: gap `g` sits just before pass
/// `g` (the empty word has the single gap 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum MoveSite {
    R1Insert { gap: usize, sign: Sign, over_first: bool },
    R1Delete { label: u32 },
    /// The over pair goes into `over_gap` of the original word. `under_gap`
    /// then indexes the gaps of the lengthened word, and may not be the gap
    /// between the two new over passes.
    R2Insert { over_gap: usize, under_gap: usize, sign: Sign, parallel: bool },
    R2Delete { first: u32, second: u32 },
    /// `p` joins the top and middle strands, `q` the top and bottom strands,
    /// `r` the middle and bottom strands.
    R3 { p: u32, q: u32, r: u32 },
}

impl MoveSite {
    pub fn kind(&self) -> MoveKind {
        match self {
            MoveSite::R1Insert { .. } => MoveKind::R1Insert,
            MoveSite::R1Delete { .. } => MoveKind::R1Delete,
            MoveSite::R2Insert { .. } => MoveKind::R2Insert,
            MoveSite::R2Delete { .. } => MoveKind::R2Delete,
            MoveSite::R3 { .. } => MoveKind::R3,
        }
    }

    pub fn crossing_delta(&self) -> i64 {
        match self.kind() {
            MoveKind::R1Insert => 1,
            MoveKind::R1Delete => -1,
            MoveKind::R2Insert => 2,
            MoveKind::R2Delete => -2,
            MoveKind::R3 => 0,
        }
    }
}

impl fmt::Display for MoveSite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sym = |s: &Sign| if *s == Sign::Positive { '+' } else { '-' };
        match self {
            MoveSite::R1Insert { gap, sign, over_first } => {
                let order = if *over_first { "OU" } else { "UO" };
                write!(f, "R1+ gap={gap} sign={} {order}", sym(sign))
            }
            MoveSite::R1Delete { label } => write!(f, "R1- {label}"),
            MoveSite::R2Insert { over_gap, under_gap, sign, parallel } => write!(
                f,
                "R2+ over={over_gap} under={under_gap} sign={} {}",
                sym(sign),
                if *parallel { "parallel" } else { "antiparallel" }
            ),
            MoveSite::R2Delete { first, second } => write!(f, "R2- {first} {second}"),
            MoveSite::R3 { p, q, r } => write!(f, "R3 {p} {q} {r}"),
        }
    }
}

/// Orders and signs around an R3 triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct R3Pattern {
    /// Top strand meets `p` before `q`.
    pub top_p_first: bool,
    /// Middle strand meets `p` before `r`.
    pub mid_p_first: bool,
    /// Bottom strand meets `q` before `r`.
    pub bot_q_first: bool,
    pub signs: [Sign; 3],
}

impl R3Pattern {
    /// The pattern after the move: every pair swapped, signs kept.
    pub fn moved(self) -> Self {
        R3Pattern {
            top_p_first: !self.top_p_first,
            mid_p_first: !self.mid_p_first,
            bot_q_first: !self.bot_q_first,
            ..self
        }
    }
}

/// All realizable R3 patterns.
///
/// Three lines `y = 0`, `y = x` and `y = 2 - x` form a triangle; moving the
/// first line to `y = 2` carries it across the opposite vertex. Every line is
/// parametrized by `x`, so the order of two crossings along an oriented line
/// is the order of their `x` coordinates (reversed for a backwards line).
/// Each orientation choice and each assignment of top/middle/bottom roles to
/// the lines yields one pattern per side.
pub fn r3_patterns() -> &'static BTreeSet<R3Pattern> {
    static PATTERNS: OnceLock<BTreeSet<R3Pattern>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        const DIRS: [(i64, i64); 3] = [(1, 0), (1, 1), (1, -1)];
        let meet = |y0: i64, a: usize, b: usize| -> i64 {
            match (a.min(b), a.max(b)) {
                (0, 1) => y0,
                (0, 2) => 2 - y0,
                _ => 1,
            }
        };
        let roles = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let mut out = BTreeSet::new();
        for y0 in [0, 2] {
            for orient in 0..8u32 {
                let eps = |line: usize| if orient >> line & 1 == 1 { -1 } else { 1 };
                let dir = |line: usize| (DIRS[line].0 * eps(line), DIRS[line].1 * eps(line));
                let sign = |over: usize, under: usize| {
                    let (a, b) = (dir(over), dir(under));
                    if a.0 * b.1 - a.1 * b.0 > 0 { Sign::Positive } else { Sign::Negative }
                };
                let before = |line: usize, c1: i64, c2: i64| eps(line) * c1 < eps(line) * c2;
                for [t, m, b] in roles {
                    let (xp, xq, xr) = (meet(y0, t, m), meet(y0, t, b), meet(y0, m, b));
                    out.insert(R3Pattern {
                        top_p_first: before(t, xp, xq),
                        mid_p_first: before(m, xp, xr),
                        bot_q_first: before(b, xq, xr),
                        signs: [sign(t, m), sign(t, b), sign(m, b)],
                    });
                }
            }
        }
        out
    })
}

fn gap_count(code: &GaussCode) -> usize {
    code.len().max(1)
}

fn position(code: &GaussCode, label: u32, strand: Strand) -> Option<usize> {
    let c = code.crossing(label)?;
    Some(if strand == Strand::Over { c.over } else { c.under })
}

/// `Some(true)` when `b` follows `a` directly, `Some(false)` when it precedes.
fn adjacent(m: usize, a: usize, b: usize) -> Option<bool> {
    if (a + 1) % m == b {
        Some(true)
    } else if (b + 1) % m == a {
        Some(false)
    } else {
        None
    }
}

fn r1_delete_sites(code: &GaussCode) -> Vec<MoveSite> {
    let m = code.len();
    code.crossings()
        .iter()
        .filter(|c| adjacent(m, c.over, c.under).is_some())
        .map(|c| MoveSite::R1Delete { label: c.label })
        .collect()
}

fn r2_pair_ok(code: &GaussCode, a: u32, b: u32) -> bool {
    let (Some(x), Some(y)) = (code.crossing(a), code.crossing(b)) else { return false };
    let m = code.len();
    a != b
        && x.sign != y.sign
        && adjacent(m, x.over, y.over).is_some()
        && adjacent(m, x.under, y.under).is_some()
}

fn r2_delete_sites(code: &GaussCode) -> Vec<MoveSite> {
    let m = code.len();
    let mut out = Vec::new();
    for x in code.crossings() {
        let next = code.passes()[(x.over + 1) % m];
        if next.strand == Strand::Over && r2_pair_ok(code, x.label, next.label) {
            out.push(MoveSite::R2Delete { first: x.label, second: next.label });
        }
    }
    out
}

fn r3_pattern_at(code: &GaussCode, p: u32, q: u32, r: u32) -> Option<R3Pattern> {
    if p == q || q == r || p == r {
        return None;
    }
    let m = code.len();
    let (cp, cq, cr) = (code.crossing(p)?, code.crossing(q)?, code.crossing(r)?);
    Some(R3Pattern {
        top_p_first: adjacent(m, cp.over, cq.over)?,
        mid_p_first: adjacent(m, cp.under, cr.over)?,
        bot_q_first: adjacent(m, cq.under, cr.under)?,
        signs: [cp.sign, cq.sign, cr.sign],
    })
}

fn r3_sites(code: &GaussCode) -> Vec<MoveSite> {
    let m = code.len();
    if m < 6 {
        return Vec::new();
    }
    let p_at = |i: usize| code.passes()[i % m];
    let neighbors = |pos: usize| [p_at(pos + 1), p_at(pos + m - 1)];
    let mut out = Vec::new();
    for cp in code.crossings() {
        for q in neighbors(cp.over).into_iter().filter(|x| x.strand == Strand::Over) {
            let Some(cq) = code.crossing(q.label) else { continue };
            for r in neighbors(cp.under).into_iter().filter(|x| x.strand == Strand::Over) {
                let under_r = position(code, r.label, Strand::Under).expect("label present");
                if adjacent(m, cq.under, under_r).is_none() {
                    continue;
                }
                if let Some(pat) = r3_pattern_at(code, cp.label, q.label, r.label) {
                    if r3_patterns().contains(&pat) {
                        out.push(MoveSite::R3 { p: cp.label, q: q.label, r: r.label });
                    }
                }
            }
        }
    }
    out
}

fn r1_insert_count(code: &GaussCode) -> usize {
    gap_count(code) * 4
}

fn r1_insert_nth(k: usize) -> MoveSite {
    let sign = if k & 1 == 0 { Sign::Positive } else { Sign::Negative };
    MoveSite::R1Insert { gap: k / 4, sign, over_first: k & 2 == 0 }
}

fn r2_insert_count(code: &GaussCode) -> usize {
    gap_count(code) * (code.len() + 1) * 4
}

fn r2_insert_nth(code: &GaussCode, k: usize) -> MoveSite {
    let sign = if k & 1 == 0 { Sign::Positive } else { Sign::Negative };
    let parallel = k & 2 == 0;
    let rest = k / 4;
    let over_gap = rest / (code.len() + 1);
    let mut under_gap = rest % (code.len() + 1);
    // Skip the gap between the two new over passes.
    if under_gap > over_gap {
        under_gap += 1;
    }
    MoveSite::R2Insert { over_gap, under_gap, sign, parallel }
}

/// Every applicable move, grouped by kind.
pub fn enumerate_sites(code: &GaussCode) -> Vec<MoveSite> {
    let mut out: Vec<MoveSite> = (0..r1_insert_count(code)).map(|k| r1_insert_nth(k)).collect();
    out.extend(r1_delete_sites(code));
    out.extend((0..r2_insert_count(code)).map(|k| r2_insert_nth(code, k)));
    out.extend(r2_delete_sites(code));
    out.extend(r3_sites(code));
    out
}

fn rebuild(passes: Vec<Pass>) -> GaussCode {
    GaussCode::new(passes).expect("moves keep every crossing whole")
}

pub fn apply(code: &GaussCode, site: &MoveSite) -> Result<GaussCode> {
    let invalid = || Error::InvalidSite(site.to_string());
    let m = code.len();
    let mut passes = code.passes().to_vec();
    match *site {
        MoveSite::R1Insert { gap, sign, over_first } => {
            if gap >= gap_count(code) {
                return Err(invalid());
            }
            let x = code.fresh_label();
            let (a, b) = (Pass::over(x, sign), Pass::under(x, sign));
            let pair = if over_first { [a, b] } else { [b, a] };
            passes.splice(gap..gap, pair);
        }
        MoveSite::R1Delete { label } => {
            let c = code.crossing(label).ok_or_else(invalid)?;
            adjacent(m, c.over, c.under).ok_or_else(invalid)?;
            passes.retain(|q| q.label != label);
        }
        MoveSite::R2Insert { over_gap, under_gap, sign, parallel } => {
            if over_gap >= gap_count(code) || under_gap > m + 1 || under_gap == over_gap + 1 {
                return Err(invalid());
            }
            let a = code.fresh_label();
            let b = a + 1;
            passes.splice(over_gap..over_gap, [Pass::over(a, sign), Pass::over(b, -sign)]);
            let unders = [Pass::under(a, sign), Pass::under(b, -sign)];
            let unders = if parallel { unders } else { [unders[1], unders[0]] };
            passes.splice(under_gap..under_gap, unders);
        }
        MoveSite::R2Delete { first, second } => {
            if !r2_pair_ok(code, first, second) {
                return Err(invalid());
            }
            passes.retain(|q| q.label != first && q.label != second);
        }
        MoveSite::R3 { p, q, r } => {
            let pat = r3_pattern_at(code, p, q, r).ok_or_else(invalid)?;
            if !r3_patterns().contains(&pat) {
                return Err(invalid());
            }
            let pos = |l: u32, s: Strand| position(code, l, s).expect("checked above");
            for (x, y) in [
                (pos(p, Strand::Over), pos(q, Strand::Over)),
                (pos(p, Strand::Under), pos(r, Strand::Over)),
                (pos(q, Strand::Under), pos(r, Strand::Under)),
            ] {
                passes.swap(x, y);
            }
        }
    }
    Ok(rebuild(passes))
}

fn random_site(code: &GaussCode, rng: &mut ChaCha8Rng, max_crossings: usize) -> Option<MoveSite> {
    let n = code.crossing_count();
    let r1d = r1_delete_sites(code);
    let r2d = r2_delete_sites(code);
    let r3 = r3_sites(code);
    let mut kinds = Vec::new();
    if n < max_crossings {
        kinds.push(MoveKind::R1Insert);
    }
    if n + 2 <= max_crossings {
        kinds.push(MoveKind::R2Insert);
    }
    for (kind, sites) in [(MoveKind::R1Delete, &r1d), (MoveKind::R2Delete, &r2d), (MoveKind::R3, &r3)] {
        if !sites.is_empty() {
            kinds.push(kind);
        }
    }
    if kinds.is_empty() {
        return None;
    }
    let pick = |rng: &mut ChaCha8Rng, v: &[MoveSite]| v[rng.random_range(0..v.len())];
    Some(match kinds[rng.random_range(0..kinds.len())] {
        MoveKind::R1Insert => r1_insert_nth(rng.random_range(0..r1_insert_count(code))),
        MoveKind::R2Insert => r2_insert_nth(code, rng.random_range(0..r2_insert_count(code))),
        MoveKind::R1Delete => pick(rng, &r1d),
        MoveKind::R2Delete => pick(rng, &r2d),
        MoveKind::R3 => pick(rng, &r3),
    })
}

/// Applies `steps` random moves and returns every intermediate site. At each
/// step a move kind is chosen uniformly among the kinds that apply, then a
/// site of that kind uniformly. Inserts that would exceed `max_crossings` are
/// never chosen; a step with no admissible move leaves the code unchanged.
pub fn random_walk_trace(
    code: &GaussCode,
    steps: usize,
    seed: u64,
    max_crossings: usize,
) -> (GaussCode, Vec<MoveSite>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cur = code.clone();
    let mut trace = Vec::with_capacity(steps);
    for _ in 0..steps {
        if let Some(site) = random_site(&cur, &mut rng, max_crossings) {
            cur = apply(&cur, &site).expect("sampled sites apply");
            trace.push(site);
        }
    }
    (cur, trace)
}

pub fn random_walk(code: &GaussCode, steps: usize, seed: u64, max_crossings: usize) -> GaussCode {
    random_walk_trace(code, steps, seed, max_crossings).0
}

/// Seed of walk `k` in a fuzz run started with `seed`.
pub fn walk_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub walk: usize,
    pub seed: u64,
    pub step: usize,
    pub before: String,
    pub after: String,
    pub difference: String,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzSummary {
    pub start: String,
    pub walks: usize,
    pub moves_per_walk: usize,
    pub moves_applied: usize,
    pub max_crossings_seen: usize,
    pub violations: Vec<Violation>,
}

/// Runs `walks` independent walks and compares the invariant signature after
/// every move with the one of the start diagram. Walk `k` replays with
/// `random_walk(code, moves, walk_seed(seed, k), max_crossings)`.
pub fn fuzz(code: &GaussCode, walks: usize, moves: usize, seed: u64, max_crossings: usize) -> FuzzSummary {
    use rayon::prelude::*;

    let reference = lfpoly::bundle(code).signature();
    let results: Vec<(usize, usize, Option<Violation>)> = (0..walks)
        .into_par_iter()
        .map(|k| {
            let s = walk_seed(seed, k);
            let (_, trace) = random_walk_trace(code, moves, s, max_crossings);
            let mut cur = code.clone();
            let mut peak = cur.crossing_count();
            for (step, site) in trace.iter().enumerate() {
                let next = apply(&cur, site).expect("replayed site applies");
                peak = peak.max(next.crossing_count());
                let sig = lfpoly::bundle(&next).signature();
                if let Some(diff) = reference.first_difference(&sig) {
                    let v = Violation {
                        walk: k,
                        seed: s,
                        step,
                        before: cur.to_string(),
                        after: next.to_string(),
                        difference: diff,
                        trace: trace[..=step].iter().map(|m| m.to_string()).collect(),
                    };
                    return (step + 1, peak, Some(v));
                }
                cur = next;
            }
            (trace.len(), peak, None)
        })
        .collect();

    FuzzSummary {
        start: code.serialize(),
        walks,
        moves_per_walk: moves,
        moves_applied: results.iter().map(|r| r.0).sum(),
        max_crossings_seen: results.iter().map(|r| r.1).max().unwrap_or(0),
        violations: results.into_iter().filter_map(|r| r.2).collect(),
    }
}
