//! Diagram operators as Gauss-code rewrites.

use std::collections::BTreeSet;

use crate::codec::{GaussCode, Pass};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothedDiagram {
    pub result: GaussCode,
    pub removed_label: u32,
    pub flipped_labels: BTreeSet<u32>,
}

/// Smooths crossing `c` against the orientation.
///
/// Read the word as `O_c A U_c B`. The smoothing joins the incoming over arc
/// to the incoming under arc and the outgoing arcs to each other, so one of
/// the two loops has to be traversed backwards. We keep `A` in its direction
/// and run `B` backwards: the result is the cyclic word `A reverse(B)`.
/// A crossing with exactly one pass in `B` has one strand reversed, so its
/// sign flips. Over/under information does not depend on orientation.
pub fn smooth_against(code: &GaussCode, c: u32) -> Result<SmoothedDiagram> {
    let x = code.crossing(c).ok_or(Error::UnknownCrossing(c))?;
    let m = code.len();
    let p = code.passes();
    let segment = |from: usize, to: usize| -> Vec<Pass> {
        let mut out = Vec::new();
        let mut k = (from + 1) % m;
        while k != to {
            out.push(p[k]);
            k = (k + 1) % m;
        }
        out
    };
    let a = segment(x.over, x.under);
    let mut b = segment(x.under, x.over);

    let in_a: BTreeSet<u32> = a.iter().map(|q| q.label).collect();
    let in_b: BTreeSet<u32> = b.iter().map(|q| q.label).collect();
    let flipped: BTreeSet<u32> = in_a.intersection(&in_b).copied().collect();

    b.reverse();
    let passes = a
        .into_iter()
        .chain(b)
        .map(|q| if flipped.contains(&q.label) { Pass { sign: -q.sign, ..q } } else { q })
        .collect();
    let result = GaussCode::new(passes).expect("smoothing keeps every remaining crossing whole");
    Ok(SmoothedDiagram { result, removed_label: c, flipped_labels: flipped })
}

/// Switches every crossing.
pub fn mirror(code: &GaussCode) -> GaussCode {
    let passes = code
        .passes()
        .iter()
        .map(|q| Pass { strand: q.strand.flip(), sign: -q.sign, ..*q })
        .collect();
    GaussCode::new(passes).expect("mirror keeps validity")
}

/// Reverses the orientation. Signs are unchanged since both strands turn.
pub fn reverse(code: &GaussCode) -> GaussCode {
    let mut passes = code.passes().to_vec();
    passes.reverse();
    GaussCode::new(passes).expect("reversal keeps validity")
}

pub fn crossing_change(code: &GaussCode, c: u32) -> Result<GaussCode> {
    code.crossing(c).ok_or(Error::UnknownCrossing(c))?;
    let passes = code
        .passes()
        .iter()
        .map(|q| if q.label == c { Pass { strand: q.strand.flip(), sign: -q.sign, ..*q } } else { *q })
        .collect();
    Ok(GaussCode::new(passes).expect("crossing change keeps validity"))
}
