#![allow(dead_code)]

use proptest::prelude::*;
use vknot::codec::{GaussCode, Pass, Sign, Strand};

/// Random valid codes with at most `max` crossings: every label gets a sign
/// and a choice of which of its two slots is the over pass, then the slots are
/// shuffled.
pub fn codes(max: usize) -> impl Strategy<Value = GaussCode> {
    (0..=max)
        .prop_flat_map(|k| {
            let slots: Vec<usize> = (0..2 * k).collect();
            (
                prop::collection::vec(any::<bool>(), k),
                prop::collection::vec(any::<bool>(), k),
                Just(slots).prop_shuffle(),
            )
        })
        .prop_map(|(signs, over_first, order)| {
            let passes = order
                .into_iter()
                .map(|slot| {
                    let label = (slot / 2) as u32 + 1;
                    let sign = if signs[slot / 2] { Sign::Positive } else { Sign::Negative };
                    let first = slot % 2 == 0;
                    let strand = if first == over_first[slot / 2] { Strand::Over } else { Strand::Under };
                    Pass::new(label, strand, sign)
                })
                .collect();
            GaussCode::new(passes).unwrap()
        })
}

/// Index of every crossing straight from the chord diagram: each chord that
/// interleaves `c` contributes its sign, counted positively when the pass it
/// has on the stretch from the over pass of `c` to the under pass of `c` is
/// its over pass and negatively otherwise.
pub fn chord_index(code: &GaussCode, label: u32) -> i64 {
    let m = code.len();
    let c = code.crossing(label).unwrap();
    let inside = |pos: usize| (pos + m - c.over) % m < (c.under + m - c.over) % m;
    code.crossings()
        .iter()
        .filter(|d| d.label != label && inside(d.over) != inside(d.under))
        .map(|d| if inside(d.over) { d.sign.value() } else { -d.sign.value() })
        .sum()
}
