//! Signed Gauss codes: parsing, validation, canonical serialization.
//!
//! A virtual knot diagram is stored as the cyclic word of its classical
//! crossings met along the orientation. Each crossing contributes one over
//! pass and one under pass, both tagged with the crossing sign. Virtual
//! crossings leave no trace in the word, so the virtual Reidemeister moves and
//! the semi-virtual move act as the identity on this representation.
//!
//! Grammar (ASCII, whitespace around separators ignored):
//!
//! ```text
//! code  := '' | token (','? token)*
//! token := ('O' | 'U') label sign
//! label := [1-9][0-9]*
//! sign  := '+' | '-'
//! ```

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Strand {
    Over,
    Under,
}

impl Strand {
    pub fn flip(self) -> Self {
        match self {
            Strand::Over => Strand::Under,
            Strand::Under => Strand::Over,
        }
    }

    fn letter(self) -> char {
        match self {
            Strand::Over => 'O',
            Strand::Under => 'U',
        }
    }
}

impl fmt::Display for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strand::Over => "over",
            Strand::Under => "under",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "-")]
    Negative,
    #[serde(rename = "+")]
    Positive,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

/// One passage of the knot through a classical crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Pass {
    pub label: u32,
    pub strand: Strand,
    pub sign: Sign,
}

impl Pass {
    pub fn new(label: u32, strand: Strand, sign: Sign) -> Self {
        Pass { label, strand, sign }
    }

    pub fn over(label: u32, sign: Sign) -> Self {
        Pass::new(label, Strand::Over, sign)
    }

    pub fn under(label: u32, sign: Sign) -> Self {
        Pass::new(label, Strand::Under, sign)
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.strand.letter(), self.label, self.sign.symbol())
    }
}

/// A classical crossing together with the word positions of its two passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub label: u32,
    pub sign: Sign,
    pub over: usize,
    pub under: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("malformed token at byte {position}: {found:?}")]
    MalformedToken { position: usize, found: String },
    #[error("crossing {label} has two {strand} passes")]
    DuplicateStrand { label: u32, strand: Strand },
    #[error("crossing {label} carries different signs on its two passes")]
    SignMismatch { label: u32 },
    #[error("crossing {label} occurs {count} time(s); expected exactly 2")]
    OddOccurrence { label: u32, count: usize },
}

impl CodecError {
    /// Short stable name of the error class, used by the CLI and the C ABI.
    pub fn kind(&self) -> &'static str {
        match self {
            CodecError::MalformedToken { .. } => "MalformedToken",
            CodecError::DuplicateStrand { .. } => "DuplicateStrand",
            CodecError::SignMismatch { .. } => "SignMismatch",
            CodecError::OddOccurrence { .. } => "OddOccurrence",
        }
    }
}

/// A validated signed Gauss code.
///
/// The pass sequence is kept exactly as constructed (rotation and labels are
/// not normalized); [`GaussCode::canonical`] and [`GaussCode::serialize`]
/// produce the normal form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussCode {
    passes: Vec<Pass>,
    crossings: Vec<Crossing>,
}

impl GaussCode {
    pub fn empty() -> Self {
        GaussCode { passes: Vec::new(), crossings: Vec::new() }
    }

    /// Validates a pass sequence. Errors are reported for the first offending
    /// label in order of first appearance.
    pub fn new(passes: Vec<Pass>) -> Result<Self, CodecError> {
        let mut order: Vec<u32> = Vec::new();
        let mut seen: HashMap<u32, Vec<usize>> = HashMap::new();
        for (pos, p) in passes.iter().enumerate() {
            let entry = seen.entry(p.label).or_default();
            if entry.is_empty() {
                order.push(p.label);
            }
            entry.push(pos);
        }

        let mut crossings = Vec::with_capacity(order.len());
        for label in order {
            let positions = &seen[&label];
            if positions.len() != 2 {
                return Err(CodecError::OddOccurrence { label, count: positions.len() });
            }
            let (p, q) = (passes[positions[0]], passes[positions[1]]);
            if p.strand == q.strand {
                return Err(CodecError::DuplicateStrand { label, strand: p.strand });
            }
            if p.sign != q.sign {
                return Err(CodecError::SignMismatch { label });
            }
            let (over, under) = if p.strand == Strand::Over {
                (positions[0], positions[1])
            } else {
                (positions[1], positions[0])
            };
            crossings.push(Crossing { label, sign: p.sign, over, under });
        }
        Ok(GaussCode { passes, crossings })
    }

    pub fn parse(text: &str) -> Result<Self, CodecError> {
        GaussCode::new(tokenize(text)?)
    }

    pub fn passes(&self) -> &[Pass] {
        &self.passes
    }

    /// Number of passes (twice the number of classical crossings).
    pub fn len(&self) -> usize {
        self.passes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.passes.is_empty()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossings in order of first appearance in the word.
    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, label: u32) -> Option<&Crossing> {
        self.crossings.iter().find(|c| c.label == label)
    }

    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        self.crossings.iter().map(|c| c.label)
    }

    /// One more than the largest label in use.
    pub fn fresh_label(&self) -> u32 {
        self.labels().max().map_or(1, |m| m + 1)
    }

    /// Number of arcs: one per pass, or a single arc for the unknot.
    pub fn arc_count(&self) -> usize {
        self.passes.len().max(1)
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.value()).sum()
    }

    /// The word read starting at position `start`.
    pub fn rotated(&self, start: usize) -> GaussCode {
        if self.passes.is_empty() {
            return self.clone();
        }
        let m = self.passes.len();
        let passes = (0..m).map(|k| self.passes[(start + k) % m]).collect();
        GaussCode::new(passes).expect("rotation preserves validity")
    }

    /// Labels renumbered 1..k in order of first appearance.
    pub fn relabeled(&self) -> GaussCode {
        let map: HashMap<u32, u32> =
            self.crossings.iter().enumerate().map(|(i, c)| (c.label, i as u32 + 1)).collect();
        let passes = self.passes.iter().map(|p| Pass { label: map[&p.label], ..*p }).collect();
        GaussCode::new(passes).expect("relabeling preserves validity")
    }

    /// Normal form: relabeled by first appearance, rotated so that the
    /// serialization is lexicographically least.
    pub fn canonical(&self) -> GaussCode {
        if self.passes.is_empty() {
            return GaussCode::empty();
        }
        (0..self.passes.len())
            .map(|r| {
                let code = self.rotated(r).relabeled();
                let text = code.to_string();
                (text, code)
            })
            .min_by(|a, b| a.0.cmp(&b.0))
            .map(|(_, code)| code)
            .expect("non-empty")
    }

    /// Canonical string form.
    pub fn serialize(&self) -> String {
        self.canonical().to_string()
    }

    /// True when both codes have the same canonical form.
    pub fn same_diagram(&self, other: &GaussCode) -> bool {
        self.canonical() == other.canonical()
    }
}

impl Default for GaussCode {
    fn default() -> Self {
        GaussCode::empty()
    }
}

/// Writes the word as stored, without normalization.
impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.passes {
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for GaussCode {
    type Err = CodecError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GaussCode::parse(s)
    }
}

pub fn parse(text: &str) -> Result<GaussCode, CodecError> {
    GaussCode::parse(text)
}

pub fn serialize(code: &GaussCode) -> String {
    code.serialize()
}

pub fn writhe(code: &GaussCode) -> i64 {
    code.writhe()
}

fn tokenize(text: &str) -> Result<Vec<Pass>, CodecError> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut passes = Vec::new();
    let malformed = |pos: usize| {
        let end = text[pos..].find([',', ' ', '\t', '\n', '\r']).map_or(text.len(), |k| pos + k);
        let end = end.max((pos + 1).min(text.len()));
        CodecError::MalformedToken { position: pos, found: text[pos..end].to_string() }
    };
    let skip_ws = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_whitespace() {
            *i += 1;
        }
    };

    skip_ws(&mut i);
    while i < bytes.len() {
        let start = i;
        let strand = match bytes[i] {
            b'O' | b'o' => Strand::Over,
            b'U' | b'u' => Strand::Under,
            _ => return Err(malformed(start)),
        };
        i += 1;
        let digits = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        if i == digits || bytes[digits] == b'0' {
            return Err(malformed(start));
        }
        let label: u32 = text[digits..i].parse().map_err(|_| malformed(start))?;
        let sign = match bytes.get(i) {
            Some(b'+') => Sign::Positive,
            Some(b'-') => Sign::Negative,
            _ => return Err(malformed(start)),
        };
        i += 1;
        passes.push(Pass { label, strand, sign });

        skip_ws(&mut i);
        if i < bytes.len() && bytes[i] == b',' {
            i += 1;
            skip_ws(&mut i);
            if i >= bytes.len() || bytes[i] == b',' {
                return Err(malformed(i.min(bytes.len().saturating_sub(1))));
            }
        }
    }
    Ok(passes)
}
