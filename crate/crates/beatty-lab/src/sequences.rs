//! Integer sequences around the parity of ⌊n√2⌋, and OEIS b-file interchange.
//!
//! Three sequences are generated here, all by linear scan with exact
//! evaluation (no closed-form jumping):
//!
//! - A083035: the parity bits ⌊n√2⌋ mod 2 for n = 1, 2, …
//! - A090892: indices n ≥ 0 with ⌊√2·n·⌊n/√2⌋⌋ = ⌊(n/√2)·⌊n√2⌋⌋ (condition d)
//! - A120752: indices n ≥ 1 with {n/√2} ≤ 1/2 (condition b)
//!
//! Dropping the two leading terms of the d-sequence (n = 0 and n = 1, which
//! satisfy (d) but not (b)) yields the b-sequence; [`shift_identity_check`]
//! verifies that instead of assuming it.

use num_bigint::BigInt;

use crate::beatty::{beatty_sqrt2, condition_b, condition_d};
use crate::error::{Error, Result};
use crate::exact::Natural;
use crate::jobs::parallel_spans;

/// A finite 0/1 sequence with the index of its first element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitStream {
    bits: Vec<u8>,
    origin_index: i64,
}

impl BitStream {
    /// Validates that every element is 0 or 1.
    pub fn new(bits: Vec<u8>, origin_index: i64) -> Result<Self> {
        if let Some((position, &value)) = bits.iter().enumerate().find(|(_, &b)| b > 1) {
            return Err(Error::InvalidBit { position, value });
        }
        Ok(Self { bits, origin_index })
    }

    /// A stream indexed from 1, the convention for parity sequences.
    pub fn from_bits(bits: Vec<u8>) -> Result<Self> {
        Self::new(bits, 1)
    }

    /// Parses a bare digit string such as `"10011"`.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .bytes()
            .enumerate()
            .map(|(position, byte)| match byte {
                b'0' => Ok(0),
                b'1' => Ok(1),
                other => Err(Error::InvalidBit {
                    position,
                    value: other,
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Self::from_bits(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn origin_index(&self) -> i64 {
        self.origin_index
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }
}

/// The parity sequence of the Beatty values: bit_n = ⌊n√2⌋ mod 2 for
/// n = 1..=count.
pub fn parity_bits(count: u64) -> BitStream {
    let bits = (1..=count)
        .map(|n| u8::from(beatty_sqrt2(&Natural::from(n)).bit(0)))
        .collect();
    BitStream { bits, origin_index: 1 }
}

/// Which of the three sequences to generate or compare against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SequenceId {
    /// Parity bits of ⌊n√2⌋, indexed from 1.
    ParityA083035,
    /// Indices satisfying condition (d), indexed from 0.
    CondDA090892,
    /// Indices satisfying condition (b), indexed from 1.
    CondBA120752,
}

impl SequenceId {
    /// The index the sequence naturally starts generating from.
    pub fn natural_start(self) -> u64 {
        match self {
            SequenceId::ParityA083035 => 1,
            SequenceId::CondDA090892 => 0,
            SequenceId::CondBA120752 => 1,
        }
    }

    /// The defining predicate at index n. For the parity sequence this is
    /// "the bit is set", i.e. ⌊n√2⌋ is odd.
    pub fn holds_at(self, n: &Natural) -> bool {
        match self {
            SequenceId::ParityA083035 => beatty_sqrt2(n).bit(0),
            SequenceId::CondDA090892 => condition_d(n),
            SequenceId::CondBA120752 => condition_b(n),
        }
    }

    /// OEIS-style lowercase tag, e.g. `a083035`.
    pub fn tag(self) -> &'static str {
        match self {
            SequenceId::ParityA083035 => "a083035",
            SequenceId::CondDA090892 => "a090892",
            SequenceId::CondBA120752 => "a120752",
        }
    }
}

impl std::fmt::Display for SequenceId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// A sequence choice plus the index generation starts from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceSpec {
    pub id: SequenceId,
    pub start_index: Natural,
}

impl SequenceSpec {
    /// Spec starting at the sequence's natural offset.
    pub fn new(id: SequenceId) -> Self {
        Self {
            id,
            start_index: Natural::from(id.natural_start()),
        }
    }

    /// Spec starting at an explicit index (used to probe boundary behavior).
    pub fn with_start(id: SequenceId, start_index: Natural) -> Self {
        Self { id, start_index }
    }
}

fn naturals_from(start: Natural) -> impl Iterator<Item = Natural> {
    std::iter::successors(Some(start), |n| Some(n + 1u32))
}

/// Infinite iterator over the indices n ≥ start satisfying the sequence's
/// predicate.
pub fn index_iter(spec: &SequenceSpec) -> impl Iterator<Item = Natural> {
    let id = spec.id;
    naturals_from(spec.start_index.clone()).filter(move |n| id.holds_at(n))
}

/// Infinite iterator over the sequence's terms in OEIS order: parity yields
/// the bits themselves, the condition sequences yield satisfying indices.
pub fn term_iter(spec: &SequenceSpec) -> Box<dyn Iterator<Item = Natural>> {
    match spec.id {
        SequenceId::ParityA083035 => Box::new(
            naturals_from(spec.start_index.clone())
                .map(|n| Natural::from(u8::from(beatty_sqrt2(&n).bit(0)))),
        ),
        _ => Box::new(index_iter(spec)),
    }
}

/// First `count` indices n ≥ start satisfying the sequence's condition.
pub fn satisfying_indices(spec: &SequenceSpec, count: usize) -> Vec<Natural> {
    index_iter(spec).take(count).collect()
}

/// [`satisfying_indices`] with the scan chunked across `jobs` workers in
/// fixed-size blocks merged in order; the result does not depend on `jobs`.
pub fn satisfying_indices_jobs(spec: &SequenceSpec, count: usize, jobs: usize) -> Vec<Natural> {
    if jobs <= 1 {
        return satisfying_indices(spec, count);
    }
    const BLOCK: u64 = 8_192;
    let id = spec.id;
    let mut out = Vec::with_capacity(count);
    let mut base = spec.start_index.clone();
    while out.len() < count {
        let round = BLOCK * jobs as u64;
        let hits = parallel_spans(round, jobs, |from, to| {
            let mut found = Vec::new();
            let mut n = &base + from;
            for _ in from..to {
                if id.holds_at(&n) {
                    found.push(n.clone());
                }
                n += 1u32;
            }
            found
        });
        for n in hits.into_iter().flatten() {
            if out.len() == count {
                break;
            }
            out.push(n);
        }
        base += round;
    }
    out
}

/// True iff the d-sequence generated from n = 0, with its first two terms
/// removed, equals the b-sequence generated from n = 1 over `count` terms.
pub fn shift_identity_check(count: usize) -> bool {
    assert!(count >= 1, "count must be at least 1");
    let d_terms = satisfying_indices(&SequenceSpec::new(SequenceId::CondDA090892), count + 2);
    let b_terms = satisfying_indices(&SequenceSpec::new(SequenceId::CondBA120752), count);
    d_terms[2..] == b_terms[..]
}

/// One `index value` pair from an OEIS b-file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileEntry {
    pub index: i64,
    pub value: BigInt,
}

/// Parses OEIS b-file text: one `index value` pair per line, whitespace
/// separated; `#` comment lines and blank lines are ignored; LF or CRLF.
/// Indices must be strictly increasing.
pub fn parse_bfile(text: &str) -> Result<Vec<BFileEntry>> {
    let mut entries: Vec<BFileEntry> = Vec::new();
    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |reason: &str| Error::MalformedBFileLine {
            line: line_no,
            reason: reason.to_owned(),
        };
        let mut tokens = line.split_whitespace();
        let index_tok = tokens.next().ok_or_else(|| malformed("empty line"))?;
        let value_tok = tokens
            .next()
            .ok_or_else(|| malformed("missing value field"))?;
        if tokens.next().is_some() {
            return Err(malformed("more than two fields"));
        }
        let index: i64 = index_tok
            .parse()
            .map_err(|_| malformed("index is not an integer"))?;
        let value: BigInt = value_tok
            .parse()
            .map_err(|_| malformed("value is not an integer"))?;
        if let Some(last) = entries.last() {
            if index <= last.index {
                return Err(Error::NonMonotoneIndex { line: line_no });
            }
        }
        entries.push(BFileEntry { index, value });
    }
    Ok(entries)
}

/// Renders entries back to b-file text, one `index value` pair per line.
pub fn serialize_bfile(entries: &[BFileEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!("{} {}\n", e.index, e.value));
    }
    out
}

/// First disagreement between a b-file and the regenerated sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: i64,
    pub expected: Natural,
    pub got: BigInt,
}

/// Outcome of [`compare_with_bfile`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFileComparison {
    pub matches: bool,
    pub first_mismatch: Option<Mismatch>,
    /// Number of entries checked (all of them when `matches`).
    pub checked: usize,
}

/// Regenerates the sequence over the file's indices and reports the first
/// disagreement, if any. The OEIS offset is taken from the file's first
/// index: entry `i` is compared against term number `i - first_index`.
pub fn compare_with_bfile(entries: &[BFileEntry], spec: &SequenceSpec) -> BFileComparison {
    assert!(!entries.is_empty(), "entries must be nonempty");
    let first_index = entries[0].index;
    let mut terms = term_iter(spec);
    let mut cache: Vec<Natural> = Vec::new();
    for (checked, entry) in entries.iter().enumerate() {
        let term_no = (entry.index - first_index) as usize;
        while cache.len() <= term_no {
            cache.push(terms.next().expect("term iterators are infinite"));
        }
        let expected = &cache[term_no];
        if BigInt::from(expected.clone()) != entry.value {
            return BFileComparison {
                matches: false,
                first_mismatch: Some(Mismatch {
                    index: entry.index,
                    expected: expected.clone(),
                    got: entry.value.clone(),
                }),
                checked,
            };
        }
    }
    BFileComparison {
        matches: true,
        first_mismatch: None,
        checked: entries.len(),
    }
}
