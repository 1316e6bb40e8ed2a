//! Exact evaluation of the Beatty sequence of √2 and its parity conditions.
//!
//! Write p = ⌊n√2⌋ and q = ⌊n/√2⌋. Six conditions on n, each equivalent to
//! "p is even" once n ≥ 2, are decided here through exact integer
//! reductions. Each reduction is one line of algebra: isolate the radical,
//! square (valid, both sides nonnegative), and use ⌊√x⌋ = isqrt(⌊x⌋).
//!
//! | condition                            | integer reduction                  |
//! |--------------------------------------|------------------------------------|
//! | (a) p even                           | isqrt(2n²) mod 2 = 0               |
//! | (b) {n/√2} ≤ 1/2                     | 2n² ≤ (2q+1)²                      |
//! | (c) {n/√2} < 1/2                     | 2n² < (2q+1)²                      |
//! | (d) ⌊√2·n·q⌋ = ⌊(n/√2)·p⌋            | isqrt(2n²q²) = isqrt(⌊n²p²/2⌋)     |
//! | (e) q = ⌊√(n² − q²)⌋                 | q = isqrt(n² − q²)                 |
//! | (f) {n/√2} < √(q²+q+1/2) − q         | n² < 2q² + 2q + 1                  |
//!
//! (b) keeps the ≤ of the real-valued statement even though equality can
//! never occur (2n² is even, (2q+1)² is odd); the impossibility is a tested
//! invariant rather than a baked-in assumption, so (b) and (c) stay distinct
//! code paths. No floating point participates in any decision.

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{isqrt, sqrt2_fixed, Natural};
use crate::jobs::parallel_spans;

/// ⌊n√2⌋, computed as isqrt(2n²).
pub fn beatty_sqrt2(n: &Natural) -> Natural {
    isqrt(&(n * n * 2u32))
}

/// ⌊n/√2⌋, computed as isqrt(⌊n²/2⌋).
pub fn beatty_inv_sqrt2(n: &Natural) -> Natural {
    isqrt(&((n * n) >> 1))
}

fn flag_a(p: &Natural) -> bool {
    p.is_even()
}

fn flags_bc(n_sq: &Natural, q: &Natural) -> (bool, bool) {
    let odd: Natural = (q << 1) + 1u32;
    let odd_sq = &odd * &odd;
    let two_n_sq: Natural = n_sq * 2u32;
    (two_n_sq <= odd_sq, two_n_sq < odd_sq)
}

fn flag_d(n_sq: &Natural, p: &Natural, q: &Natural) -> bool {
    let left = isqrt(&(n_sq * q * q * 2u32));
    let right = isqrt(&((n_sq * p * p) >> 1));
    left == right
}

fn flag_e(n_sq: &Natural, q: &Natural) -> bool {
    *q == isqrt(&(n_sq - q * q))
}

fn flag_f(n_sq: &Natural, q: &Natural) -> bool {
    *n_sq < q * q * 2u32 + (q << 1) + 1u32
}

/// Condition (a): ⌊n√2⌋ is even.
pub fn condition_a(n: &Natural) -> bool {
    flag_a(&beatty_sqrt2(n))
}

/// Condition (b): {n/√2} ≤ 1/2.
pub fn condition_b(n: &Natural) -> bool {
    flags_bc(&(n * n), &beatty_inv_sqrt2(n)).0
}

/// Condition (c): {n/√2} < 1/2.
pub fn condition_c(n: &Natural) -> bool {
    flags_bc(&(n * n), &beatty_inv_sqrt2(n)).1
}

/// Condition (d): ⌊√2·n·⌊n/√2⌋⌋ = ⌊(n/√2)·⌊n√2⌋⌋.
pub fn condition_d(n: &Natural) -> bool {
    let n_sq = n * n;
    flag_d(&n_sq, &beatty_sqrt2(n), &beatty_inv_sqrt2(n))
}

/// Condition (e): ⌊n/√2⌋ = ⌊√(n² − ⌊n/√2⌋²)⌋.
pub fn condition_e(n: &Natural) -> bool {
    flag_e(&(n * n), &beatty_inv_sqrt2(n))
}

/// Condition (f): {n/√2} < √(q² + q + 1/2) − q with q = ⌊n/√2⌋.
pub fn condition_f(n: &Natural) -> bool {
    flag_f(&(n * n), &beatty_inv_sqrt2(n))
}

/// The six condition flags at one index, with the floor witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionVector {
    pub n: Natural,
    /// ⌊n√2⌋
    pub p: Natural,
    /// ⌊n/√2⌋
    pub q: Natural,
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
    pub f: bool,
    /// Decimal rendering of {n/√2}, display only. Never consulted by the
    /// flags above, which are decided before this field is filled.
    pub sigma_decimal: Option<String>,
}

impl ConditionVector {
    pub fn flags(&self) -> [bool; 6] {
        [self.a, self.b, self.c, self.d, self.e, self.f]
    }

    /// True when all six flags agree.
    pub fn unanimous(&self) -> bool {
        let [a, rest @ ..] = self.flags();
        rest.iter().all(|&x| x == a)
    }
}

/// Evaluates all six conditions at `n` exactly. Valid for every n ≥ 0; the
/// equivalence itself only kicks in at n ≥ 2, which is precisely what
/// [`check_equivalence`] lets you observe.
pub fn condition_vector(n: &Natural) -> ConditionVector {
    let n_sq = n * n;
    let p = isqrt(&(&n_sq * 2u32));
    let q = isqrt(&(&n_sq >> 1));
    let (b, c) = flags_bc(&n_sq, &q);
    ConditionVector {
        a: flag_a(&p),
        b,
        c,
        d: flag_d(&n_sq, &p, &q),
        e: flag_e(&n_sq, &q),
        f: flag_f(&n_sq, &q),
        n: n.clone(),
        p,
        q,
        sigma_decimal: None,
    }
}

/// Same as [`condition_vector`] but with the display-only σ field filled.
pub fn condition_vector_with_sigma(n: &Natural) -> ConditionVector {
    let mut cv = condition_vector(n);
    cv.sigma_decimal = Some(sigma_decimal(n));
    cv
}

/// Decimal approximation of σ = {n/√2} to 12 digits, computed from the
/// fixed-point √2 expansion at 64 guard bits. For human output only.
pub fn sigma_decimal(n: &Natural) -> String {
    let frac_bits = n.bits() + 64;
    let q = beatty_inv_sqrt2(n);
    // n·⌊√2·2^F⌋ ≈ (n/√2)·2^(F+1); subtract q·2^(F+1) to isolate σ.
    let scaled = n * sqrt2_fixed(frac_bits) - (q << (frac_bits + 1));
    let digits = (scaled * Natural::from(10u64).pow(12)) >> (frac_bits + 1);
    format!("0.{:0>12}", digits.to_string())
}

/// Outcome of sweeping [`condition_vector`] over an inclusive range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub lo: Natural,
    pub hi: Natural,
    pub checked: u64,
    /// Indices where the six flags were not unanimous.
    pub counterexamples: Vec<ConditionVector>,
}

/// Evaluates every n in `[lo, hi]` and collects the indices where the six
/// flags disagree.
pub fn check_equivalence(lo: &Natural, hi: &Natural) -> EquivalenceReport {
    check_equivalence_jobs(lo, hi, 1)
}

/// [`check_equivalence`] with the range partitioned across `jobs` workers.
/// The report is identical for every worker count.
pub fn check_equivalence_jobs(lo: &Natural, hi: &Natural, jobs: usize) -> EquivalenceReport {
    assert!(lo <= hi, "range must satisfy lo <= hi");
    let len = ((hi - lo) + 1u32)
        .to_u64()
        .expect("sweep range too large");
    let per_span = parallel_spans(len, jobs, |from, to| {
        let mut found = Vec::new();
        let mut n = lo + from;
        for _ in from..to {
            let cv = condition_vector(&n);
            if !cv.unanimous() {
                found.push(cv);
            }
            n += 1u32;
        }
        found
    });
    EquivalenceReport {
        lo: lo.clone(),
        hi: hi.clone(),
        checked: len,
        counterexamples: per_span.into_iter().flatten().collect(),
    }
}

/// ⌊n√2⌋ − m·⌊n√2/m⌋ on the exact path, which supports m = 2 only:
/// the result is p − 2q and always lands in {0, 1}.
pub fn eq1_residue(n: &Natural, m: &Natural) -> Result<Natural> {
    if *m != Natural::from(2u32) {
        return Err(Error::UnsupportedModulus(m.clone()));
    }
    let p = beatty_sqrt2(n);
    let two_q: Natural = beatty_inv_sqrt2(n) << 1;
    debug_assert!(p >= two_q);
    Ok(p - two_q)
}

/// A nonnegative rational in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalValue {
    numerator: Natural,
    denominator: Natural,
}

impl RationalValue {
    pub fn new(numerator: Natural, denominator: Natural) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let g = numerator.gcd(&denominator);
        Ok(Self {
            numerator: numerator / &g,
            denominator: denominator / g,
        })
    }

    pub fn from_integer(n: Natural) -> Self {
        Self {
            numerator: n,
            denominator: Natural::one(),
        }
    }

    pub fn numerator(&self) -> &Natural {
        &self.numerator
    }

    pub fn denominator(&self) -> &Natural {
        &self.denominator
    }
}

impl std::str::FromStr for RationalValue {
    type Err = Error;

    /// Parses `"p"` or `"p/q"` with decimal nonnegative components.
    fn from_str(s: &str) -> Result<Self> {
        let invalid = || Error::InvalidRational { input: s.to_owned() };
        match s.split_once('/') {
            None => Ok(Self::from_integer(s.trim().parse().map_err(|_| invalid())?)),
            Some((num, den)) => Self::new(
                num.trim().parse().map_err(|_| invalid())?,
                den.trim().parse().map_err(|_| invalid())?,
            ),
        }
    }
}

impl std::fmt::Display for RationalValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Decides √(x² + x + 1/2) − x > 1/2 exactly for rational x = a/b ≥ 0 via
/// the cleared form (2a + b)² < 4a² + 4ab + 2b². Holds for every input.
pub fn lemma1_holds(x: &RationalValue) -> bool {
    let a = &x.numerator;
    let b = &x.denominator;
    let lhs_root: Natural = (a << 1) + b;
    let lhs = &lhs_root * &lhs_root;
    let rhs = a * a * 4u32 + a * b * 4u32 + b * b * 2u32;
    lhs < rhs
}

/// ⌊n(2 + √2)⌋ = 2n + ⌊n√2⌋, the value complementary to [`beatty_sqrt2`]
/// under the Rayleigh/Beatty partition. Defined for n ≥ 1.
pub fn complement_partner(n: &Natural) -> Result<Natural> {
    if n.is_zero() {
        return Err(Error::ZeroIndex);
    }
    Ok((n << 1) + beatty_sqrt2(n))
}

/// Result of checking that the two value sets partition `1..=limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementarityReport {
    pub limit: Natural,
    pub covered: bool,
    /// Values in `1..=limit` hit by both (or twice within one) sequence.
    pub duplicates: Vec<Natural>,
    /// Values in `1..=limit` hit by neither sequence.
    pub gaps: Vec<Natural>,
}

/// Generates {⌊n√2⌋} and {⌊n(2+√2)⌋} up to `limit` and reports whether
/// together they cover `1..=limit` exactly once each.
pub fn complementarity_check(limit: &Natural) -> ComplementarityReport {
    complementarity_check_jobs(limit, 1)
}

/// [`complementarity_check`] with value generation chunked across workers.
pub fn complementarity_check_jobs(limit: &Natural, jobs: usize) -> ComplementarityReport {
    assert!(!limit.is_zero(), "limit must be at least 1");
    let lim = limit
        .to_u64()
        .and_then(|v| usize::try_from(v).ok())
        .expect("complementarity limit too large for an in-memory check");

    // Last n whose value stays within the limit, for each stream:
    // ⌊n√2⌋ ≤ L  ⇔  n ≤ ⌊(L+1)/√2⌋, and the partner analogously.
    let bound: Natural = limit + 1u32;
    let inv = beatty_inv_sqrt2(&bound).to_u64().expect("bounded by limit");
    let n_max_beatty = inv;
    let n_max_partner = lim as u64 - inv;

    let mut counts = vec![0u8; lim + 1];
    let mut tally = |values: Vec<Vec<u64>>| {
        for v in values.into_iter().flatten() {
            debug_assert!(1 <= v && v as usize <= lim);
            let slot = &mut counts[v as usize];
            *slot = slot.saturating_add(1);
        }
    };

    tally(parallel_spans(n_max_beatty, jobs, |from, to| {
        let mut vals = Vec::with_capacity((to - from) as usize);
        for off in from..to {
            let n = Natural::from(off + 1);
            vals.push(beatty_sqrt2(&n).to_u64().expect("value within limit"));
        }
        vals
    }));
    tally(parallel_spans(n_max_partner, jobs, |from, to| {
        let mut vals = Vec::with_capacity((to - from) as usize);
        for off in from..to {
            let n = Natural::from(off + 1);
            let v = (&n << 1u32) + beatty_sqrt2(&n);
            vals.push(v.to_u64().expect("value within limit"));
        }
        vals
    }));

    let mut duplicates = Vec::new();
    let mut gaps = Vec::new();
    for (v, &count) in counts.iter().enumerate().skip(1) {
        match count {
            0 => gaps.push(Natural::from(v)),
            1 => {}
            _ => duplicates.push(Natural::from(v)),
        }
    }
    ComplementarityReport {
        limit: limit.clone(),
        covered: duplicates.is_empty() && gaps.is_empty(),
        duplicates,
        gaps,
    }
}
