//! Arbitrary-precision integer square root and a fixed-point oracle for √2.
//!
//! Every irrational comparison in this crate reduces to exact integer
//! arithmetic here. `isqrt` realizes ⌊√m⌋ for an integer radicand `m` and is
//! the only primitive the decision paths touch. The oracle recomputes
//! ⌊n√2⌋ through an unrelated route (truncated fixed-point expansion of √2,
//! then a squared verification of the candidate) so that tests can
//! cross-check the two without sharing code.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision nonnegative integer.
///
/// Serializes as decimal text via `Display`/`FromStr`, which is the format
/// used on the CLI and in b-files.
pub type Natural = BigUint;

/// Integer square root: the unique `r` with `r² ≤ m < (r+1)²`.
///
/// Newton/Heron iteration on integers, seeded from the bit length (so the
/// start value is always at or above the root and the iteration decreases
/// monotonically), with a final correction step that pins the bracket
/// exactly. No floating point anywhere; exact for arbitrarily large `m`.
pub fn isqrt(m: &Natural) -> Natural {
    // Radicands below 2^126 run on u128 scalars; the squares in the
    // correction step then still fit without overflow. The sweeps over
    // n ≤ 10^6 live entirely in this branch.
    if m.bits() <= 126 {
        let small = m.to_u128().expect("bit length checked");
        return Natural::from(isqrt_u128(small));
    }

    let mut x: Natural = Natural::one() << m.bits().div_ceil(2);
    loop {
        let next: Natural = (&x + m / &x) >> 1;
        if next >= x {
            break;
        }
        x = next;
    }
    // Monotone correction: a no-op when the iteration has settled, but it
    // makes the bracket r² ≤ m < (r+1)² unconditional.
    while &x * &x > *m {
        x -= 1u32;
    }
    loop {
        let y: Natural = &x + 1u32;
        if &y * &y <= *m {
            x = y;
        } else {
            break;
        }
    }
    x
}

fn isqrt_u128(m: u128) -> u128 {
    if m == 0 {
        return 0;
    }
    let bits = 128 - m.leading_zeros() as u64;
    let mut x = 1u128 << bits.div_ceil(2);
    loop {
        let next = (x + m / x) >> 1;
        if next >= x {
            break;
        }
        x = next;
    }
    while x * x > m {
        x -= 1;
    }
    while (x + 1) * (x + 1) <= m {
        x += 1;
    }
    x
}

/// Bit-at-a-time restoring square root.
///
/// Processes the radicand two bits per step, keeping the running remainder.
/// Much slower than Newton but structurally unrelated to it, which is the
/// point: [`sqrt2_fixed`] and the oracle are built on this routine so that
/// cross-checks against [`isqrt`] exercise two independent computations.
fn isqrt_binary(m: &Natural) -> Natural {
    let mut root = Natural::zero();
    let mut rem = Natural::zero();
    let pairs = m.bits().div_ceil(2);
    for i in (0..pairs).rev() {
        let two_bits = u8::from(m.bit(2 * i + 1)) << 1 | u8::from(m.bit(2 * i));
        rem = (rem << 2) + two_bits;
        let trial: Natural = (&root << 2) + 1u32;
        root <<= 1;
        if trial <= rem {
            rem -= trial;
            root += 1u32;
        }
    }
    root
}

/// Truncated fixed-point expansion of √2: returns ⌊√2 · 2^frac_bits⌋.
///
/// Computed by the restoring square root of 2^(2·frac_bits+1), independent
/// of the Newton path.
pub fn sqrt2_fixed(frac_bits: u64) -> Natural {
    isqrt_binary(&(Natural::one() << (2 * frac_bits + 1)))
}

/// Computes ⌊n√2⌋ by fixed-point evaluation of √2 to `bits(n) + guard_bits`
/// fractional bits, with an explicit certificate that the candidate `k`
/// satisfies `k² ≤ 2n² < (k+1)²`.
///
/// Cross-check only: decision paths compute ⌊n√2⌋ as `isqrt(2n²)` and never
/// call this. Fails with [`Error::PrecisionInsufficient`] when the truncated
/// expansion lands one below the true floor; callers retry with more bits.
pub fn floor_n_sqrt2_oracle(n: &Natural, guard_bits: u64) -> Result<Natural> {
    assert!(guard_bits >= 8, "guard_bits must be at least 8");
    let frac_bits = n.bits() + guard_bits;
    let k: Natural = (n * sqrt2_fixed(frac_bits)) >> frac_bits;
    let two_n_sq: Natural = n * n * 2u32;
    let upper: Natural = &k + 1u32;
    if &k * &k <= two_n_sq && two_n_sq < &upper * &upper {
        Ok(k)
    } else {
        Err(Error::PrecisionInsufficient { guard_bits })
    }
}

/// Oracle with the retry policy applied: start at 32 guard bits, double on
/// failure, give up past 1024.
pub fn floor_n_sqrt2_oracle_auto(n: &Natural) -> Result<Natural> {
    let mut guard_bits = 32;
    loop {
        match floor_n_sqrt2_oracle(n, guard_bits) {
            Ok(k) => return Ok(k),
            Err(e) => {
                if guard_bits >= 1024 {
                    return Err(e);
                }
                guard_bits *= 2;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn isqrt_small_values() {
        assert_eq!(isqrt(&nat(0)), nat(0));
        assert_eq!(isqrt(&nat(8)), nat(2));
        assert_eq!(isqrt(&nat(200)), nat(14));
    }

    #[test]
    fn isqrt_bracket_exhaustive_to_1e6() {
        for m in 0u64..=1_000_000 {
            let r = isqrt(&nat(m)).to_u64().unwrap();
            assert!(r * r <= m, "m={m}");
            assert!(m < (r + 1) * (r + 1), "m={m}");
        }
    }

    #[test]
    fn isqrt_perfect_squares_to_1e4() {
        for r in 1u64..=10_000 {
            assert_eq!(isqrt(&nat(r * r)), nat(r));
            assert_eq!(isqrt(&nat(r * r - 1)), nat(r - 1));
        }
    }

    #[test]
    fn isqrt_around_u128_fast_path_boundary() {
        // Straddle the 126-bit cutoff between the scalar and bignum branches.
        for shift in [125u64, 126, 127, 128, 129] {
            let m = Natural::one() << shift;
            let r = isqrt(&m);
            assert!(&r * &r <= m);
            let r1 = &r + 1u32;
            assert!(&r1 * &r1 > m);
        }
    }

    #[test]
    fn binary_route_matches_newton_route() {
        for m in (0u64..2_000).chain([u64::MAX - 1, u64::MAX]) {
            assert_eq!(isqrt_binary(&nat(m)), isqrt(&nat(m)), "m={m}");
        }
    }

    #[test]
    fn sqrt2_fixed_known_prefix() {
        // √2 · 2^10 = 1448.15...
        assert_eq!(sqrt2_fixed(10), nat(1448));
        // First 20 fractional bits: ⌊√2 · 2^20⌋ = 1482910.
        assert_eq!(sqrt2_fixed(20), nat(1_482_910));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(floor_n_sqrt2_oracle(&nat(0), 16).unwrap(), nat(0));
        assert_eq!(floor_n_sqrt2_oracle(&nat(10), 16).unwrap(), nat(14));
        assert_eq!(floor_n_sqrt2_oracle(&nat(5), 16).unwrap(), nat(7));
    }

    #[test]
    fn oracle_reports_insufficient_precision() {
        // 169√2 = 239.0021...: the fractional part is small enough that an
        // 8-guard-bit truncation undershoots the floor.
        let err = floor_n_sqrt2_oracle(&nat(169), 8).unwrap_err();
        assert_eq!(err, Error::PrecisionInsufficient { guard_bits: 8 });
        assert_eq!(floor_n_sqrt2_oracle(&nat(169), 16).unwrap(), nat(239));
        assert_eq!(floor_n_sqrt2_oracle_auto(&nat(169)).unwrap(), nat(239));
    }

    #[test]
    fn oracle_agrees_with_isqrt_to_1e4() {
        for n in 0u64..=10_000 {
            let via_oracle = floor_n_sqrt2_oracle(&nat(n), 32).unwrap();
            let via_isqrt = isqrt(&nat(2 * n * n));
            assert_eq!(via_oracle, via_isqrt, "n={n}");
        }
    }

    proptest! {
        #[test]
        fn isqrt_bracket_random_512_bit(bytes in proptest::collection::vec(any::<u8>(), 0..=64)) {
            let m = Natural::from_bytes_be(&bytes);
            let r = isqrt(&m);
            prop_assert!(&r * &r <= m);
            let r1 = &r + 1u32;
            prop_assert!(&r1 * &r1 > m);
        }

        #[test]
        fn binary_and_newton_agree_on_random_bignums(bytes in proptest::collection::vec(any::<u8>(), 0..=48)) {
            let m = Natural::from_bytes_be(&bytes);
            prop_assert_eq!(isqrt_binary(&m), isqrt(&m));
        }

        #[test]
        fn natural_decimal_round_trip(bytes in proptest::collection::vec(any::<u8>(), 0..=64)) {
            let m = Natural::from_bytes_be(&bytes);
            let text = m.to_string();
            prop_assert_eq!(text.parse::<Natural>().unwrap(), m);
        }
    }
}
