//! Two independent routes to ⌊n√2⌋: the integer square root of 2n², and a
//! fixed-point multiply by ⌊√2·2^F⌋ whose result is certified by squaring.
//! n = 169 (a Pell denominator, 169√2 = 239.002…) sits close enough to an
//! integer that 8 guard bits cannot certify it; the retrying wrapper widens
//! until the certificate holds.
//!
//! Run with: cargo run --example isqrt_oracle

use beatty_lab::{beatty_sqrt2, floor_n_sqrt2_oracle, floor_n_sqrt2_oracle_auto, Natural};

fn main() {
    for n in [0u64, 5, 10, 169, 1_000_000_007] {
        let n = Natural::from(n);
        let via_isqrt = beatty_sqrt2(&n);
        let via_oracle = floor_n_sqrt2_oracle_auto(&n).expect("certified within 1024 guard bits");
        assert_eq!(via_isqrt, via_oracle);
        println!("n = {n:>10}: floor(n*sqrt(2)) = {via_isqrt}");
    }

    let pell = Natural::from(169u32);
    match floor_n_sqrt2_oracle(&pell, 8) {
        Err(err) => println!("n = 169 at 8 guard bits: {err}"),
        Ok(v) => unreachable!("certificate unexpectedly passed: {v}"),
    }
    println!(
        "n = 169 after widening: {}",
        floor_n_sqrt2_oracle_auto(&pell).expect("certified within 1024 guard bits")
    );
}
