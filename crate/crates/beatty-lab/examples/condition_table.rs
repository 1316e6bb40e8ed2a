//! Tabulate the six parity conditions over small n, with the fractional part
//! σ = {n/√2} alongside. The flags agree everywhere except n = 1, where (d)
//! holds but the rest fail: that boundary is why the equivalence is stated
//! for n ≥ 2.
//!
//! Run with: cargo run --example condition_table

use beatty_lab::{condition_vector_with_sigma, Natural};

fn main() {
    println!(
        "{:>3} {:>5} {:>4}  a b c d e f  {:>14}",
        "n", "p", "q", "sigma"
    );
    for n in 0u32..=16 {
        let cv = condition_vector_with_sigma(&Natural::from(n));
        let mark = |flag: bool| if flag { 'T' } else { '.' };
        println!(
            "{:>3} {:>5} {:>4}  {} {} {} {} {} {}  {:>14}{}",
            cv.n,
            cv.p,
            cv.q,
            mark(cv.a),
            mark(cv.b),
            mark(cv.c),
            mark(cv.d),
            mark(cv.e),
            mark(cv.f),
            cv.sigma_decimal.as_deref().unwrap_or("-"),
            if cv.unanimous() { "" } else { "  <- split" },
        );
    }
}
