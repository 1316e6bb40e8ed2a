//! Print the first Beatty terms ⌊n√2⌋ next to their complementary partners
//! ⌊n(2+√2)⌋. Together the two columns hit every positive integer exactly
//! once.
//!
//! Run with: cargo run --example beatty_terms

use beatty_lab::{beatty_sqrt2, complement_partner, Natural};

fn main() {
    println!("{:>3}  {:>12}  {:>14}", "n", "floor(n*r)", "floor(n*(2+r))");
    for n in 1u32..=20 {
        let n = Natural::from(n);
        println!(
            "{:>3}  {:>12}  {:>14}",
            n,
            beatty_sqrt2(&n),
            complement_partner(&n).expect("n >= 1"),
        );
    }
}
