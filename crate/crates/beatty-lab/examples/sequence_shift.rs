//! Show the two-term shift between the condition-(d) index sequence (from
//! n = 0) and the condition-(b) index sequence (from n = 1): dropping the
//! first two d-terms yields the b-sequence.
//!
//! Run with: cargo run --example sequence_shift

use beatty_lab::{satisfying_indices, shift_identity_check, SequenceId, SequenceSpec};

fn main() {
    let d = satisfying_indices(&SequenceSpec::new(SequenceId::CondDA090892), 14);
    let b = satisfying_indices(&SequenceSpec::new(SequenceId::CondBA120752), 12);

    let row = |terms: &[beatty_lab::Natural]| {
        terms.iter().map(|t| format!("{t:>4}")).collect::<String>()
    };
    println!("d-sequence: {}", row(&d));
    println!("b-sequence:         {}", row(&b));

    let count = 1_000;
    assert!(shift_identity_check(count));
    println!("identity verified over the first {count} aligned terms");
}
