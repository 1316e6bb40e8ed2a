//! Round-trip a b-file through the parser and cross-check it against the
//! regenerated sequence, then corrupt one entry to show mismatch reporting.
//!
//! Run with: cargo run --example bfile_check

use beatty_lab::{
    compare_with_bfile, parse_bfile, satisfying_indices, serialize_bfile, BFileEntry,
    SequenceId, SequenceSpec,
};
use num_bigint::BigInt;

fn main() {
    let spec = SequenceSpec::new(SequenceId::CondBA120752);
    let entries: Vec<BFileEntry> = satisfying_indices(&spec, 40)
        .into_iter()
        .enumerate()
        .map(|(i, term)| BFileEntry {
            index: i as i64 + 1,
            value: BigInt::from(term),
        })
        .collect();

    let text = format!("# b120752 regenerated locally\n{}", serialize_bfile(&entries));
    let parsed = parse_bfile(&text).expect("well-formed b-file");
    let report = compare_with_bfile(&parsed, &spec);
    println!("clean file: matches = {}, {} entries", report.matches, report.checked);

    let mut corrupted = parsed;
    corrupted[17].value += 1;
    let report = compare_with_bfile(&corrupted, &spec);
    let m = report.first_mismatch.expect("corruption detected");
    println!(
        "corrupted file: mismatch at index {}: expected {}, file has {}",
        m.index, m.expected, m.got
    );
}
