//! Check that {⌊n√2⌋} and {⌊n(2+√2)⌋} tile an initial segment of the
//! naturals with no gaps and no duplicates.
//!
//! Run with: cargo run --release --example complement_partition [LIMIT]

use beatty_lab::{complementarity_check_jobs, Natural};

fn main() {
    let limit: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("LIMIT must be a positive integer"))
        .unwrap_or(100_000);
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());

    let report = complementarity_check_jobs(&Natural::from(limit), jobs);
    if report.covered {
        println!("1..={limit}: every value covered exactly once");
    } else {
        println!(
            "1..={limit}: {} gaps, {} duplicates",
            report.gaps.len(),
            report.duplicates.len()
        );
        for gap in report.gaps.iter().take(10) {
            println!("  gap at {gap}");
        }
        for dup in report.duplicates.iter().take(10) {
            println!("  duplicate at {dup}");
        }
        std::process::exit(1);
    }
}
