//! Render the turtle walk of the first COUNT parity bits of ⌊n√2⌋ to an SVG
//! file, printing the walk's summary statistics.
//!
//! Run with: cargo run --release --example cloitre_walk_svg [COUNT] [OUT.svg]

use beatty_lab::{cloitre_walk, parity_bits, render_svg, walk_stats};

fn main() {
    let mut args = std::env::args().skip(1);
    let count: u64 = args
        .next()
        .map(|s| s.parse().expect("COUNT must be a nonnegative integer"))
        .unwrap_or(10_000);
    let out = args.next().unwrap_or_else(|| "beatty_walk.svg".to_owned());

    let walk = cloitre_walk(&parity_bits(count));
    let stats = walk_stats(&walk);
    std::fs::write(&out, render_svg(&walk, 1.0, 2)).expect("write SVG");

    println!("{count} bits -> {out}");
    println!("endpoint {:?}", stats.endpoint);
    println!(
        "bbox [{}, {}]..[{}, {}]",
        stats.bbox.min_x, stats.bbox.min_y, stats.bbox.max_x, stats.bbox.max_y
    );
    println!(
        "{} distinct points over {} steps",
        stats.distinct_points, count
    );
}
