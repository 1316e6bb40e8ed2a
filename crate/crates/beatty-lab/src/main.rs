//! Command-line surface over the library. Every subcommand is a thin adapter:
//! it parses flags, calls one library entry point, and formats the result.
//!
//! Exit codes: 0 on success, 1 when a verification fails (equivalence
//! counterexample, coverage gap, b-file mismatch), 2 on usage or input parse
//! errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use beatty_lab::{
    beatty_sqrt2, check_equivalence_jobs, cloitre_walk, compare_with_bfile,
    complementarity_check_jobs, lemma1_holds, parity_bits, parse_bfile, satisfying_indices_jobs,
    shift_identity_check, sigma_decimal, walk_stats, BitStream, ConditionVector, Natural,
    RationalValue, SequenceId, SequenceSpec, Walk,
};

#[derive(Parser)]
#[command(
    name = "beatty-lab",
    version,
    about = "Exact integer arithmetic for the Beatty sequence of sqrt(2)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Beatty terms floor(n*sqrt(2)) for n = 1..=count
    Terms(TermsArgs),
    /// Print the parity bits of floor(n*sqrt(2)) as a digit string
    Parity(ParityArgs),
    /// Sweep a range confirming the six parity conditions agree at every n
    Check(CheckArgs),
    /// Generate an index sequence by scanning its defining condition
    Seq(SeqArgs),
    /// Verify the two-term shift between the a090892 and a120752 sequences
    ShiftCheck(ShiftCheckArgs),
    /// Verify floor(n*sqrt(2)) and floor(n*(2+sqrt(2))) tile 1..=limit
    ComplementCheck(ComplementCheckArgs),
    /// Evaluate the sqrt(x^2 + x + 1/2) - x > 1/2 certificate at rational x
    Lemma1(Lemma1Args),
    /// Render the turtle walk of a bit stream (0 turns right, 1 turns left)
    Walk(WalkArgs),
    /// Compare an OEIS b-file against the regenerated sequence
    OeisCompare(OeisCompareArgs),
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
enum WalkFormat {
    Svg,
    Pgm,
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy)]
enum IndexSeqArg {
    A090892,
    A120752,
}

impl From<IndexSeqArg> for SequenceId {
    fn from(arg: IndexSeqArg) -> Self {
        match arg {
            IndexSeqArg::A090892 => SequenceId::CondDA090892,
            IndexSeqArg::A120752 => SequenceId::CondBA120752,
        }
    }
}

#[derive(ValueEnum, Clone, Copy)]
enum AnySeqArg {
    A083035,
    A090892,
    A120752,
}

impl From<AnySeqArg> for SequenceId {
    fn from(arg: AnySeqArg) -> Self {
        match arg {
            AnySeqArg::A083035 => SequenceId::ParityA083035,
            AnySeqArg::A090892 => SequenceId::CondDA090892,
            AnySeqArg::A120752 => SequenceId::CondBA120752,
        }
    }
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    s.trim()
        .parse()
        .map_err(|_| format!("not a nonnegative integer: {s:?}"))
}

fn parse_rational(s: &str) -> Result<RationalValue, String> {
    s.parse().map_err(|e: beatty_lab::Error| e.to_string())
}

#[derive(Args)]
struct TermsArgs {
    /// How many terms, starting at n = 1
    #[arg(long)]
    count: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct ParityArgs {
    /// How many bits, starting at n = 1
    #[arg(long)]
    count: u64,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct CheckArgs {
    /// First index of the sweep (inclusive)
    #[arg(long, value_parser = parse_natural)]
    from: Natural,
    /// Last index of the sweep (inclusive)
    #[arg(long, value_parser = parse_natural)]
    to: Natural,
    /// Worker count (default: BEATTY_LAB_JOBS, then machine parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct SeqArgs {
    /// Which sequence to generate
    #[arg(value_enum)]
    id: IndexSeqArg,
    /// How many terms to emit
    #[arg(long)]
    count: usize,
    /// Index to start scanning from (default: the sequence's native offset)
    #[arg(long, value_parser = parse_natural)]
    start: Option<Natural>,
    /// Worker count (default: BEATTY_LAB_JOBS, then machine parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct ShiftCheckArgs {
    /// How many aligned terms to compare
    #[arg(long)]
    count: usize,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct ComplementCheckArgs {
    /// Check coverage of 1..=limit
    #[arg(long, value_parser = parse_natural)]
    limit: Natural,
    /// Worker count (default: BEATTY_LAB_JOBS, then machine parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
struct Lemma1Args {
    /// Rational x as "p" or "p/q"
    #[arg(long = "x", value_parser = parse_rational)]
    x: RationalValue,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

#[derive(Args)]
#[command(group(ArgGroup::new("source").required(true).multiple(false)))]
struct WalkArgs {
    /// Explicit bit string such as 10011
    #[arg(long, group = "source")]
    bits: Option<String>,
    /// Walk the first COUNT parity bits instead
    #[arg(long, group = "source", value_name = "COUNT")]
    parity: Option<u64>,
    /// svg/pgm emit the image; text/json emit walk statistics
    #[arg(long, value_enum, default_value_t = WalkFormat::Svg)]
    format: WalkFormat,
    /// Write to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Polyline width in SVG output
    #[arg(long, default_value_t = 1.0)]
    stroke_width: f64,
    /// Blank cells/units around the walk's bounding box
    #[arg(long, default_value_t = 2)]
    margin: u32,
}

#[derive(Args)]
struct OeisCompareArgs {
    /// Path to the b-file to verify
    #[arg(long)]
    bfile: PathBuf,
    /// Which sequence the file claims to hold
    #[arg(long, value_enum)]
    seq: AnySeqArg,
    #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
    format: ReportFormat,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Terms(args) => cmd_terms(args),
        Command::Parity(args) => cmd_parity(args),
        Command::Check(args) => cmd_check(args),
        Command::Seq(args) => cmd_seq(args),
        Command::ShiftCheck(args) => cmd_shift_check(args),
        Command::ComplementCheck(args) => cmd_complement_check(args),
        Command::Lemma1(args) => cmd_lemma1(args),
        Command::Walk(args) => cmd_walk(args),
        Command::OeisCompare(args) => cmd_oeis_compare(args),
    }
}

fn resolve_jobs(flag: Option<usize>) -> anyhow::Result<usize> {
    if let Some(jobs) = flag {
        return Ok(jobs.max(1));
    }
    if let Ok(raw) = std::env::var("BEATTY_LAB_JOBS") {
        let jobs: usize = raw
            .trim()
            .parse()
            .with_context(|| format!("BEATTY_LAB_JOBS must be a positive integer, got {raw:?}"))?;
        return Ok(jobs.max(1));
    }
    Ok(std::thread::available_parallelism().map_or(1, |n| n.get()))
}

fn print_json(value: &serde_json::Value) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    writeln!(out, "{value}")?;
    Ok(())
}

fn cmd_terms(args: TermsArgs) -> anyhow::Result<ExitCode> {
    match args.format {
        ReportFormat::Text => {
            let mut out = io::BufWriter::new(io::stdout().lock());
            let mut n = Natural::from(1u32);
            for i in 0..args.count {
                if i > 0 {
                    write!(out, " ")?;
                }
                write!(out, "{}", beatty_sqrt2(&n))?;
                n += 1u32;
            }
            writeln!(out)?;
            out.flush()?;
        }
        ReportFormat::Json => {
            let mut n = Natural::from(1u32);
            let mut terms = Vec::with_capacity(args.count as usize);
            for _ in 0..args.count {
                terms.push(beatty_sqrt2(&n).to_string());
                n += 1u32;
            }
            print_json(&json!({ "count": args.count, "terms": terms }))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_parity(args: ParityArgs) -> anyhow::Result<ExitCode> {
    let stream = parity_bits(args.count);
    let digits: String = stream.bits().iter().map(|&b| char::from(b'0' + b)).collect();
    match args.format {
        ReportFormat::Text => {
            let mut out = io::stdout().lock();
            writeln!(out, "{digits}")?;
        }
        ReportFormat::Json => {
            print_json(&json!({ "count": args.count, "bits": digits }))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn condition_json(cv: &ConditionVector, sigma: &str) -> serde_json::Value {
    json!({
        "n": cv.n.to_string(),
        "p": cv.p.to_string(),
        "q": cv.q.to_string(),
        "a": cv.a,
        "b": cv.b,
        "c": cv.c,
        "d": cv.d,
        "e": cv.e,
        "f": cv.f,
        "sigma": sigma,
    })
}

fn cmd_check(args: CheckArgs) -> anyhow::Result<ExitCode> {
    if args.from > args.to {
        bail!("--from must not exceed --to");
    }
    let jobs = resolve_jobs(args.jobs)?;
    let report = check_equivalence_jobs(&args.from, &args.to, jobs);
    let failed = !report.counterexamples.is_empty();
    match args.format {
        ReportFormat::Text => {
            let mut out = io::stdout().lock();
            for cv in &report.counterexamples {
                writeln!(
                    out,
                    "n={}: a={} b={} c={} d={} e={} f={} (p={}, q={}, sigma~{})",
                    cv.n,
                    cv.a,
                    cv.b,
                    cv.c,
                    cv.d,
                    cv.e,
                    cv.f,
                    cv.p,
                    cv.q,
                    sigma_decimal(&cv.n),
                )?;
            }
            writeln!(out, "{} counterexamples", report.counterexamples.len())?;
        }
        ReportFormat::Json => {
            let counterexamples: Vec<_> = report
                .counterexamples
                .iter()
                .map(|cv| condition_json(cv, &sigma_decimal(&cv.n)))
                .collect();
            print_json(&json!({
                "from": report.lo.to_string(),
                "to": report.hi.to_string(),
                "checked": report.checked,
                "counterexamples": counterexamples,
            }))?;
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_seq(args: SeqArgs) -> anyhow::Result<ExitCode> {
    let id = SequenceId::from(args.id);
    let spec = match args.start {
        Some(start) => SequenceSpec::with_start(id, start),
        None => SequenceSpec::new(id),
    };
    let jobs = resolve_jobs(args.jobs)?;
    let terms = satisfying_indices_jobs(&spec, args.count, jobs);
    match args.format {
        ReportFormat::Text => {
            let mut out = io::BufWriter::new(io::stdout().lock());
            for term in &terms {
                writeln!(out, "{term}")?;
            }
            out.flush()?;
        }
        ReportFormat::Json => {
            let rendered: Vec<String> = terms.iter().map(Natural::to_string).collect();
            print_json(&json!({
                "id": id.tag(),
                "start": spec.start_index.to_string(),
                "count": args.count,
                "terms": rendered,
            }))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_shift_check(args: ShiftCheckArgs) -> anyhow::Result<ExitCode> {
    if args.count == 0 {
        bail!("--count must be at least 1");
    }
    let holds = shift_identity_check(args.count);
    match args.format {
        ReportFormat::Text => {
            if holds {
                println!(
                    "a090892 minus its first two terms matches a120752 over {} terms",
                    args.count
                );
            } else {
                println!("shift identity FAILED within the first {} terms", args.count);
            }
        }
        ReportFormat::Json => {
            print_json(&json!({ "count": args.count, "holds": holds }))?;
        }
    }
    Ok(if holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_complement_check(args: ComplementCheckArgs) -> anyhow::Result<ExitCode> {
    if args.limit == Natural::from(0u32) {
        bail!("--limit must be at least 1");
    }
    let jobs = resolve_jobs(args.jobs)?;
    let report = complementarity_check_jobs(&args.limit, jobs);
    match args.format {
        ReportFormat::Text => {
            let mut out = io::stdout().lock();
            for gap in &report.gaps {
                writeln!(out, "gap: {gap}")?;
            }
            for dup in &report.duplicates {
                writeln!(out, "duplicate: {dup}")?;
            }
            if report.covered {
                writeln!(
                    out,
                    "1..={} covered exactly once by floor(n*sqrt(2)) and floor(n*(2+sqrt(2)))",
                    report.limit
                )?;
            } else {
                writeln!(
                    out,
                    "coverage FAILED: {} gaps, {} duplicates",
                    report.gaps.len(),
                    report.duplicates.len()
                )?;
            }
        }
        ReportFormat::Json => {
            print_json(&json!({
                "limit": report.limit.to_string(),
                "covered": report.covered,
                "gaps": report.gaps.iter().map(Natural::to_string).collect::<Vec<_>>(),
                "duplicates": report.duplicates.iter().map(Natural::to_string).collect::<Vec<_>>(),
            }))?;
        }
    }
    Ok(if report.covered { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_lemma1(args: Lemma1Args) -> anyhow::Result<ExitCode> {
    let holds = lemma1_holds(&args.x);
    let a = args.x.numerator();
    let b = args.x.denominator();
    let lhs_root = (a << 1u32) + b;
    let lhs = &lhs_root * &lhs_root;
    let rhs = a * a * 4u32 + a * b * 4u32 + b * b * 2u32;
    match args.format {
        ReportFormat::Text => {
            if holds {
                println!(
                    "x = {}: (2a+b)^2 = {} < 4a^2+4ab+2b^2 = {}, \
                     so sqrt(x^2 + x + 1/2) - x > 1/2",
                    args.x, lhs, rhs
                );
            } else {
                println!(
                    "x = {}: (2a+b)^2 = {} >= 4a^2+4ab+2b^2 = {}, inequality FAILED",
                    args.x, lhs, rhs
                );
            }
        }
        ReportFormat::Json => {
            print_json(&json!({
                "x": args.x.to_string(),
                "lhs": lhs.to_string(),
                "rhs": rhs.to_string(),
                "holds": holds,
            }))?;
        }
    }
    Ok(if holds { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn walk_input(args: &WalkArgs) -> anyhow::Result<(BitStream, usize)> {
    let stream = match (&args.bits, args.parity) {
        (Some(bits), None) => BitStream::parse(bits).context("invalid --bits string")?,
        (None, Some(count)) => parity_bits(count),
        _ => unreachable!("clap enforces exactly one source"),
    };
    let len = stream.len();
    Ok((stream, len))
}

fn emit(bytes: &[u8], out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None => io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

fn walk_report(walk: &Walk, bit_count: usize, format: WalkFormat) -> Vec<u8> {
    let stats = walk_stats(walk);
    match format {
        WalkFormat::Text => format!(
            "bits: {}\nendpoint: ({}, {})\nbbox: [{}, {}]..[{}, {}]\n\
             distinct points: {}\nfinal heading: ({}, {})\n",
            bit_count,
            stats.endpoint.0,
            stats.endpoint.1,
            stats.bbox.min_x,
            stats.bbox.min_y,
            stats.bbox.max_x,
            stats.bbox.max_y,
            stats.distinct_points,
            stats.final_heading.dx,
            stats.final_heading.dy,
        )
        .into_bytes(),
        WalkFormat::Json => {
            let value = json!({
                "bits": bit_count,
                "endpoint": [stats.endpoint.0, stats.endpoint.1],
                "bbox": {
                    "min_x": stats.bbox.min_x,
                    "min_y": stats.bbox.min_y,
                    "max_x": stats.bbox.max_x,
                    "max_y": stats.bbox.max_y,
                },
                "distinct_points": stats.distinct_points,
                "final_heading": [stats.final_heading.dx, stats.final_heading.dy],
            });
            let mut bytes = value.to_string().into_bytes();
            bytes.push(b'\n');
            bytes
        }
        WalkFormat::Svg | WalkFormat::Pgm => unreachable!("image formats handled by caller"),
    }
}

fn cmd_walk(args: WalkArgs) -> anyhow::Result<ExitCode> {
    let (stream, bit_count) = walk_input(&args)?;
    let walk = cloitre_walk(&stream);
    let bytes = match args.format {
        WalkFormat::Svg => beatty_lab::render_svg(&walk, args.stroke_width, args.margin).into_bytes(),
        WalkFormat::Pgm => beatty_lab::render_pgm(&walk, args.margin)?,
        WalkFormat::Text | WalkFormat::Json => walk_report(&walk, bit_count, args.format),
    };
    emit(&bytes, args.out.as_ref())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_oeis_compare(args: OeisCompareArgs) -> anyhow::Result<ExitCode> {
    let text = fs::read_to_string(&args.bfile)
        .with_context(|| format!("cannot read {}", args.bfile.display()))?;
    let entries = parse_bfile(&text)
        .with_context(|| format!("cannot parse {}", args.bfile.display()))?;
    if entries.is_empty() {
        bail!("{} contains no entries", args.bfile.display());
    }
    let id = SequenceId::from(args.seq);
    let comparison = compare_with_bfile(&entries, &SequenceSpec::new(id));
    match args.format {
        ReportFormat::Text => {
            match &comparison.first_mismatch {
                None => println!(
                    "{} matches {}: {} entries verified",
                    args.bfile.display(),
                    id.tag(),
                    comparison.checked
                ),
                Some(m) => println!(
                    "{}: mismatch at index {}: expected {}, file has {} \
                     ({} entries verified before the mismatch)",
                    args.bfile.display(),
                    m.index,
                    m.expected,
                    m.got,
                    comparison.checked
                ),
            }
        }
        ReportFormat::Json => {
            let mismatch = comparison.first_mismatch.as_ref().map(|m| {
                json!({
                    "index": m.index,
                    "expected": m.expected.to_string(),
                    "got": m.got.to_string(),
                })
            });
            print_json(&json!({
                "file": args.bfile.display().to_string(),
                "seq": id.tag(),
                "entries": entries.len(),
                "checked": comparison.checked,
                "matches": comparison.matches,
                "first_mismatch": mismatch,
            }))?;
        }
    }
    Ok(if comparison.matches {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
