//! Batch command-line front end.
//!
//! Exit codes: 0 success, 1 decode or verification failure, 2 usage error.
//! `--format record` prints `key=value` records, one line per result.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::channel::{check_code_disjointness, delete_at, fuzz_roundtrip, insert_at, random_corrupt, CorruptionMode, Disjointness};
use crate::code::partition_by_syndrome;
use crate::encoder::{frame_len, NonSystematicEncoder, SystematicCodec};
use crate::math::{ceil_log, checked_pow};
use crate::{CodeParams, Error, VtStarCode, Word, DEFAULT_ENUM_BUDGET};

/// Environment variable that overrides the default enumeration budget.
pub const BUDGET_ENV: &str = "VTSTAR_ENUM_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandResult {
    fn ok(stdout: String) -> Self {
        CommandResult { exit_code: 0, stdout, stderr: String::new() }
    }

    fn failure(stdout: String, stderr: String) -> Self {
        CommandResult { exit_code: 1, stdout, stderr }
    }

    fn usage(stderr: String) -> Self {
        CommandResult { exit_code: 2, stdout: String::new(), stderr }
    }
}

#[derive(Debug, Parser)]
#[command(name = "vtstar", version, about = "q-ary VT codes over the differential vector")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Variant {
    /// Non-systematic, ceil(log_q n) + 1 redundant symbols.
    Vt2,
    /// Systematic frame: message, marker, syndrome digits, comma.
    Sys1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Human,
    Record,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Encode a message.
    Encode {
        #[arg(long, value_enum, default_value = "vt2")]
        variant: Variant,
        #[arg(short)]
        q: u32,
        /// Code length (vt2).
        #[arg(short)]
        n: Option<usize>,
        #[arg(short, default_value_t = 0)]
        a: u64,
        #[arg(short, long = "message")]
        m: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Decode a received word carrying at most one deletion or insertion.
    Decode {
        #[arg(long, value_enum, default_value = "vt2")]
        variant: Variant,
        #[arg(short)]
        q: u32,
        /// Code length (vt2).
        #[arg(short)]
        n: Option<usize>,
        #[arg(short, default_value_t = 0)]
        a: u64,
        /// Message length (sys1).
        #[arg(short)]
        k: Option<usize>,
        #[arg(short, long = "received")]
        r: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Apply one random deletion or insertion.
    Corrupt {
        #[arg(short)]
        q: u32,
        #[arg(short, long = "word")]
        w: String,
        #[arg(long)]
        seed: u64,
        /// deletion, insertion or either.
        #[arg(long, default_value = "either")]
        mode: String,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// List the codewords of one code.
    Enumerate {
        #[arg(short)]
        q: u32,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        a: u64,
        /// Largest q^n to enumerate.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Exhaustively check codes: ball disjointness, all single indels, size bound.
    Verify {
        #[arg(short)]
        q: u32,
        /// A length or an inclusive range such as 4..8.
        #[arg(short)]
        n: String,
        /// `all` or one syndrome value.
        #[arg(short, default_value = "all")]
        a: String,
        /// Largest q^n to enumerate.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Redundancy of the encoders for each (q, n).
    Tables {
        /// Comma-separated alphabet sizes.
        #[arg(short, value_delimiter = ',', num_args = 0..)]
        q: Vec<u32>,
        /// Comma-separated lengths; `b^e` is accepted.
        #[arg(short, value_delimiter = ',', num_args = 0..)]
        n: Vec<String>,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Random encode, corrupt, decode round trips.
    Fuzz {
        #[arg(short)]
        q: u32,
        #[arg(short)]
        n: usize,
        #[arg(short, default_value_t = 0)]
        a: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandResult::ok(text)
            } else {
                CommandResult::usage(text)
            };
        }
    };
    match cli.command {
        Command::Encode { variant, q, n, a, m, trace, format } => {
            cmd_encode(variant, q, n, a, &m, trace, format)
        }
        Command::Decode { variant, q, n, a, k, r, trace, format } => {
            cmd_decode(variant, q, n, a, k, &r, trace, format)
        }
        Command::Corrupt { q, w, seed, mode, format } => cmd_corrupt(q, &w, seed, &mode, format),
        Command::Enumerate { q, n, a, budget, format } => cmd_enumerate(q, n, a, budget, format),
        Command::Verify { q, n, a, budget, format } => cmd_verify(q, &n, &a, budget, format),
        Command::Tables { q, n, format } => cmd_tables(&q, &n, format),
        Command::Fuzz { q, n, a, trials, seed } => cmd_fuzz(q, n, a, trials, seed),
    }
}

/// Collects `key=value` pairs and renders them as a record line or as
/// aligned `key: value` lines.
#[derive(Default)]
struct Fields(Vec<(String, String)>);

impl Fields {
    fn put(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.0.push((key.to_string(), value.to_string()));
        self
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Record => {
                let mut line = self
                    .0
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(" ");
                line.push('\n');
                line
            }
            Format::Human => {
                let width = self.0.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                self.0
                    .iter()
                    .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                    .collect()
            }
        }
    }
}

fn parse_word(text: &str, q: u32) -> Result<Word, CommandResult> {
    Word::parse(text, q).map_err(|e| CommandResult::usage(format!("error: {e}\n")))
}

fn need_n(n: Option<usize>) -> Result<usize, CommandResult> {
    n.ok_or_else(|| CommandResult::usage("error: -n is required for the vt2 variant\n".into()))
}

fn lib_error(e: Error) -> CommandResult {
    match e {
        Error::ShapeMismatch(_) | Error::Uncorrectable(_) | Error::NotDecodable(_) => {
            CommandResult::failure(String::new(), format!("error: {e}\n"))
        }
        _ => CommandResult::usage(format!("error: {e}\n")),
    }
}

fn cmd_encode(variant: Variant, q: u32, n: Option<usize>, a: u64, m: &str, trace: bool, format: Format) -> CommandResult {
    let attempt = || -> Result<CommandResult, CommandResult> {
        let msg = parse_word(m, q)?;
        let mut f = Fields::default();
        match variant {
            Variant::Vt2 => {
                let n = need_n(n)?;
                let params = CodeParams::new(q, n, a).map_err(lib_error)?;
                let enc = NonSystematicEncoder::new(params).map_err(lib_error)?;
                let (c, tr) = enc.encode_traced(&msg).map_err(lib_error)?;
                f.put("codeword", &c);
                if trace {
                    f.put("S", join(&tr.support))
                        .put("I", join(&tr.info))
                        .put("syn_prefill", tr.prefill_syndrome)
                        .put("a_prime", tr.a_prime)
                        .put("alpha", tr.alpha)
                        .put("a_dprime", tr.a_dprime)
                        .put("z", digits(&tr.digits_msb_first(), q))
                        .put("y", &tr.y);
                }
                f.put("q", q).put("n", n).put("a", a).put("k", enc.message_len());
            }
            Variant::Sys1 => {
                let codec = SystematicCodec::new(q, msg.len()).map_err(lib_error)?;
                let frame = codec.frame(&msg).map_err(lib_error)?;
                f.put("codeword", frame.to_word());
                if trace {
                    f.put("marker", frame.marker)
                        .put("z", digits(&frame.syndrome_digits, q));
                }
                f.put("q", q)
                    .put("k", msg.len())
                    .put("frame_len", codec.frame_len());
            }
        }
        Ok(CommandResult::ok(f.render(format)))
    };
    attempt().unwrap_or_else(|e| e)
}

#[allow(clippy::too_many_arguments)]
fn cmd_decode(
    variant: Variant,
    q: u32,
    n: Option<usize>,
    a: u64,
    k: Option<usize>,
    r: &str,
    trace: bool,
    format: Format,
) -> CommandResult {
    let attempt = || -> Result<CommandResult, CommandResult> {
        let received = parse_word(r, q)?;
        let mut f = Fields::default();
        match variant {
            Variant::Vt2 => {
                let n = need_n(n)?;
                let params = CodeParams::new(q, n, a).map_err(lib_error)?;
                let enc = NonSystematicEncoder::new(params).map_err(lib_error)?;
                let (msg, rep) = enc.decode_with_report(&received).map_err(lib_error)?;
                f.put("message", &msg)
                    .put("codeword", &rep.codeword)
                    .put("kind", rep.kind);
                if trace {
                    f.put("delta", rep.trace.delta)
                        .put("s", rep.trace.s)
                        .put("case", rep.trace.case)
                        .put("h", opt(rep.trace.h))
                        .put("position", opt(rep.position))
                        .put("symbol", opt(rep.symbol))
                        .put("comparisons", rep.trace.comparisons);
                }
            }
            Variant::Sys1 => {
                let k = k.ok_or_else(|| CommandResult::usage("error: -k is required for the sys1 variant\n".into()))?;
                let codec = SystematicCodec::new(q, k).map_err(lib_error)?;
                let (msg, hyp) = codec.decode_detailed(&received).map_err(lib_error)?;
                f.put("message", &msg);
                if trace {
                    f.put("parse", format!("{hyp:?}"));
                }
            }
        }
        Ok(CommandResult::ok(f.render(format)))
    };
    attempt().unwrap_or_else(|e| e)
}

fn cmd_corrupt(q: u32, w: &str, seed: u64, mode: &str, format: Format) -> CommandResult {
    let attempt = || -> Result<CommandResult, CommandResult> {
        let mode: CorruptionMode = mode.parse().map_err(|e: Error| CommandResult::usage(format!("error: {e}\n")))?;
        let word = parse_word(w, q)?;
        let (out, c) = random_corrupt(&word, seed, mode).map_err(|e| CommandResult::usage(format!("error: {e}\n")))?;
        let mut f = Fields::default();
        f.put("received", &out)
            .put("kind", c.kind)
            .put("position", c.position)
            .put("symbol", opt(c.symbol))
            .put("seed", c.seed);
        Ok(CommandResult::ok(f.render(format)))
    };
    attempt().unwrap_or_else(|e| e)
}

fn cmd_enumerate(q: u32, n: usize, a: u64, budget: Option<u64>, format: Format) -> CommandResult {
    let attempt = || -> Result<CommandResult, CommandResult> {
        let budget = budget_or_default(budget)?;
        let params = CodeParams::new(q, n, a).map_err(lib_error)?;
        let words = VtStarCode::new(params)
            .enumerate(budget)
            .map_err(|e| CommandResult::usage(format!("error: {e}\n")))?;
        let out = match format {
            Format::Human => words.iter().map(|w| format!("{w}\n")).collect(),
            Format::Record => {
                let mut f = Fields::default();
                f.put("q", q)
                    .put("n", n)
                    .put("a", a)
                    .put("size", words.len())
                    .put("words", words.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(";"));
                f.render(format)
            }
        };
        Ok(CommandResult::ok(out))
    };
    attempt().unwrap_or_else(|e| e)
}

fn parse_range(text: &str) -> Option<RangeInclusive<usize>> {
    match text.split_once("..") {
        Some((lo, hi)) => {
            let lo = lo.trim().parse().ok()?;
            let hi = hi.trim().trim_start_matches('=').parse().ok()?;
            (lo <= hi).then_some(lo..=hi)
        }
        None => {
            let n = text.trim().parse().ok()?;
            Some(n..=n)
        }
    }
}

fn budget_or_default(budget: Option<u64>) -> Result<u64, CommandResult> {
    if let Some(b) = budget {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CommandResult::usage(format!("error: {BUDGET_ENV}={v:?} is not an integer\n"))),
        Err(_) => Ok(DEFAULT_ENUM_BUDGET),
    }
}

/// Counts from checking one length.
#[derive(Debug, Default)]
struct LengthSummary {
    codes: usize,
    codewords: usize,
    deletions: usize,
    insertions: usize,
    failures: usize,
    best_a: u64,
    best_size: usize,
    bound_ok: bool,
    witness: Option<String>,
}

fn verify_length(q: u32, n: usize, only: Option<u64>, budget: u64) -> Result<LengthSummary, Error> {
    let classes = partition_by_syndrome(q, n, budget)?;
    let (best_a, best_size) = classes
        .iter()
        .enumerate()
        .fold((0u64, 0usize), |b, (a, c)| if c.len() > b.1 { (a as u64, c.len()) } else { b });
    let total = checked_pow(q as u64, n as u32).expect("within budget");
    let mut summary = LengthSummary {
        best_a,
        best_size,
        bound_ok: best_size as u128 * q as u128 * n as u128 >= total,
        ..Default::default()
    };
    let selected: Vec<u64> = match only {
        Some(a) => vec![a],
        None => (0..classes.len() as u64).collect(),
    };
    let per_code: Vec<LengthSummary> = selected
        .par_iter()
        .map(|&a| {
            let code = VtStarCode::new(CodeParams::new(q, n, a).expect("a < qn"));
            let words = &classes[a as usize];
            let mut s = LengthSummary { codes: 1, codewords: words.len(), ..Default::default() };
            if let Disjointness::Witness { x, y, common } = check_code_disjointness(words) {
                s.failures += 1;
                s.witness = Some(format!("a={a} balls of {x} and {y} share {common}"));
            }
            let note = |s: &mut LengthSummary, x: &Word, r: Word| {
                match code.decode(&r) {
                    Ok(rep) if &rep.codeword == x => {}
                    other => {
                        s.failures += 1;
                        if s.witness.is_none() {
                            let got = match other {
                                Ok(rep) => rep.codeword.to_string(),
                                Err(e) => e.to_string(),
                            };
                            s.witness = Some(format!("a={a} codeword={x} received={r} got={got}"));
                        }
                    }
                }
            };
            for x in words {
                for i in 1..=n {
                    s.deletions += 1;
                    note(&mut s, x, delete_at(x, i).expect("in range"));
                }
                for i in 1..=n + 1 {
                    for v in 0..q {
                        s.insertions += 1;
                        note(&mut s, x, insert_at(x, i, v).expect("in range"));
                    }
                }
            }
            s
        })
        .collect();
    for s in per_code {
        summary.codes += s.codes;
        summary.codewords += s.codewords;
        summary.deletions += s.deletions;
        summary.insertions += s.insertions;
        summary.failures += s.failures;
        if summary.witness.is_none() {
            summary.witness = s.witness;
        }
    }
    Ok(summary)
}

fn cmd_verify(q: u32, n: &str, a: &str, budget: Option<u64>, format: Format) -> CommandResult {
    let attempt = || -> Result<CommandResult, CommandResult> {
        let range = parse_range(n).ok_or_else(|| CommandResult::usage(format!("error: bad length range {n:?}\n")))?;
        let only = match a {
            "all" => None,
            v => Some(v.parse::<u64>().map_err(|_| CommandResult::usage(format!("error: bad syndrome {v:?}\n")))?),
        };
        let budget = budget_or_default(budget)?;
        // Validate everything before running anything.
        for len in range.clone() {
            CodeParams::new(q, len, only.unwrap_or(0)).map_err(lib_error)?;
            crate::code::check_budget(q, len, budget).map_err(|e| CommandResult::usage(format!("error: {e}\n")))?;
        }

        let mut out = String::new();
        let mut rows = Vec::new();
        let mut totals = LengthSummary { bound_ok: true, ..Default::default() };
        for len in range.clone() {
            let s = verify_length(q, len, only, budget).map_err(lib_error)?;
            if format == Format::Human {
                let _ = writeln!(
                    out,
                    "n={len:<3} codes={:<4} codewords={:<8} deletions={:<9} insertions={:<9} failures={:<3} max|VT*|={} (a={}) bound q^n/(qn)={:.3} {}",
                    s.codes,
                    s.codewords,
                    s.deletions,
                    s.insertions,
                    s.failures,
                    s.best_size,
                    s.best_a,
                    checked_pow(q as u64, len as u32).unwrap() as f64 / (q as f64 * len as f64),
                    if s.bound_ok { "ok" } else { "VIOLATED" }
                );
            }
            rows.push(format!("{len}:{}:{}", s.best_a, s.best_size));
            totals.codes += s.codes;
            totals.codewords += s.codewords;
            totals.deletions += s.deletions;
            totals.insertions += s.insertions;
            totals.failures += s.failures;
            totals.bound_ok &= s.bound_ok;
            if totals.witness.is_none() {
                totals.witness = s.witness;
            }
        }
        let passed = totals.failures == 0 && totals.bound_ok;
        match format {
            Format::Human => {
                let _ = writeln!(out, "{}", if passed { "verify: ok" } else { "verify: FAILED" });
                if let Some(w) = &totals.witness {
                    let _ = writeln!(out, "first witness: {w}");
                }
            }
            Format::Record => {
                let mut f = Fields::default();
                f.put("command", "verify")
                    .put("q", q)
                    .put("n", format!("{}..{}", range.start(), range.end()))
                    .put("a", a)
                    .put("codes", totals.codes)
                    .put("codewords", totals.codewords)
                    .put("deletions", totals.deletions)
                    .put("insertions", totals.insertions)
                    .put("failures", totals.failures)
                    .put("bound_ok", totals.bound_ok)
                    .put("best", rows.join(","));
                if let Some(w) = &totals.witness {
                    f.put("witness", format!("{w:?}"));
                }
                out = f.render(format);
            }
        }
        Ok(if passed {
            CommandResult::ok(out)
        } else {
            CommandResult::failure(out, totals.witness.map(|w| format!("witness: {w}\n")).unwrap_or_default())
        })
    };
    attempt().unwrap_or_else(|e| e)
}

/// Parses `1024` or `4^5`.
fn parse_length(text: &str) -> Option<u64> {
    match text.split_once('^') {
        Some((b, e)) => {
            let b: u64 = b.trim().parse().ok()?;
            let e: u32 = e.trim().parse().ok()?;
            b.checked_pow(e)
        }
        None => text.trim().parse().ok(),
    }
}

/// Redundancy figures (in symbols) for one `(q, n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct RedundancyRow {
    pub q: u32,
    pub n: u64,
    /// Tenengolts' systematic encoder: `⌈log_q n⌉ + 3 + ⌈log_q 3⌉`.
    pub enc_t: u64,
    /// Abroshan et al. need strictly more than `log_q n + log_2 n`.
    pub enc_a_lower: f64,
    /// Frame overhead `t + 6` of the systematic codec at the longest
    /// message that fits in `n` symbols.
    pub enc_1_measured: Option<u64>,
    /// `⌈log_q n⌉ + 3 + ⌈log_q 3⌉`, the published figure for the systematic encoder.
    pub enc_1_formula: u64,
    /// `⌈log_q n⌉ + 1`.
    pub enc_2: u64,
    /// `log_q n + log_q (q-1)`.
    pub optimal_floor: f64,
}

pub fn redundancy_row(q: u32, n: u64) -> RedundancyRow {
    let qq = q as u64;
    let t = ceil_log(qq, n) as u64;
    let log_q = |x: f64| x.ln() / (q as f64).ln();
    let tenengolts = t + 3 + ceil_log(qq, 3) as u64;
    RedundancyRow {
        q,
        n,
        enc_t: tenengolts,
        enc_a_lower: log_q(n as f64) + (n as f64).log2(),
        enc_1_measured: longest_frame_message(q, n).map(|k| (frame_len(q, k) - k) as u64),
        enc_1_formula: tenengolts,
        enc_2: t + 1,
        optimal_floor: log_q(n as f64) + log_q(q as f64 - 1.0),
    }
}

/// Largest `k >= 2` whose systematic frame fits in `n` symbols.
fn longest_frame_message(q: u32, n: u64) -> Option<usize> {
    let n = usize::try_from(n).ok()?;
    if n < frame_len(q, 2) {
        return None;
    }
    let mut k = n.saturating_sub(6 + ceil_log(q as u64, n as u64) as usize).max(2);
    while k > 2 && frame_len(q, k) > n {
        k -= 1;
    }
    while frame_len(q, k + 1) <= n {
        k += 1;
    }
    Some(k)
}

fn cmd_tables(qs: &[u32], ns: &[String], format: Format) -> CommandResult {
    let mut lengths = Vec::new();
    for text in ns.iter().filter(|t| !t.trim().is_empty()) {
        match parse_length(text) {
            Some(n) if n >= 2 => lengths.push(n),
            _ => return CommandResult::usage(format!("error: bad length {text:?}\n")),
        }
    }
    if let Some(&bad) = qs.iter().find(|&&q| q < 2) {
        return CommandResult::usage(format!("error: q must be at least 2, got {bad}\n"));
    }
    let mut out = String::new();
    if format == Format::Human && !lengths.is_empty() && !qs.is_empty() {
        let _ = writeln!(
            out,
            "{:>3} {:>14} {:>6} {:>9} {:>11} {:>10} {:>6} {:>9}",
            "q", "n", "Enc_T", "Enc_A >", "Enc_1", "Enc_1 pub", "Enc_2", "optimal"
        );
    }
    for &q in qs {
        for &n in &lengths {
            let row = redundancy_row(q, n);
            let measured = row.enc_1_measured.map_or("-".to_string(), |m| m.to_string());
            match format {
                Format::Human => {
                    let _ = writeln!(
                        out,
                        "{:>3} {:>14} {:>6} {:>9.3} {:>11} {:>10} {:>6} {:>9.3}",
                        q, n, row.enc_t, row.enc_a_lower, measured, row.enc_1_formula, row.enc_2, row.optimal_floor
                    );
                }
                Format::Record => {
                    let mut f = Fields::default();
                    f.put("q", q)
                        .put("n", n)
                        .put("enc_t", row.enc_t)
                        .put("enc_a_gt", format!("{:.3}", row.enc_a_lower))
                        .put("enc_1", measured)
                        .put("enc_1_formula", row.enc_1_formula)
                        .put("enc_2", row.enc_2)
                        .put("optimal_floor", format!("{:.3}", row.optimal_floor));
                    out.push_str(&f.render(format));
                }
            }
        }
    }
    CommandResult::ok(out)
}

fn cmd_fuzz(q: u32, n: usize, a: u64, trials: u64, seed: u64) -> CommandResult {
    let params = match CodeParams::new(q, n, a) {
        Ok(p) => p,
        Err(e) => return lib_error(e),
    };
    match fuzz_roundtrip(&params, trials, seed) {
        Ok(report) if report.failures == 0 => CommandResult::ok(report.to_string()),
        Ok(report) => CommandResult::failure(report.to_string(), String::new()),
        Err(e) => lib_error(e),
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn digits(ds: &[u32], q: u32) -> String {
    Word::from_raw(ds.to_vec(), q).to_string()
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or("-".to_string(), |v| v.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..8"), Some(4..=8));
        assert_eq!(parse_range("4..=8"), Some(4..=8));
        assert_eq!(parse_range("5"), Some(5..=5));
        assert_eq!(parse_range("8..4"), None);
        assert_eq!(parse_range("x"), None);
    }

    #[test]
    fn lengths() {
        assert_eq!(parse_length("4^10"), Some(1 << 20));
        assert_eq!(parse_length("1024"), Some(1024));
        assert_eq!(parse_length("2^99"), None);
    }

    #[test]
    fn table_rows() {
        let row = redundancy_row(4, 1 << 20);
        assert_eq!((row.enc_t, row.enc_2, row.enc_1_formula), (14, 11, 14));
        assert!((row.enc_a_lower - 30.0).abs() < 1e-9);
        assert!((row.optimal_floor - (10.0 + 3f64.ln() / 4f64.ln())).abs() < 1e-9);
        let row = redundancy_row(2, 1 << 10);
        assert_eq!(row.enc_2, 11);
        assert_eq!(row.enc_t, 10 + 3 + 2);
        assert!((row.optimal_floor - 10.0).abs() < 1e-9);
    }

    #[test]
    fn longest_frame() {
        // q=3: frame_len(6) = 6 + 2 + 6 = 14.
        assert_eq!(longest_frame_message(3, 14), Some(6));
        assert_eq!(longest_frame_message(3, 13), Some(5));
        assert_eq!(longest_frame_message(3, 5), None);
        let k = longest_frame_message(4, 1 << 20).unwrap();
        assert!(frame_len(4, k) <= 1 << 20 && frame_len(4, k + 1) > 1 << 20);
        assert_eq!(redundancy_row(4, 1 << 20).enc_1_measured, Some(16));
    }
}
