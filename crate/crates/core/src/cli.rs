//! The `nyldon` command line.

use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{One, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::json;

use crate::acceptance;
use crate::analysis::{self, nyldon_power_bound};
use crate::budget::Budget;
use crate::error::Error;
use crate::fastfactor::{self, Comparator};
use crate::hallsets;
use crate::lazard;
use crate::melancon::{self, Mode};
use crate::oracle;
use crate::policy::Policy;
use crate::word::{Alphabet, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    /// Stack algorithm with letter-by-letter comparisons.
    Naive,
    /// Stack algorithm with suffix-array comparisons.
    Fast,
    /// Melançon's contraction with a priority queue.
    Melancon,
}

const POLICIES: [&str; 3] = ["lex", "revlex", "deglex"];

#[derive(Debug, Parser)]
#[command(name = "nyldon", version, about = "Nyldon words, Melançon's algorithm and related checks")]
pub struct Cli {
    /// Alphabet size; letters are 0..k-1.
    #[arg(long, global = true, default_value_t = 2)]
    alphabet: u32,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the nondecreasing factorization of a word.
    Factor {
        word: String,
        #[arg(long, value_enum, default_value_t = Algorithm::Fast)]
        algorithm: Algorithm,
        /// Orders other than lex always use Melançon's algorithm.
        #[arg(long, default_value = "lex", value_parser = POLICIES)]
        policy: String,
    },
    /// Print whether a word is a member of the set.
    IsMember {
        word: String,
        #[arg(long, value_enum, default_value_t = Algorithm::Fast)]
        algorithm: Algorithm,
        #[arg(long, default_value = "lex", value_parser = POLICIES)]
        policy: String,
    },
    /// Print the member conjugate of a primitive word.
    Conjugate {
        word: String,
        #[arg(long, default_value = "lex", value_parser = POLICIES)]
        policy: String,
    },
    /// Print the blocks after each contraction pass.
    Trace {
        word: String,
        #[arg(long, default_value = "circular", value_parser = ["circular", "linear"])]
        mode: String,
        #[arg(long, default_value = "lex", value_parser = POLICIES)]
        policy: String,
    },
    /// List all members up to a length, shortest first.
    Enumerate {
        #[arg(long)]
        max_len: usize,
        #[arg(long, default_value = "lex", value_parser = POLICIES)]
        policy: String,
    },
    /// Check factorization and Hall properties of the truncated set.
    VerifyHall {
        #[arg(long, default_value_t = 7)]
        max_len: usize,
        #[arg(long, default_value = "lex", value_parser = POLICIES)]
        policy: String,
    },
    /// Run the right Lazard procedure on Nyldon words.
    Lazard {
        #[arg(long)]
        max_len: usize,
        /// Print every step.
        #[arg(long)]
        trace: bool,
        /// Print the exact Kraft sum of every step truncated at this length.
        #[arg(long)]
        kraft: Option<usize>,
    },
    /// Check whether equal-length words form a circular code.
    CircularCheck {
        /// Codewords; defaults to the Nyldon words of `--length`.
        words: Vec<String>,
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, default_value_t = 3)]
        max_blocks: usize,
    },
    /// Profile factorizations of powers of one word, or scan all words.
    PowerScan {
        word: Option<String>,
        #[arg(long, default_value_t = 10)]
        max_len: usize,
        /// Exponent; defaults to floor(log2 len) + 3.
        #[arg(long)]
        exponent: Option<usize>,
    },
    /// Check that words below all their Lyndon proper suffixes are Lyndon.
    LyndonCheck {
        #[arg(long, default_value_t = 14)]
        max_len: usize,
    },
    /// Run the acceptance criteria.
    Selftest {
        /// Criterion numbers to run; all when omitted.
        only: Vec<u8>,
    },
    /// Print comparison counts and timings as CSV.
    Bench {
        #[arg(long, default_value_t = 1 << 16)]
        max_len: usize,
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
    },
}

/// Failures mapped to exit codes.
enum Failure {
    Usage(String),
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. }
            | Error::InvalidLetter { .. }
            | Error::AlphabetTooSmall(_)
            | Error::UnknownPolicy(_)
            | Error::EmptyWord => Failure::Usage(e.to_string()),
            e => Failure::Domain(e),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
/// Returns 0 on success, 1 on domain errors or failed checks, 2 on usage
/// errors.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.jobs.max(1)).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let (result, buffer) = pool.install(|| {
        let mut buffer = Vec::new();
        (execute(&cli, &mut buffer), buffer)
    });
    if let Err(e) = out.write_all(&buffer) {
        let _ = writeln!(err, "error: {e}");
        return 1;
    }
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn policy(id: &str) -> Result<Policy, Failure> {
    Ok(Policy::from_id(id)?)
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> Outcome {
    let text = serde_json::to_string(value).map_err(|e| Failure::Io(std::io::Error::other(e)))?;
    writeln!(out, "{text}")?;
    Ok(0)
}

fn set_braces(words: impl IntoIterator<Item = impl std::fmt::Display>) -> String {
    let parts: Vec<String> = words.into_iter().map(|w| w.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn factorize(w: &Word, algorithm: Algorithm, p: &Policy) -> Result<crate::factorization::Factorization, Failure> {
    Ok(match (algorithm, p) {
        (Algorithm::Fast, Policy::Lex) => fastfactor::nyldon_factorize(w)?,
        (Algorithm::Naive, Policy::Lex) => fastfactor::factor_stack(w, Comparator::Naive)?.to_factorization(w),
        _ => melancon::factorize(w, p)?,
    })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let alphabet = Alphabet::new(cli.alphabet)?;
    let parse = |s: &str| -> Result<Word, Failure> { Ok(Word::parse(s, alphabet)?) };
    match &cli.command {
        Command::Factor { word, algorithm, policy: pid } => {
            let w = parse(word)?;
            let f = factorize(&w, *algorithm, &policy(pid)?)?;
            if cli.json {
                return json_line(out, &json!({ "word": w, "policy": pid, "factors": f.factors() }));
            }
            writeln!(out, "{}", f.to_plain())?;
        }
        Command::IsMember { word, algorithm, policy: pid } => {
            let w = parse(word)?;
            let member = factorize(&w, *algorithm, &policy(pid)?)?.is_single();
            if cli.json {
                return json_line(out, &json!({ "word": w, "policy": pid, "member": member }));
            }
            writeln!(out, "{member}")?;
        }
        Command::Conjugate { word, policy: pid } => {
            let w = parse(word)?;
            let c = melancon::conjugate(&w, &policy(pid)?)?;
            if cli.json {
                return json_line(out, &json!({ "word": w, "policy": pid, "conjugate": c }));
            }
            writeln!(out, "{c}")?;
        }
        Command::Trace { word, mode, policy: pid } => {
            let w = parse(word)?;
            let mode: Mode = mode.parse()?;
            let trace = melancon::contraction_trace(&w, &policy(pid)?, mode)?;
            if cli.json {
                return json_line(out, &json!({ "word": w, "mode": mode, "passes": trace }));
            }
            for snap in trace {
                writeln!(out, "{snap}")?;
            }
        }
        Command::Enumerate { max_len, policy: pid } => {
            let set = hallsets::generate(&policy(pid)?, alphabet, *max_len)?;
            if cli.json {
                return json_line(out, &json!({ "header": set.header(), "words": set.by_length() }));
            }
            for w in set.by_length() {
                writeln!(out, "{w}")?;
            }
        }
        Command::VerifyHall { max_len, policy: pid } => {
            let p = policy(pid)?;
            let set = oracle::enumerate(&p, alphabet, *max_len, &Budget::from_env())?;
            let verdict = hallsets::verify_hall(&set, &p)?;
            return json_line(out, &verdict);
        }
        Command::Lazard { max_len, trace, kraft } => return lazard_command(cli, out, alphabet, *max_len, *trace, *kraft),
        Command::CircularCheck { words, length, max_blocks } => {
            let code: Vec<Word> = match (words.is_empty(), length) {
                (false, _) => words.iter().map(|w| parse(w)).collect::<Result<_, _>>()?,
                (true, Some(l)) => oracle::enumerate_nyldon(alphabet, *l)?
                    .iter()
                    .filter(|w| w.len() == *l)
                    .cloned()
                    .collect(),
                (true, None) => return Err(Failure::Usage("give codewords or --length".into())),
            };
            let verdict = analysis::circular_code_check(&code, *max_blocks)?;
            if cli.json {
                return json_line(out, &verdict);
            }
            match &verdict.witness {
                None => writeln!(out, "circular ({} words, up to {} blocks)", verdict.code.len(), max_blocks)?,
                Some(w) => {
                    let blocks: Vec<String> = w.blocks.iter().map(Word::to_string).collect();
                    let parsed = analysis::rotation_parse(&verdict.code, &w.blocks, w.offset)?.unwrap_or_default();
                    let parsed: Vec<String> = parsed.iter().map(Word::to_string).collect();
                    writeln!(
                        out,
                        "not circular: ({}) rotated by {} reads ({})",
                        blocks.join(", "),
                        w.offset,
                        parsed.join(", ")
                    )?
                }
            }
        }
        Command::PowerScan { word: Some(word), exponent, .. } => {
            let w = parse(word)?;
            let k = exponent.unwrap_or(w.len().ilog2() as usize + 3);
            let p = analysis::power_profile(&w, k)?;
            if cli.json {
                return json_line(out, &p);
            }
            let show = |ws: &[Word]| ws.iter().map(Word::to_string).collect::<Vec<_>>().join(" ");
            writeln!(out, "n {}", p.n)?;
            writeln!(out, "k {}", p.k)?;
            writeln!(out, "prefix {}", show(&p.prefix_factors))?;
            writeln!(out, "central_copies {}", p.central_copies)?;
            writeln!(out, "suffix {}", show(&p.suffix_factors))?;
            writeln!(out, "K {} (bound {})", p.K, nyldon_power_bound(w.len()))?;
        }
        Command::PowerScan { word: None, max_len, exponent } => {
            let r = analysis::k_bound_scan(alphabet, *max_len, *exponent)?;
            if cli.json {
                return json_line(out, &r);
            }
            writeln!(out, "words {}", r.words_scanned)?;
            writeln!(out, "k {}..={}", r.k, r.k + 2)?;
            let witness = r.max_witness.as_ref().map(Word::to_string).unwrap_or_default();
            writeln!(out, "max_K {} {}", r.max_observed_k, witness)?;
            writeln!(out, "violations {}", r.violations.len())?;
            writeln!(out, "unstable {}", r.unstable.len())?;
            writeln!(out, "no_central_copy {}", r.no_central_copy.len())?;
            for v in &r.violations {
                writeln!(out, "violation {} K={}", v.w, v.K)?;
            }
        }
        Command::LyndonCheck { max_len } => {
            let r = analysis::lyndon_suffix_check(alphabet, *max_len)?;
            if cli.json {
                return json_line(out, &r);
            }
            match &r.counterexample {
                None => writeln!(
                    out,
                    "holds: {} words checked, hypothesis met by {}",
                    r.words_checked, r.hypothesis_holds
                )?,
                Some(w) => writeln!(out, "counterexample {w}")?,
            }
        }
        Command::Selftest { only } => {
            let results = acceptance::run_selected(only);
            let mut failed = false;
            for r in &results {
                failed |= !r.passed;
                if cli.json {
                    json_line(out, r)?;
                } else {
                    writeln!(out, "{r}")?;
                }
            }
            return Ok(i32::from(failed));
        }
        Command::Bench { max_len, algorithm } => {
            bench(out, alphabet, *max_len, *algorithm)?;
        }
    }
    Ok(0)
}

fn lazard_command(
    cli: &Cli,
    out: &mut dyn Write,
    alphabet: Alphabet,
    max_len: usize,
    trace: bool,
    kraft: Option<usize>,
) -> Outcome {
    if !trace && kraft.is_none() {
        let report = lazard::lazard_report(alphabet, max_len)?;
        if cli.json {
            return json_line(out, &json!({ "report": report }));
        }
        write_report(out, &report)?;
        return Ok(0);
    }
    let states = lazard::lazard_run(alphabet, max_len)?;
    let report = lazard::finishing_step(&states)?;
    let sums = match kraft {
        Some(l) => states
            .iter()
            .map(|s| lazard::kraft_sum(s, l))
            .collect::<Result<Vec<_>, _>>()?,
        None => Vec::new(),
    };
    if cli.json {
        let rows: Vec<_> = states
            .iter()
            .map(|s| json!({ "step": s.step, "set": s.current, "chosen": s.next_choice() }))
            .collect();
        let sums: Vec<String> = sums.iter().map(|s| s.to_string()).collect();
        return json_line(out, &json!({ "report": report, "trace": rows, "kraft": sums }));
    }
    if trace {
        for s in &states {
            let chosen = s.next_choice().map(Word::to_string).unwrap_or_default();
            writeln!(out, "{}\t{}\t{}", s.step, set_braces(&s.current), chosen)?;
        }
    }
    for (s, sum) in states.iter().zip(&sums) {
        let deficit = (num_rational::BigRational::one() - sum).to_f64().unwrap_or(f64::NAN);
        writeln!(out, "kraft {} {} (1 - {:e})", s.step, sum, deficit)?;
    }
    write_report(out, &report)?;
    Ok(0)
}

fn write_report(out: &mut dyn Write, r: &lazard::LazardReport) -> std::io::Result<()> {
    writeln!(out, "steps {}", r.total_steps)?;
    writeln!(out, "finishing_step {}", r.finishing_step)?;
    match &r.stop_word {
        Some(w) => writeln!(out, "stop_word {w}")?,
        None => writeln!(out, "stop_word -")?,
    }
    writeln!(out, "words_after_stop {}", r.words_after_stop)
}

fn bench(out: &mut dyn Write, alphabet: Alphabet, max_len: usize, only: Option<Algorithm>) -> Outcome {
    let mut rng = StdRng::seed_from_u64(1);
    writeln!(out, "n,algorithm,comparisons,nanos")?;
    let mut n = 16;
    while n <= max_len {
        let letters = (0..n).map(|_| rng.gen_range(0..alphabet.size())).collect();
        let w = Word::new(alphabet, letters)?;
        for algorithm in [Algorithm::Naive, Algorithm::Fast, Algorithm::Melancon] {
            if only.is_some_and(|a| a != algorithm) {
                continue;
            }
            let start = Instant::now();
            let comparisons = match algorithm {
                Algorithm::Naive => fastfactor::factor_stack(&w, Comparator::Naive)?.comparisons_used(),
                Algorithm::Fast => fastfactor::factor_stack(&w, Comparator::SuffixArray)?.comparisons_used(),
                Algorithm::Melancon => melancon::factorize_counted(&w, &Policy::Lex)?.1,
            };
            let nanos = start.elapsed().as_nanos();
            let name = algorithm.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
            writeln!(out, "{n},{name},{comparisons},{nanos}")?;
        }
        n *= 2;
    }
    Ok(0)
}

/// Runs the command line with captured output, for tests and examples.
pub fn run_captured(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("nyldon").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8_lossy(&out).into_owned(),
        String::from_utf8_lossy(&err).into_owned(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(run_captured(&["factor", "10001011010101"]), (0, "1000 1011010101\n".into(), String::new()));
        assert_eq!(run_captured(&["conjugate", "10001011010101"]).1, "10110101011000\n");
        assert_eq!(
            run_captured(&["conjugate", "1010"]),
            (1, String::new(), "error: word is periodic (period 10)\n".into())
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_captured(&["frobnicate"]).0, 2);
        assert_eq!(run_captured(&["factor", "102"]).0, 2);
        assert_eq!(run_captured(&["factor", "10", "--policy", "colex"]).0, 2);
        assert_eq!(run_captured(&["enumerate", "--max-len", "4", "--policy", "revlex"]).0, 1);
        assert_eq!(run_captured(&["--help"]).0, 0);
    }

    #[test]
    fn algorithms_agree() {
        for w in ["0", "10001011010101", "1101001110", "111"] {
            let outs: Vec<String> = ["naive", "fast", "melancon"]
                .iter()
                .map(|a| run_captured(&["factor", w, "--algorithm", a]).1)
                .collect();
            assert!(outs.windows(2).all(|p| p[0] == p[1]), "{w}");
        }
        assert_eq!(run_captured(&["is-member", "1001110"]).1, "true\n");
        assert_eq!(run_captured(&["is-member", "0011", "--policy", "revlex"]).1, "true\n");
    }

    #[test]
    fn json_round_trip() {
        for input in ["10001011010101", "2,10,3,0"] {
            let alphabet = if input.contains(',') { "12" } else { "2" };
            let (code, text, _) = run_captured(&["--alphabet", alphabet, "factor", input, "--json"]);
            assert_eq!(code, 0);
            let v: serde_json::Value = serde_json::from_str(&text).unwrap();
            assert_eq!(v["word"], input);
            let a = Alphabet::new(alphabet.parse().unwrap()).unwrap();
            let factors: Vec<Word> = v["factors"]
                .as_array()
                .unwrap()
                .iter()
                .map(|f| Word::parse(f.as_str().unwrap(), a).unwrap())
                .collect();
            let joined = factors.iter().fold(Word::empty(a), |acc, f| acc.concat(f));
            assert_eq!(joined.to_string(), input);
            for (f, raw) in factors.iter().zip(v["factors"].as_array().unwrap()) {
                assert_eq!(f.to_string(), raw.as_str().unwrap());
            }
        }
    }

    #[test]
    fn lazard_trace_rows() {
        let (code, text, _) = run_captured(&["lazard", "--max-len", "5", "--trace"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("1\t{0, 1}\t0\n2\t{1, 10, 100, 1000, 10000}\t1\n"));
        assert!(text.contains("finishing_step 4\nstop_word 10\n"));
    }

    #[test]
    fn circular_check_output() {
        let (_, text, _) = run_captured(&["circular-check", "--length", "5"]);
        assert_eq!(text, "circular (6 words, up to 3 blocks)\n");
        let (_, text, _) = run_captured(&["circular-check", "00", "01", "10", "--max-blocks", "2"]);
        assert!(text.starts_with("not circular"));
    }

    #[test]
    fn bench_csv() {
        let (code, text, _) = run_captured(&["bench", "--max-len", "64"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n,algorithm,comparisons,nanos");
        assert_eq!(lines.len(), 1 + 3 * 3);
    }
}
