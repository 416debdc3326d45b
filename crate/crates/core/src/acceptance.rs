//! The acceptance criteria, shared by the `selftest` command and the
//! `acceptance` test target. Each criterion reports pass or fail with a
//! short explanation; none of them panic on a mismatch.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::analysis;
use crate::budget::Budget;
use crate::cli::run_captured;
use crate::error::Result;
use crate::factorization::Factorization;
use crate::fastfactor::{self, Comparator};
use crate::hallsets;
use crate::known;
use crate::lazard;
use crate::melancon::{self, BlockChain, Mode};
use crate::oracle::{self, BruteForce};
use crate::policy::{OrderPolicy, Policy};
use crate::word::{conjugates, is_primitive, Alphabet, Word};

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {:>2} {} ({:.2}s): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.title,
            self.seconds,
            self.detail
        )
    }
}

type Check = fn() -> Result<(bool, String)>;

/// Criterion number, title, time limit, check.
pub const CRITERIA: [(u8, &str, Duration, Check); 12] = [
    (1, "binary Nyldon words up to length 7", Duration::from_secs(1), binary_nyldon_table),
    (2, "worked examples", Duration::from_secs(10), worked_examples),
    (3, "oracle equivalence", Duration::from_secs(120), oracle_equivalence),
    (4, "unique conjugate", Duration::from_secs(120), unique_conjugate),
    (5, "comparison bound", Duration::from_secs(300), comparison_bound),
    (6, "binary Lazard trace for n = 5", Duration::from_secs(10), lazard_trace_table),
    (7, "Lazard stop word and count", Duration::from_secs(240), lazard_stop_word),
    (8, "Kraft-McMillan equality", Duration::from_secs(60), kraft),
    (9, "circular codes", Duration::from_secs(60), circular_codes),
    (10, "power bound", Duration::from_secs(300), power_bound),
    (11, "Lyndon suffix theorem", Duration::from_secs(60), lyndon_suffixes),
    (12, "property suites", Duration::from_secs(120), property_suites),
];

/// Runs one criterion; exceeding its time limit counts as a failure.
pub fn run_criterion(id: u8) -> Option<CriterionResult> {
    let &(id, title, limit, check) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let outcome = check();
    let elapsed = start.elapsed();
    let (mut passed, mut detail) = match outcome {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    if elapsed > limit {
        passed = false;
        detail = format!("{detail}; exceeded the {}s limit", limit.as_secs());
    }
    Some(CriterionResult {
        id,
        title,
        passed,
        detail,
        seconds: elapsed.as_secs_f64(),
    })
}

/// Runs the listed criteria, or all of them when `ids` is empty.
pub fn run_selected(ids: &[u8]) -> Vec<CriterionResult> {
    CRITERIA
        .iter()
        .filter(|c| ids.is_empty() || ids.contains(&c.0))
        .filter_map(|c| run_criterion(c.0))
        .collect()
}

pub fn run_all() -> Vec<CriterionResult> {
    run_selected(&[])
}

fn b(s: &str) -> Word {
    Word::from_slice_unchecked(
        Alphabet::BINARY,
        &s.bytes().map(|c| u32::from(c - b'0')).collect::<Vec<_>>(),
    )
}

fn strings(ws: &[Word]) -> Vec<String> {
    ws.iter().map(Word::to_string).collect()
}

fn binary_nyldon_table() -> Result<(bool, String)> {
    let (code, text, _) = run_captured(&["enumerate", "--alphabet", "2", "--max-len", "7"]);
    let listed: Vec<&str> = text.lines().collect();
    let counts: Vec<usize> = (1..=7).map(|l| listed.iter().filter(|w| w.len() == l).count()).collect();
    let ok = code == 0 && listed == known::NYLDON_BINARY_7 && counts == known::NYLDON_BINARY_7_COUNTS;
    Ok((ok, format!("{} words, per-length counts {:?}", listed.len(), counts)))
}

fn worked_examples() -> Result<(bool, String)> {
    let conj = run_captured(&["conjugate", "10001011010101"]).1;
    let fact = run_captured(&["factor", "10001011010101"]).1;
    let w = b("10001011010101");
    let circular = melancon::contraction_trace(&w, &Policy::Lex, Mode::Circular)?;
    let linear = melancon::contraction_trace(&w, &Policy::Lex, Mode::Linear)?;
    let circ_ok = circular.len() == known::CIRCULAR_TRACE.len()
        && circular.iter().zip(known::CIRCULAR_TRACE).all(|(s, e)| strings(&s.blocks) == e);
    let lin_ok = linear.len() == known::LINEAR_TRACE.len() + 1
        && linear.iter().zip(known::LINEAR_TRACE).all(|(s, e)| strings(&s.blocks) == e)
        && strings(&linear.last().unwrap().emitted) == ["1000", "1011010101"];
    let cli_trace = run_captured(&["trace", "10001011010101"]).1;
    let cli_ok = cli_trace.lines().nth(3) == Some("1000, 1011010, 101");
    let ok = conj == "10110101011000\n" && fact == "1000 1011010101\n" && circ_ok && lin_ok && cli_ok;
    Ok((
        ok,
        format!(
            "conjugate {}, factor ({}), circular trace {}, linear trace {}",
            conj.trim(),
            fact.trim().replace(' ', ", "),
            if circ_ok { "matches" } else { "differs" },
            if lin_ok { "matches" } else { "differs" }
        ),
    ))
}

fn three_way(w: &Word) -> Result<Option<String>> {
    let brute = BruteForce::new(&Policy::Lex).factorize(w)?;
    let fast = fastfactor::nyldon_factorize(w)?;
    let mel = melancon::factorize(w, &Policy::Lex)?;
    let same = |f: &Factorization| f.factors() == brute.factors();
    Ok((!same(&fast) || !same(&mel)).then(|| w.to_string()))
}

fn oracle_equivalence() -> Result<(bool, String)> {
    let words: Vec<Word> = Alphabet::BINARY
        .words_up_to(12)
        .chain(Alphabet::TERNARY.words_up_to(8))
        .collect();
    let bad: Vec<String> = words
        .par_iter()
        .map(three_way)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok((
        bad.is_empty(),
        format!("{} words compared, {} mismatches {:?}", words.len(), bad.len(), bad.iter().take(3).collect::<Vec<_>>()),
    ))
}

fn mobius(n: u64) -> i64 {
    let (mut n, mut result, mut p) = (n, 1i64, 2u64);
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `(1/n) Σ_{d | n} μ(d) k^{n/d}`.
pub fn necklace_count(k: u64, n: u64) -> u64 {
    let total: i64 = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| mobius(d) * (k as i64).pow((n / d) as u32))
        .sum();
    (total / n as i64) as u64
}

fn unique_conjugate() -> Result<(bool, String)> {
    let words: Vec<Word> = Alphabet::BINARY.words_up_to(12).collect();
    let bad: Vec<String> = words
        .par_iter()
        .filter(|w| is_primitive(w).unwrap_or(false))
        .filter_map(|w| {
            let nyldon: Vec<Word> = conjugates(w)
                .ok()?
                .into_iter()
                .filter(|c| fastfactor::is_nyldon(c).unwrap_or(false))
                .collect();
            let conj = melancon::conjugate(w, &Policy::Lex).ok();
            (nyldon.len() != 1 || conj.as_ref() != nyldon.first()).then(|| w.to_string())
        })
        .collect();
    let mut counts_ok = true;
    let mut counts = Vec::new();
    for n in 1..=12usize {
        let got = words
            .iter()
            .filter(|w| w.len() == n && fastfactor::is_nyldon(w).unwrap_or(false))
            .count() as u64;
        counts_ok &= got == necklace_count(2, n as u64);
        counts.push(got);
    }
    Ok((
        bad.is_empty() && counts_ok,
        format!("{} classes with a bad rotation count; Nyldon counts {:?}", bad.len(), counts),
    ))
}

fn comparison_bound() -> Result<(bool, String)> {
    let (violations, letters) = (0..10_000u64)
        .into_par_iter()
        .map(|i| {
            let mut rng = StdRng::seed_from_u64(i);
            let len = rng.gen_range(1..=10_000);
            let k = rng.gen_range(2..=4);
            let letters = (0..len).map(|_| rng.gen_range(0..k)).collect();
            let w = Word::new(Alphabet::new(k).unwrap(), letters).unwrap();
            let stack = fastfactor::factor_stack(&w, Comparator::SuffixArray).unwrap();
            (u64::from(stack.comparisons_used() > 2 * len as u64 - 1), len as u64)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok((violations == 0, format!("10000 words, {letters} letters, {violations} violations")))
}

fn lazard_trace_table() -> Result<(bool, String)> {
    let (code, text, _) = run_captured(&["lazard", "--alphabet", "2", "--max-len", "5", "--trace"]);
    let rows: Vec<(usize, BTreeSet<String>, String)> = text
        .lines()
        .filter(|l| l.contains('\t'))
        .map(|l| {
            let cols: Vec<&str> = l.split('\t').collect();
            let set = cols[1]
                .trim_matches(|c| c == '{' || c == '}')
                .split(", ")
                .map(str::to_string)
                .collect();
            (cols[0].parse().unwrap_or(0), set, cols[2].to_string())
        })
        .collect();
    let expected: Vec<(usize, BTreeSet<String>, String)> = known::LAZARD_BINARY_5
        .iter()
        .map(|(i, set, u)| (*i, set.iter().map(|s| s.to_string()).collect(), u.to_string()))
        .collect();
    let report = lazard::finishing_step(&lazard::lazard_run(Alphabet::BINARY, 5)?)?;
    let ok = code == 0
        && rows == expected
        && report.finishing_step == 4
        && report.stop_word == Some(b("10"))
        && text.contains("finishing_step 4\nstop_word 10\n");
    Ok((
        ok,
        format!(
            "{} steps, rows {}, finishing step {}, stop word {}",
            rows.len(),
            if rows == expected { "match" } else { "differ" },
            report.finishing_step,
            report.stop_word.map(|w| w.to_string()).unwrap_or_default()
        ),
    ))
}

fn enumerated_after(stop: &Word, l: usize) -> usize {
    let words: Vec<Word> = Alphabet::BINARY.words_up_to(l).collect();
    words
        .par_iter()
        .filter(|w| *w > stop && fastfactor::is_nyldon(w).unwrap_or(false))
        .count()
}

fn lazard_stop_word() -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (l, stop, count) in [(15usize, "1011111", 492usize), (18, "101111110", 477)] {
        let report = lazard::lazard_report(Alphabet::BINARY, l)?;
        let predicted = lazard::predicted_stop_word(Alphabet::BINARY, l)?;
        let formula = lazard::count_words_after_stop(Alphabet::BINARY, l)?;
        let measured_stop = report.stop_word.clone().unwrap_or_else(|| Word::empty(Alphabet::BINARY));
        let enumerated = enumerated_after(&measured_stop, l);
        let stop_ok = measured_stop == b(stop) && predicted == b(stop);
        let count_ok = report.words_after_stop == count && enumerated == count && formula == BigUint::from(count);
        ok &= stop_ok && count_ok;
        parts.push(format!(
            "l={l}: stop {measured_stop} (expected {stop}), after stop measured {} / enumerated {enumerated} / closed form {formula} (expected {count})",
            report.words_after_stop
        ));
    }
    Ok((ok, parts.join("; ")))
}

fn kraft() -> Result<(bool, String)> {
    let states = lazard::lazard_run(Alphabet::BINARY, 5)?;
    let mut outside = Vec::new();
    let mut monotone = true;
    for s in &states {
        let mut prev = BigRational::from_integer(0.into());
        for l in 1..=40 {
            let sum = lazard::kraft_sum(s, l)?;
            monotone &= sum >= prev;
            prev = sum;
        }
        if s.step >= 2 && !lazard::within_micro_of_one(&prev) {
            let deficit = (BigRational::one() - &prev).to_f64().unwrap_or(f64::NAN);
            outside.push(format!("Y{} deficit {deficit:.3e}", s.step));
        }
    }
    let first_is_one = lazard::kraft_sum(&states[0], 40)?.is_one();
    let codes_ok = states
        .iter()
        .map(|s| lazard::lazard_code_check(s, 10))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|c| c);
    let ok = outside.is_empty() && monotone && first_is_one && codes_ok;
    Ok((
        ok,
        format!(
            "Y1 sum is 1: {first_is_one}; monotone: {monotone}; codes at L=10: {codes_ok}; outside (1-1e-6, 1) at L=40: {}",
            if outside.is_empty() { "none".to_string() } else { outside.join(", ") }
        ),
    ))
}

fn circular_codes() -> Result<(bool, String)> {
    let set = oracle::enumerate_nyldon(Alphabet::BINARY, 5)?;
    let mut ok = true;
    for l in 2..=5 {
        let code: Vec<Word> = set.iter().filter(|w| w.len() == l).cloned().collect();
        ok &= analysis::circular_code_check(&code, 3)?.is_circular;
    }
    let bad = vec![b("00"), b("01"), b("10")];
    let verdict = analysis::circular_code_check(&bad, 2)?;
    let pair = analysis::CircularWitness { blocks: vec![b("00"), b("10")], offset: 1 };
    let found = analysis::circular_code_witnesses(&bad, 2)?.contains(&pair);
    let parse = analysis::rotation_parse(&bad, &pair.blocks, 1)?;
    ok &= !verdict.is_circular && found && parse == Some(vec![b("01"), b("00")]);
    let first = verdict
        .witness
        .map(|w| format!("({}) offset {}", strings(&w.blocks).join(", "), w.offset))
        .unwrap_or_default();
    Ok((
        ok,
        format!(
            "lengths 2-5 circular; {{00, 01, 10}} rejected, first witness {first}, 0010 rotated by 1 reads 01.00: {found}"
        ),
    ))
}

fn power_bound() -> Result<(bool, String)> {
    let (w, n) = known::POWER_EXAMPLE;
    let p = analysis::power_profile(&b(w), 5)?;
    let example_ok = p.K == 4 && p.n == b(n);
    let scan = analysis::k_bound_scan(Alphabet::BINARY, 10, None)?;
    let ok = example_ok && scan.passed() && scan.no_central_copy.is_empty();
    Ok((
        ok,
        format!(
            "example K = {}; {} words at k = {}..={}, {} violations, {} unstable, max K {} at {}",
            p.K,
            scan.words_scanned,
            scan.k,
            scan.k + 2,
            scan.violations.len(),
            scan.unstable.len(),
            scan.max_observed_k,
            scan.max_witness.map(|w| w.to_string()).unwrap_or_default()
        ),
    ))
}

fn lyndon_suffixes() -> Result<(bool, String)> {
    let r = analysis::lyndon_suffix_check(Alphabet::BINARY, 14)?;
    Ok((
        r.passed(),
        format!("{} words, hypothesis met by {}", r.words_checked, r.hypothesis_holds),
    ))
}

fn property_suites() -> Result<(bool, String)> {
    let nyldon = oracle::enumerate_nyldon(Alphabet::BINARY, 12)?;
    let suffix_ok = nyldon.iter().all(|w| {
        (1..w.len()).all(|i| {
            let s = w.slice(i, w.len());
            !nyldon.contains(&s) || s < *w
        })
    });
    let brute = BruteForce::new(&Policy::Lex);
    let words: Vec<Word> = Alphabet::BINARY.words_up_to(10).collect();
    let longest_ok = words.par_iter().all(|w| {
        let last = fastfactor::nyldon_factorize(w).ok().and_then(|f| f.last().cloned());
        last.is_some() && last == brute.longest_member_suffix(w).ok()
    });
    let growth_ok = words.par_iter().all(|w| {
        let mut modes = vec![Mode::Linear];
        if is_primitive(w).unwrap_or(false) {
            modes.push(Mode::Circular);
        }
        modes.into_iter().all(|mode| {
            let Ok(mut chain) = BlockChain::new(w, &Policy::Lex, mode) else {
                return false;
            };
            chain.run().is_ok()
                && chain.contractions().iter().all(|(f, g)| {
                    let fg = f.concat(g);
                    Policy::Lex.compare(fg.letters(), f.letters()).is_gt()
                        && Policy::Lex.compare(f.letters(), g.letters()).is_gt()
                })
        })
    });
    let small = oracle::enumerate_nyldon(Alphabet::BINARY, 7)?;
    let right_hall = hallsets::verify_hall(&small, &Policy::Lex)?.is_right_hall;
    let lyndon = oracle::enumerate(&Policy::ReverseLex, Alphabet::BINARY, 7, &Budget::default())?;
    let viennot = hallsets::verify_hall(&lyndon, &Policy::ReverseLex)?.is_viennot;
    let ok = suffix_ok && longest_ok && growth_ok && right_hall && viennot;
    Ok((
        ok,
        format!(
            "suffix below word: {suffix_ok}; last factor is longest suffix: {longest_ok}; fg > f > g on contraction: {growth_ok}; Nyldon right Hall: {right_hall}; Lyndon Viennot: {viennot}"
        ),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklace_formula_small_values() {
        let got: Vec<u64> = (1..=7).map(|n| necklace_count(2, n)).collect();
        assert_eq!(got, [2, 1, 2, 3, 6, 9, 18]);
        assert_eq!(necklace_count(3, 4), 18);
    }

    #[test]
    fn known_table_matches_enumeration() {
        let set = oracle::enumerate_nyldon(Alphabet::BINARY, 7).unwrap();
        assert_eq!(strings(&set.by_length().into_iter().cloned().collect::<Vec<_>>()), known::NYLDON_BINARY_7);
    }
}
