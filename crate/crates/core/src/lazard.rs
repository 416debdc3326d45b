//! The right Lazard procedure for Nyldon words restricted to `A^{≤n}`.
//!
//! `Y_1 = A`; at step `i` the lexicographically least `u_i ∈ Y_i` is chosen
//! and `Y_{i+1} = (Y_i \ u_i) u_i^*`, truncated at length `n`.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::word::{Alphabet, Letter, Word};

/// `Y_i ∩ A^{≤n}` together with the words chosen before step `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LazardState {
    pub alphabet: u32,
    pub n: usize,
    pub step: usize,
    pub chosen: Vec<Word>,
    pub current: BTreeSet<Word>,
}

impl LazardState {
    /// `u_i`, the least word of the current set.
    pub fn next_choice(&self) -> Option<&Word> {
        self.current.first()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LazardReport {
    pub alphabet: u32,
    pub n: usize,
    pub total_steps: usize,
    pub finishing_step: usize,
    /// `u_{finishing_step - 1}`; absent when `Y_1` already holds everything.
    pub stop_word: Option<Word>,
    pub words_after_stop: usize,
}

/// The procedure as a step iterator. Each call to [`LazardProcedure::advance`]
/// performs one step and returns the chosen word.
#[derive(Debug, Clone)]
pub struct LazardProcedure {
    alphabet: Alphabet,
    n: usize,
    step: usize,
    // buckets[len]: members of the current set of that length
    buckets: Vec<BTreeSet<Vec<Letter>>>,
    size: usize,
}

impl LazardProcedure {
    pub fn new(alphabet: Alphabet, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("length bound must be at least 1".into()));
        }
        let mut buckets = vec![BTreeSet::new(); n + 1];
        buckets[1] = (0..alphabet.size()).map(|a| vec![a]).collect();
        Ok(LazardProcedure {
            alphabet,
            n,
            step: 1,
            buckets,
            size: alphabet.size() as usize,
        })
    }

    pub fn step(&self) -> usize {
        self.step
    }

    /// `|Y_i ∩ A^{≤n}|` for the current step.
    pub fn current_len(&self) -> usize {
        self.size
    }

    pub fn is_finished(&self) -> bool {
        self.size == 0
    }

    pub fn current(&self) -> BTreeSet<Word> {
        self.buckets
            .iter()
            .flatten()
            .map(|l| Word::from_slice_unchecked(self.alphabet, l))
            .collect()
    }

    fn least(&self) -> Option<Vec<Letter>> {
        self.buckets.iter().filter_map(|b| b.first()).min().cloned()
    }

    /// Chooses `u_i`, builds `Y_{i+1}`, and returns `u_i`.
    pub fn advance(&mut self) -> Option<Word> {
        let u = self.least()?;
        self.buckets[u.len()].remove(&u);
        self.size -= 1;
        let mut fresh = Vec::new();
        for len in 1..=self.n.saturating_sub(u.len()) {
            for x in &self.buckets[len] {
                let mut y = x.clone();
                while y.len() + u.len() <= self.n {
                    y.extend_from_slice(&u);
                    fresh.push(y.clone());
                }
            }
        }
        for y in fresh {
            if self.buckets[y.len()].insert(y) {
                self.size += 1;
            }
        }
        self.step += 1;
        Some(Word::from_slice_unchecked(self.alphabet, &u))
    }
}

/// Every state of the run, from `Y_1` to the last nonempty set.
pub fn lazard_run(alphabet: Alphabet, n: usize) -> Result<Vec<LazardState>> {
    lazard_run_with_budget(alphabet, n, &Budget::from_env())
}

pub fn lazard_run_with_budget(alphabet: Alphabet, n: usize, budget: &Budget) -> Result<Vec<LazardState>> {
    let mut proc = LazardProcedure::new(alphabet, n)?;
    let mut states = Vec::new();
    let mut chosen = Vec::new();
    let mut stored: u64 = 0;
    while !proc.is_finished() {
        budget.check_time()?;
        stored += (proc.current_len() + chosen.len()) as u64;
        budget.check_items(stored, "Lazard trace")?;
        states.push(LazardState {
            alphabet: alphabet.size(),
            n,
            step: proc.step(),
            chosen: chosen.clone(),
            current: proc.current(),
        });
        chosen.extend(proc.advance());
    }
    Ok(states)
}

fn report_from_sizes(alphabet: Alphabet, n: usize, chosen: &[Word], sizes: &[usize]) -> LazardReport {
    let total = chosen.len();
    let finishing = (1..=total)
        .find(|&i| (i - 1) + sizes[i - 1] == total)
        .unwrap_or(total);
    LazardReport {
        alphabet: alphabet.size(),
        n,
        total_steps: total,
        finishing_step: finishing,
        stop_word: finishing.checked_sub(2).map(|k| chosen[k].clone()),
        words_after_stop: total - (finishing - 1),
    }
}

/// Reads the finishing step off a complete trace.
///
/// Members of `Y_i ∩ A^{≤n}` persist until chosen, so the chosen words and
/// the current set are disjoint and step `i` is complete exactly when
/// `(i - 1) + |Y_i ∩ A^{≤n}|` is the total number of steps.
pub fn finishing_step(trace: &[LazardState]) -> Result<LazardReport> {
    let last = trace
        .last()
        .ok_or_else(|| Error::Precondition("empty Lazard trace".into()))?;
    if last.current.len() != 1 {
        return Err(Error::Precondition("Lazard trace is incomplete".into()));
    }
    let mut chosen = last.chosen.clone();
    chosen.extend(last.next_choice().cloned());
    let sizes: Vec<usize> = trace.iter().map(|s| s.current.len()).collect();
    let alphabet = Alphabet::new(last.alphabet)?;
    Ok(report_from_sizes(alphabet, last.n, &chosen, &sizes))
}

/// Runs the procedure without keeping the sets, for large `n`.
pub fn lazard_report(alphabet: Alphabet, n: usize) -> Result<LazardReport> {
    let budget = Budget::from_env();
    let mut proc = LazardProcedure::new(alphabet, n)?;
    let (mut chosen, mut sizes) = (Vec::new(), Vec::new());
    while !proc.is_finished() {
        if chosen.len() % 1024 == 0 {
            budget.check_time()?;
        }
        sizes.push(proc.current_len());
        chosen.extend(proc.advance());
    }
    Ok(report_from_sizes(alphabet, n, &chosen, &sizes))
}

/// The closed-form stop word for length bound `l`, `l ≥ 5`.
pub fn predicted_stop_word(alphabet: Alphabet, l: usize) -> Result<Word> {
    if l < 5 {
        return Err(Error::OutOfRegime(format!(
            "no stop-word formula for length bound {l} < 5"
        )));
    }
    let m = alphabet.max_letter();
    let mut letters = vec![m, m - 1];
    if l % 2 == 1 {
        letters.extend(std::iter::repeat_n(m, (l - 5) / 2));
    } else {
        letters.extend(std::iter::repeat_n(m, (l - 6) / 2));
        letters.push(m - 1);
    }
    Word::new(alphabet, letters)
}

/// The closed-form number of Nyldon words of length at most `l` that are
/// lexicographically greater than the stop word.
pub fn count_words_after_stop(alphabet: Alphabet, l: usize) -> Result<BigUint> {
    let a = BigUint::from(alphabet.size());
    let small = alphabet.size() as u64;
    let geometric = |e: usize| (a.pow(e as u32) - &a) / (&a - 1u32);
    if l % 2 == 1 && l >= 15 {
        let n = (l - 1) / 2;
        Ok(geometric(n + 2) - BigUint::from(small.pow(3) + small.pow(2) + 2 * small + 2))
    } else if l.is_multiple_of(2) && l >= 18 {
        let n = l / 2;
        Ok(geometric(n) - BigUint::from(small.pow(4) + small.pow(3) + small.pow(2) + small + 3))
    } else {
        Err(Error::OutOfRegime(format!(
            "length bound {l} is below the closed-form range (odd >= 15, even >= 18); \
             count by enumeration instead"
        )))
    }
}

/// Per-length member counts of `Y_i` up to length `l`, from the star
/// recurrence applied to the chosen words.
fn star_counts(alphabet: Alphabet, chosen: &[Word], l: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); l + 1];
    if l >= 1 {
        c[1] = BigUint::from(alphabet.size());
    }
    for u in chosen {
        let k = u.len();
        if k > l {
            continue;
        }
        c[k] -= 1u32;
        for len in k + 1..=l {
            let prev = c[len - k].clone();
            c[len] += prev;
        }
    }
    c
}

/// `Σ |A|^{-|y|}` over `y ∈ Y_i` with `|y| ≤ l`, exactly.
pub fn kraft_sum(state: &LazardState, l: usize) -> Result<BigRational> {
    let alphabet = Alphabet::new(state.alphabet)?;
    let counts = star_counts(alphabet, &state.chosen, l);
    let denom = BigUint::from(alphabet.size()).pow(l as u32);
    let mut numer = BigUint::zero();
    for (len, c) in counts.iter().enumerate().skip(1) {
        numer += c * BigUint::from(alphabet.size()).pow((l - len) as u32);
    }
    Ok(BigRational::new(numer.into(), denom.into()))
}

/// `Y_i ∩ A^{≤l}`, regenerated from the chosen words.
pub fn materialize(state: &LazardState, l: usize, budget: &Budget) -> Result<BTreeSet<Word>> {
    let alphabet = Alphabet::new(state.alphabet)?;
    let total: BigUint = star_counts(alphabet, &state.chosen, l).iter().sum();
    let total = u64::try_from(total).unwrap_or(u64::MAX);
    budget.check_items(total, "materializing Y_i")?;
    let mut y: BTreeSet<Vec<Letter>> = (0..alphabet.size()).map(|a| vec![a]).collect();
    for u in &state.chosen {
        let u = u.letters();
        y.remove(u);
        let mut fresh = Vec::new();
        for x in &y {
            let mut z = x.clone();
            while z.len() + u.len() <= l {
                z.extend_from_slice(u);
                fresh.push(z.clone());
            }
        }
        y.extend(fresh);
    }
    Ok(y.into_iter()
        .filter(|w| w.len() <= l)
        .map(|w| Word::from_slice_unchecked(alphabet, &w))
        .collect())
}

/// The shortest, then least, word of length at most `l` with two or more
/// decompositions into words of `code`.
pub fn code_witness(code: &BTreeSet<Word>, alphabet: Alphabet, l: usize, budget: &Budget) -> Result<Option<Word>> {
    budget.check_items(alphabet.count_up_to(l), "decodability check")?;
    let members: std::collections::HashSet<&[Letter]> = code.iter().map(|w| w.letters()).collect();
    let max = code.iter().map(Word::len).max().unwrap_or(0);
    for w in alphabet.words_up_to(l) {
        let s = w.letters();
        let mut ways = vec![0u8; s.len() + 1];
        ways[0] = 1;
        for end in 1..=s.len() {
            let mut total = 0u8;
            for start in end.saturating_sub(max)..end {
                if ways[start] > 0 && members.contains(&s[start..end]) {
                    total = total.saturating_add(ways[start]);
                }
            }
            ways[end] = total.min(2);
        }
        if ways[s.len()] >= 2 {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Unique decodability of `Y_i ∩ A^{≤l}` over concatenations of total
/// length at most `l`.
pub fn lazard_code_check(state: &LazardState, l: usize) -> Result<bool> {
    let budget = Budget::from_env();
    let code = materialize(state, l, &budget)?;
    let alphabet = Alphabet::new(state.alphabet)?;
    Ok(code_witness(&code, alphabet, l, &budget)?.is_none())
}

/// Whether a Kraft sum lies in the open interval `(1 - 10^-6, 1)`.
pub fn within_micro_of_one(sum: &BigRational) -> bool {
    let one = BigRational::one();
    let lower = &one - BigRational::new(1.into(), 1_000_000.into());
    *sum > lower && *sum < one
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::enumerate_nyldon;

    fn b(s: &str) -> Word {
        Word::parse(s, Alphabet::BINARY).unwrap()
    }

    fn set(words: &[&str]) -> BTreeSet<Word> {
        words.iter().map(|w| b(w)).collect()
    }

    #[test]
    fn run_for_length_five() {
        let trace = lazard_run(Alphabet::BINARY, 5).unwrap();
        assert_eq!(trace.len(), 14);
        assert_eq!(
            trace[2].current,
            set(&["10", "101", "1011", "10111", "100", "1001", "10011", "1000", "10001", "10000"])
        );
        assert_eq!(trace[2].next_choice(), Some(&b("10")));
        let chosen: Vec<Word> = trace.iter().map(|s| s.next_choice().unwrap().clone()).collect();
        let nyldon: Vec<Word> = enumerate_nyldon(Alphabet::BINARY, 5).unwrap().iter().cloned().collect();
        assert_eq!(chosen, nyldon);
        let report = finishing_step(&trace).unwrap();
        assert_eq!((report.total_steps, report.finishing_step), (14, 4));
        assert_eq!(report.stop_word, Some(b("10")));
        assert_eq!(report.words_after_stop, 11);
        assert_eq!(lazard_report(Alphabet::BINARY, 5).unwrap(), report);
    }

    #[test]
    fn run_for_length_one() {
        let trace = lazard_run(Alphabet::BINARY, 1).unwrap();
        assert_eq!(trace.len(), 2);
        let report = finishing_step(&trace).unwrap();
        assert_eq!(report.finishing_step, 1);
        assert_eq!(report.stop_word, None);
    }

    #[test]
    fn stop_word_formula() {
        assert_eq!(predicted_stop_word(Alphabet::BINARY, 5).unwrap(), b("10"));
        assert_eq!(predicted_stop_word(Alphabet::BINARY, 15).unwrap(), b("1011111"));
        assert_eq!(predicted_stop_word(Alphabet::BINARY, 18).unwrap(), b("101111110"));
        assert!(predicted_stop_word(Alphabet::BINARY, 4).is_err());
    }

    #[test]
    fn count_formula() {
        assert_eq!(count_words_after_stop(Alphabet::BINARY, 15).unwrap(), 492u32.into());
        assert_eq!(count_words_after_stop(Alphabet::BINARY, 18).unwrap(), 477u32.into());
        assert_eq!(count_words_after_stop(Alphabet::TERNARY, 15).unwrap(), 9796u32.into());
        assert!(matches!(count_words_after_stop(Alphabet::BINARY, 13), Err(Error::OutOfRegime(_))));
        assert!(count_words_after_stop(Alphabet::BINARY, 16).is_err());
    }

    #[test]
    fn kraft_sums() {
        let trace = lazard_run(Alphabet::BINARY, 5).unwrap();
        for l in [1, 5, 40] {
            assert!(kraft_sum(&trace[0], l).unwrap().is_one());
            let y2 = kraft_sum(&trace[1], l).unwrap();
            let expected = BigRational::one() - BigRational::new(1.into(), BigUint::from(2u32).pow(l as u32).into());
            assert_eq!(y2, expected);
        }
    }

    #[test]
    fn materialized_sets_match_the_run() {
        let trace = lazard_run(Alphabet::BINARY, 6).unwrap();
        for state in &trace {
            let m = materialize(state, 6, &Budget::default()).unwrap();
            assert_eq!(m, state.current);
        }
    }

    #[test]
    fn decodability() {
        let trace = lazard_run(Alphabet::BINARY, 5).unwrap();
        assert!(lazard_code_check(&trace[0], 10).unwrap());
        assert!(lazard_code_check(&trace[2], 10).unwrap());
        let bad = set(&["0", "1", "01"]);
        assert_eq!(code_witness(&bad, Alphabet::BINARY, 6, &Budget::default()).unwrap(), Some(b("01")));
    }
}
