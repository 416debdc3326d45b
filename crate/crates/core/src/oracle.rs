//! Definition-level reference implementations.
//!
//! Everything here follows the recursive definition directly: a word is a
//! member when it is a single letter or admits no nondecreasing factorization
//! into two or more shorter members. Nothing in this module calls the fast
//! factorization or Melançon code; those are tested against it.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::io::{BufRead, Write};
use std::ops::Range;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::factorization::{Factorization, Monotonicity};
use crate::policy::{OrderPolicy, Policy};
use crate::word::{Alphabet, Letter, Word};

/// Words up to this length have the uniqueness of their factorization
/// re-verified by counting every candidate.
pub const DEFAULT_UNIQUENESS_CAP: usize = 64;

/// Substring comparator: O(1) via an LCP table for lexicographic order,
/// slice comparison otherwise.
enum RangeOrder<'a> {
    Lcp { s: &'a [Letter], n1: usize, lcp: Vec<u32> },
    Policy { s: &'a [Letter], policy: &'a dyn OrderPolicy },
}

impl<'a> RangeOrder<'a> {
    fn new(s: &'a [Letter], policy: &'a dyn OrderPolicy) -> Self {
        if !policy.is_lexicographic() {
            return RangeOrder::Policy { s, policy };
        }
        let n = s.len();
        let n1 = n + 1;
        let mut lcp = vec![0u32; n1 * n1];
        for i in (0..n).rev() {
            for j in (0..n).rev() {
                if s[i] == s[j] {
                    lcp[i * n1 + j] = lcp[(i + 1) * n1 + j + 1] + 1;
                }
            }
        }
        RangeOrder::Lcp { s, n1, lcp }
    }

    fn cmp(&self, a: (usize, usize), b: (usize, usize)) -> Ordering {
        match self {
            RangeOrder::Policy { s, policy } => policy.compare(&s[a.0..a.1], &s[b.0..b.1]),
            RangeOrder::Lcp { s, n1, lcp } => {
                let (la, lb) = (a.1 - a.0, b.1 - b.0);
                let l = (lcp[a.0 * n1 + b.0] as usize).min(la).min(lb);
                if l == la || l == lb {
                    la.cmp(&lb)
                } else {
                    s[a.0 + l].cmp(&s[b.0 + l])
                }
            }
        }
    }
}

/// Membership of every substring `s[i..j]` under a policy, plus for every
/// substring the greatest possible first factor of a valid factorization.
struct SubstringTable {
    n1: usize,
    member: Vec<bool>,
    best_first: Vec<Option<usize>>,
}

impl SubstringTable {
    fn build(order: &RangeOrder<'_>, n: usize) -> Self {
        let n1 = n + 1;
        let mut t = SubstringTable {
            n1,
            member: vec![false; n1 * n1],
            best_first: vec![None; n1 * n1],
        };
        for len in 1..=n {
            for i in 0..=n - len {
                let j = i + len;
                let is_member = len == 1
                    || !(i + 1..j).any(|k| t.member(i, k) && t.extends(order, k, j, (i, k)));
                t.member[i * n1 + j] = is_member;
            }
            for k in 0..=n - len {
                let j = k + len;
                let mut best: Option<usize> = None;
                for m in k + 1..=j {
                    if !t.member(k, m) || (m < j && !t.extends(order, m, j, (k, m))) {
                        continue;
                    }
                    if best.is_none_or(|b| order.cmp((k, m), (k, b)).is_gt()) {
                        best = Some(m);
                    }
                }
                t.best_first[k * n1 + j] = best;
            }
        }
        t
    }

    fn member(&self, i: usize, j: usize) -> bool {
        self.member[i * self.n1 + j]
    }

    /// Whether `s[k..j]` factorizes with a first factor at least `lower`.
    fn extends(&self, order: &RangeOrder<'_>, k: usize, j: usize, lower: (usize, usize)) -> bool {
        match self.best_first[k * self.n1 + j] {
            Some(m) => order.cmp((k, m), lower).is_ge(),
            None => false,
        }
    }
}

/// Counts nondecreasing factorizations of `s[0..n]` whose factors satisfy
/// `member`, saturating at `u64::MAX`, and returns the first one found.
fn count_factorizations(
    n: usize,
    member: impl Fn(usize, usize) -> bool,
    order: &RangeOrder<'_>,
) -> (u64, Option<Vec<Range<usize>>>) {
    if n == 0 {
        return (1, Some(Vec::new()));
    }
    let n1 = n + 1;
    // ways[a * n1 + k]: factorizations of s[k..n] whose first factor is at
    // least the previous factor s[a..k].
    let mut ways = vec![0u64; n1 * n1];
    for a in 0..n {
        ways[a * n1 + n] = 1;
    }
    for k in (1..n).rev() {
        for a in 0..k {
            let mut total = 0u64;
            for m in k + 1..=n {
                if member(k, m) && order.cmp((k, m), (a, k)).is_ge() {
                    total = total.saturating_add(ways[k * n1 + m]);
                }
            }
            ways[a * n1 + k] = total;
        }
    }
    let mut total = 0u64;
    let mut first = None;
    for m in 1..=n {
        if member(0, m) {
            let w = ways[m];
            if w > 0 && first.is_none() {
                first = Some(m);
            }
            total = total.saturating_add(w);
        }
    }
    let witness = first.map(|m| {
        let mut ranges = vec![0..m];
        let (mut a, mut k) = (0, m);
        while k < n {
            let next = (k + 1..=n)
                .find(|&m| {
                    member(k, m) && order.cmp((k, m), (a, k)).is_ge() && ways[k * n1 + m] > 0
                })
                .expect("positive count has a continuation");
            ranges.push(k..next);
            a = k;
            k = next;
        }
        ranges
    });
    (total, witness)
}

/// Brute-force membership and factorization under an arbitrary policy.
pub struct BruteForce<'p> {
    policy: &'p dyn OrderPolicy,
    uniqueness_cap: usize,
}

impl<'p> BruteForce<'p> {
    pub fn new(policy: &'p dyn OrderPolicy) -> Self {
        BruteForce {
            policy,
            uniqueness_cap: DEFAULT_UNIQUENESS_CAP,
        }
    }

    pub fn with_uniqueness_cap(mut self, cap: usize) -> Self {
        self.uniqueness_cap = cap;
        self
    }

    pub fn is_member(&self, w: &Word) -> Result<bool> {
        w.require_nonempty()?;
        let order = RangeOrder::new(w.letters(), self.policy);
        let table = SubstringTable::build(&order, w.len());
        Ok(table.member(0, w.len()))
    }

    /// The nondecreasing factorization into members.
    ///
    /// # Panics
    ///
    /// If no factorization exists, or if more than one exists for a word no
    /// longer than the uniqueness cap. Either would contradict unique
    /// factorization for the policy.
    pub fn factorize(&self, w: &Word) -> Result<Factorization> {
        w.require_nonempty()?;
        let n = w.len();
        let order = RangeOrder::new(w.letters(), self.policy);
        let table = SubstringTable::build(&order, n);
        let ranges = if n <= self.uniqueness_cap {
            let (count, ranges) = count_factorizations(n, |i, j| table.member(i, j), &order);
            assert_eq!(
                count,
                1,
                "{w} has {count} nondecreasing factorizations under `{}`",
                self.policy.id()
            );
            ranges.expect("count is one")
        } else {
            greedy_from_table(&table, &order, n)
        };
        Ok(Factorization::from_ranges(
            w,
            ranges,
            self.policy.id(),
            Monotonicity::Nondecreasing,
        ))
    }

    /// The longest suffix of `w` that is a member.
    pub fn longest_member_suffix(&self, w: &Word) -> Result<Word> {
        w.require_nonempty()?;
        let n = w.len();
        let order = RangeOrder::new(w.letters(), self.policy);
        let table = SubstringTable::build(&order, n);
        let start = (0..n).find(|&i| table.member(i, n)).expect("last letter is a member");
        Ok(w.slice(start, n))
    }

    /// Membership of every substring, as a closure-friendly table.
    pub fn substring_members(&self, w: &Word) -> Vec<Vec<bool>> {
        let n = w.len();
        let order = RangeOrder::new(w.letters(), self.policy);
        let table = SubstringTable::build(&order, n);
        (0..=n)
            .map(|i| (0..=n).map(|j| i < j && table.member(i, j)).collect())
            .collect()
    }
}

fn greedy_from_table(table: &SubstringTable, order: &RangeOrder<'_>, n: usize) -> Vec<Range<usize>> {
    let mut ranges = Vec::new();
    let mut prev: Option<(usize, usize)> = None;
    let mut k = 0;
    while k < n {
        let m = (k + 1..=n)
            .rev()
            .find(|&m| {
                table.member(k, m)
                    && prev.is_none_or(|p| order.cmp((k, m), p).is_ge())
                    && (m == n || table.extends(order, m, n, (k, m)))
            })
            .expect("every word has a factorization");
        ranges.push(k..m);
        prev = Some((k, m));
        k = m;
    }
    ranges
}

pub fn is_nyldon_bruteforce(w: &Word) -> Result<bool> {
    BruteForce::new(&Policy::Lex).is_member(w)
}

pub fn nyldon_factorization_bruteforce(w: &Word) -> Result<Factorization> {
    BruteForce::new(&Policy::Lex).factorize(w)
}

/// A finite truncation `G ∩ A^{≤max_len}` of a generated set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedSet {
    alphabet: Alphabet,
    max_len: usize,
    policy_id: String,
    members: BTreeSet<Word>,
}

/// The JSON header line of the set file format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetHeader {
    pub alphabet: u32,
    pub max_len: usize,
    pub policy: String,
    pub count: usize,
}

impl GeneratedSet {
    pub fn new(
        alphabet: Alphabet,
        max_len: usize,
        policy_id: impl Into<String>,
        members: impl IntoIterator<Item = Word>,
    ) -> Result<Self> {
        let members: BTreeSet<Word> = members.into_iter().collect();
        for w in &members {
            if w.alphabet() != alphabet {
                return Err(Error::MismatchedAlphabet {
                    left: alphabet.size(),
                    right: w.alphabet().size(),
                });
            }
            if w.is_empty() {
                return Err(Error::EmptyWord);
            }
            if w.len() > max_len {
                return Err(Error::WordTooLong {
                    len: w.len(),
                    max_len,
                });
            }
        }
        Ok(GeneratedSet {
            alphabet,
            max_len,
            policy_id: policy_id.into(),
            members,
        })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn policy_id(&self) -> &str {
        &self.policy_id
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.members.contains(w)
    }

    /// Members in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.members.iter()
    }

    /// Members ordered by length, then lexicographically.
    pub fn by_length(&self) -> Vec<&Word> {
        let mut v: Vec<&Word> = self.members.iter().collect();
        v.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        v
    }

    pub fn count_of_length(&self, len: usize) -> usize {
        self.members.iter().filter(|w| w.len() == len).count()
    }

    pub fn without(&self, w: &Word) -> GeneratedSet {
        let mut s = self.clone();
        s.members.remove(w);
        s
    }

    pub(crate) fn letter_set(&self) -> HashSet<Vec<Letter>> {
        self.members.iter().map(|w| w.letters().to_vec()).collect()
    }

    pub fn header(&self) -> SetHeader {
        SetHeader {
            alphabet: self.alphabet.size(),
            max_len: self.max_len,
            policy: self.policy_id.clone(),
            count: self.members.len(),
        }
    }

    /// Writes the JSON header line followed by one word per line, shorter
    /// words first.
    pub fn write_to(&self, mut out: impl Write) -> std::io::Result<()> {
        let header = serde_json::to_string(&self.header()).map_err(std::io::Error::other)?;
        writeln!(out, "{header}")?;
        for w in self.by_length() {
            writeln!(out, "{w}")?;
        }
        Ok(())
    }

    pub fn read_from(input: impl BufRead) -> Result<Self> {
        let mut lines = input.lines();
        let io_err = |e: std::io::Error| Error::Format(e.to_string());
        let header_line = lines
            .next()
            .ok_or_else(|| Error::Format("missing header".into()))?
            .map_err(io_err)?;
        let header: SetHeader =
            serde_json::from_str(&header_line).map_err(|e| Error::Format(e.to_string()))?;
        let alphabet = Alphabet::new(header.alphabet)?;
        let mut words = Vec::with_capacity(header.count);
        for line in lines {
            let line = line.map_err(io_err)?;
            if line.trim().is_empty() {
                continue;
            }
            words.push(Word::parse(&line, alphabet)?);
        }
        if words.len() != header.count {
            return Err(Error::Format(format!(
                "header announces {} words, found {}",
                header.count,
                words.len()
            )));
        }
        GeneratedSet::new(alphabet, header.max_len, header.policy, words)
    }
}

/// Whether `s` admits a nondecreasing factorization into two or more of
/// the given (shorter) members; the negation is membership.
fn factorizable_into(s: &[Letter], known: &HashSet<Vec<Letter>>, policy: &dyn OrderPolicy) -> bool {
    let n = s.len();
    if n <= 1 {
        return false;
    }
    let order = RangeOrder::new(s, policy);
    // best[k]: end of the greatest first factor over factorizations of s[k..].
    let mut best: Vec<Option<usize>> = vec![None; n + 1];
    for k in (1..n).rev() {
        for m in k + 1..=n {
            if !known.contains(&s[k..m]) {
                continue;
            }
            let ok = m == n || best[m].is_some_and(|b| order.cmp((m, b), (k, m)).is_ge());
            if ok && best[k].is_none_or(|b| order.cmp((k, m), (k, b)).is_gt()) {
                best[k] = Some(m);
            }
        }
    }
    (1..n).any(|m| {
        known.contains(&s[..m]) && best[m].is_some_and(|b| order.cmp((m, b), (0, m)).is_ge())
    })
}

/// Generates `G ∩ A^{≤max_len}` length by length straight from the
/// definition, testing each word against the members already generated.
pub fn enumerate(
    policy: &dyn OrderPolicy,
    alphabet: Alphabet,
    max_len: usize,
    budget: &Budget,
) -> Result<GeneratedSet> {
    if max_len == 0 {
        return Err(Error::Precondition("max_len must be at least 1".into()));
    }
    budget.check_items(alphabet.count_up_to(max_len), "enumeration")?;
    let mut known: HashSet<Vec<Letter>> = HashSet::new();
    let mut members = Vec::new();
    for len in 1..=max_len {
        budget.check_time()?;
        let words: Vec<Word> = alphabet.words_of_length(len).collect();
        let fresh: Vec<Word> = words
            .into_par_iter()
            .filter(|w| !factorizable_into(w.letters(), &known, policy))
            .collect();
        for w in fresh {
            known.insert(w.letters().to_vec());
            members.push(w);
        }
    }
    GeneratedSet::new(alphabet, max_len, policy.id(), members)
}

pub fn enumerate_nyldon(alphabet: Alphabet, max_len: usize) -> Result<GeneratedSet> {
    enumerate(&Policy::Lex, alphabet, max_len, &Budget::default())
}

/// Membership of `w` recomputed from the definition, using the set's
/// shorter members as the already-generated part of `G`.
pub fn is_member_bruteforce(w: &Word, set: &GeneratedSet) -> Result<bool> {
    let policy = Policy::from_id(set.policy_id())?;
    is_member_bruteforce_under(w, set, &policy)
}

/// As [`is_member_bruteforce`] for a caller-supplied policy.
pub fn is_member_bruteforce_under(
    w: &Word,
    set: &GeneratedSet,
    policy: &dyn OrderPolicy,
) -> Result<bool> {
    w.require_nonempty()?;
    if policy.id() != set.policy_id() {
        return Err(Error::PolicyMismatch {
            expected: set.policy_id().to_string(),
            actual: policy.id().to_string(),
        });
    }
    if w.alphabet() != set.alphabet() {
        return Err(Error::MismatchedAlphabet {
            left: set.alphabet().size(),
            right: w.alphabet().size(),
        });
    }
    if w.len() > set.max_len() {
        return Err(Error::WordTooLong {
            len: w.len(),
            max_len: set.max_len(),
        });
    }
    let shorter: HashSet<Vec<Letter>> = set
        .iter()
        .filter(|m| m.len() < w.len())
        .map(|m| m.letters().to_vec())
        .collect();
    Ok(!factorizable_into(w.letters(), &shorter, policy))
}

/// Number of nondecreasing factorizations of `w` into members of `set`
/// under `policy`, saturating.
pub fn count_set_factorizations(w: &Word, set: &GeneratedSet, policy: &dyn OrderPolicy) -> u64 {
    let known = set.letter_set();
    let s = w.letters();
    let order = RangeOrder::new(s, policy);
    count_factorizations(s.len(), |i, j| known.contains(&s[i..j]), &order).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::duval_lyndon_factorization;

    fn b(s: &str) -> Word {
        Word::parse(s, Alphabet::BINARY).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_nyldon_bruteforce(&b("10110")).unwrap());
        assert!(!is_nyldon_bruteforce(&b("11")).unwrap());
        assert!(!is_nyldon_bruteforce(&b("1010")).unwrap());
        assert!(is_nyldon_bruteforce(&b("0")).unwrap());
        assert!(is_nyldon_bruteforce(&Word::empty(Alphabet::BINARY)).is_err());
    }

    #[test]
    fn factorization_examples() {
        let f = |s: &str| nyldon_factorization_bruteforce(&b(s)).unwrap().to_string();
        assert_eq!(f("10001011010101"), "(1000, 1011010101)");
        assert_eq!(f("0"), "(0)");
        assert_eq!(f("11"), "(1, 1)");
    }

    #[test]
    fn small_enumerations() {
        let set = enumerate_nyldon(Alphabet::BINARY, 2).unwrap();
        let words: Vec<String> = set.by_length().iter().map(|w| w.to_string()).collect();
        assert_eq!(words, ["0", "1", "10"]);
        let counts: Vec<usize> = {
            let s = enumerate_nyldon(Alphabet::BINARY, 7).unwrap();
            (1..=7).map(|l| s.count_of_length(l)).collect()
        };
        assert_eq!(counts, [2, 1, 2, 3, 6, 9, 18]);
    }

    #[test]
    fn set_membership() {
        let set = enumerate_nyldon(Alphabet::BINARY, 7).unwrap();
        assert!(is_member_bruteforce(&b("10110"), &set).unwrap());
        assert!(is_member_bruteforce(&b("1011"), &set).unwrap());
        assert!(is_member_bruteforce(&b("0"), &set).unwrap());
        assert!(is_member_bruteforce(&b("1"), &set).unwrap());
        assert!(!is_member_bruteforce(&b("0110"), &set).unwrap());
        assert!(matches!(
            is_member_bruteforce(&b("10000000"), &set),
            Err(Error::WordTooLong { len: 8, max_len: 7 })
        ));
        assert!(is_member_bruteforce_under(&b("10"), &set, &Policy::DegLex).is_err());
    }

    #[test]
    fn set_file_round_trip() {
        let set = enumerate(&Policy::DegLex, Alphabet::TERNARY, 4, &Budget::default()).unwrap();
        let mut buf = Vec::new();
        set.write_to(&mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("{\"alphabet\":3,\"max_len\":4,\"policy\":\"deglex\","));
        let back = GeneratedSet::read_from(buf.as_slice()).unwrap();
        assert_eq!(back, set);
    }

    #[test]
    fn set_file_rejects_bad_count() {
        let text = "{\"alphabet\":2,\"max_len\":3,\"policy\":\"lex\",\"count\":3}\n0\n1\n";
        assert!(matches!(
            GeneratedSet::read_from(text.as_bytes()),
            Err(Error::Format(_))
        ));
    }

    #[test]
    fn enumeration_budget() {
        let tiny = Budget::new(10);
        assert!(matches!(
            enumerate(&Policy::Lex, Alphabet::BINARY, 4, &tiny),
            Err(Error::BudgetExceeded(_))
        ));
    }

    #[test]
    fn lyndon_oracle_matches_duval() {
        // Nondecreasing under reversed lex is nonincreasing lexicographically.
        let lyndon = BruteForce::new(&Policy::ReverseLex);
        for w in Alphabet::BINARY.words_up_to(10).chain(Alphabet::TERNARY.words_up_to(6)) {
            let brute = lyndon.factorize(&w).unwrap();
            let duval = duval_lyndon_factorization(&w).unwrap();
            assert_eq!(brute.factors(), duval.factors(), "{w}");
        }
        assert_eq!(lyndon.factorize(&b("0101")).unwrap().to_string(), "(01, 01)");
        assert_eq!(lyndon.factorize(&b("10010")).unwrap().to_string(), "(1, 001, 0)");
    }

    #[test]
    fn table_and_set_membership_agree() {
        for policy in Policy::ALL {
            let set = enumerate(&policy, Alphabet::BINARY, 9, &Budget::default()).unwrap();
            let brute = BruteForce::new(&policy);
            for w in Alphabet::BINARY.words_up_to(9) {
                assert_eq!(brute.is_member(&w).unwrap(), set.contains(&w), "{w} {policy:?}");
            }
        }
    }

    #[test]
    fn lex_fast_path_matches_slice_comparison() {
        // Same order, but not flagged lexicographic, so the slice path is taken.
        struct PlainLex;
        impl OrderPolicy for PlainLex {
            fn id(&self) -> &str {
                "plain"
            }
            fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
                a.cmp(b)
            }
        }
        for w in Alphabet::TERNARY.words_up_to(7) {
            assert_eq!(
                BruteForce::new(&Policy::Lex).factorize(&w).unwrap().factors(),
                BruteForce::new(&PlainLex).factorize(&w).unwrap().factors()
            );
        }
    }

    #[test]
    fn greedy_reconstruction_matches_counted() {
        let capped = BruteForce::new(&Policy::Lex).with_uniqueness_cap(0);
        for w in Alphabet::BINARY.words_up_to(11) {
            assert_eq!(
                capped.factorize(&w).unwrap(),
                nyldon_factorization_bruteforce(&w).unwrap()
            );
        }
    }
}
