//! Circular codes, factorizations of powers, and the Lyndon suffix property.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::factorization::is_lyndon;
use crate::fastfactor::{is_nyldon, nyldon_factorize};
use crate::melancon;
use crate::policy::Policy;
use crate::word::{is_primitive, not_primitive_error, Alphabet, Letter, Word};

/// A block sequence whose concatenation, rotated left by `offset`, splits
/// into codewords again.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircularWitness {
    pub blocks: Vec<Word>,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircularCodeVerdict {
    pub code: Vec<Word>,
    pub length: usize,
    pub max_blocks: usize,
    pub is_circular: bool,
    pub witness: Option<CircularWitness>,
}

fn code_length(code: &[Word]) -> Result<usize> {
    let first = code
        .first()
        .ok_or_else(|| Error::Precondition("code must not be empty".into()))?;
    let l = first.len();
    if l == 0 {
        return Err(Error::EmptyWord);
    }
    if let Some(w) = code.iter().find(|w| w.len() != l) {
        return Err(Error::MixedLengths(l, w.len()));
    }
    Ok(l)
}

/// The codewords read off `blocks` rotated left by `offset`, if every
/// `ℓ`-block of the rotation is in `code`.
pub fn rotation_parse(code: &[Word], blocks: &[Word], offset: usize) -> Result<Option<Vec<Word>>> {
    let l = code_length(code)?;
    let members: HashSet<&[Letter]> = code.iter().map(|w| w.letters()).collect();
    let s: Vec<Letter> = blocks.iter().flat_map(|b| b.letters().iter().copied()).collect();
    if s.is_empty() || !s.len().is_multiple_of(l) {
        return Ok(None);
    }
    let alphabet = code[0].alphabet();
    let rotated: Vec<Letter> = s[offset % s.len()..].iter().chain(&s[..offset % s.len()]).copied().collect();
    let parts: Vec<&[Letter]> = rotated.chunks(l).collect();
    Ok(parts
        .iter()
        .all(|p| members.contains(p))
        .then(|| parts.iter().map(|p| Word::from_slice_unchecked(alphabet, p)).collect()))
}

/// Every witness with at most `max_blocks` blocks, in search order.
pub fn circular_code_witnesses(code: &[Word], max_blocks: usize) -> Result<Vec<CircularWitness>> {
    let mut out = Vec::new();
    search(code, max_blocks, |w| {
        out.push(w);
        true
    })?;
    Ok(out)
}

/// Tries every sequence of at most `max_blocks` codewords and every offset
/// that is not a multiple of the code length.
pub fn circular_code_check(code: &[Word], max_blocks: usize) -> Result<CircularCodeVerdict> {
    let mut code = code.to_vec();
    code.sort();
    code.dedup();
    let length = code_length(&code)?;
    let mut witness = None;
    search(&code, max_blocks, |w| {
        witness = Some(w);
        false
    })?;
    Ok(CircularCodeVerdict {
        code,
        length,
        max_blocks,
        is_circular: witness.is_none(),
        witness,
    })
}

/// Calls `found` on witnesses until it returns `false`.
fn search(code: &[Word], max_blocks: usize, mut found: impl FnMut(CircularWitness) -> bool) -> Result<()> {
    let l = code_length(code)?;
    let size = code.len() as u64;
    let sequences: u64 = (1..=max_blocks as u32).map(|t| size.saturating_pow(t)).fold(0, u64::saturating_add);
    Budget::from_env().check_items(sequences, "circular code search")?;
    let members: HashSet<&[Letter]> = code.iter().map(|w| w.letters()).collect();
    for t in 1..=max_blocks {
        let mut idx = vec![0usize; t];
        loop {
            let s: Vec<Letter> = idx.iter().flat_map(|&i| code[i].letters().iter().copied()).collect();
            let n = s.len();
            for r in (1..n).filter(|r| r % l != 0) {
                let ok = (0..t).all(|b| {
                    let chunk: Vec<Letter> = (0..l).map(|j| s[(r + b * l + j) % n]).collect();
                    members.contains(chunk.as_slice())
                });
                if ok {
                    let blocks = idx.iter().map(|&i| code[i].clone()).collect();
                    if !found(CircularWitness { blocks, offset: r }) {
                        return Ok(());
                    }
                }
            }
            // odometer over block indices
            let mut pos = t;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < code.len() {
                    break;
                }
                idx[pos] = 0;
            }
            if idx.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(())
}

/// The Nyldon factorization of `w^k` split around its longest run of
/// factors equal to the Nyldon conjugate of `w`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct PowerProfile {
    pub w: Word,
    pub n: Word,
    pub k: usize,
    pub prefix_factors: Vec<Word>,
    pub central_copies: usize,
    pub suffix_factors: Vec<Word>,
    pub K: usize,
}

/// `⌊log₂ len⌋ + 1`.
pub fn nyldon_power_bound(len: usize) -> usize {
    len.ilog2() as usize + 1
}

impl PowerProfile {
    pub fn bound(&self) -> usize {
        nyldon_power_bound(self.w.len())
    }

    /// `None` when no copy of the conjugate appears.
    pub fn within_bound(&self) -> Option<bool> {
        (self.central_copies > 0).then(|| self.K <= self.bound())
    }
}

pub fn power_profile(w: &Word, k: usize) -> Result<PowerProfile> {
    if k == 0 {
        return Err(Error::Precondition("exponent must be at least 1".into()));
    }
    if !is_primitive(w)? {
        return Err(not_primitive_error(w));
    }
    let n = melancon::conjugate(w, &Policy::Lex)?;
    let factors = nyldon_factorize(&w.pow(k))?.into_factors();
    let (mut best_start, mut best_len) = (factors.len(), 0);
    let mut i = 0;
    while i < factors.len() {
        let mut j = i;
        while j < factors.len() && factors[j] == n {
            j += 1;
        }
        if j - i > best_len {
            (best_start, best_len) = (i, j - i);
        }
        i = j.max(i + 1);
    }
    let (prefix, suffix) = if best_len == 0 {
        (factors.clone(), Vec::new())
    } else {
        (factors[..best_start].to_vec(), factors[best_start + best_len..].to_vec())
    };
    Ok(PowerProfile {
        w: w.clone(),
        n,
        k,
        prefix_factors: prefix,
        central_copies: best_len,
        suffix_factors: suffix,
        K: k - best_len,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct KEntry {
    pub w: Word,
    pub K: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KBoundReport {
    pub alphabet: u32,
    pub max_len: usize,
    pub k: usize,
    pub words_scanned: usize,
    pub max_observed_k: usize,
    pub max_witness: Option<Word>,
    /// Words whose operational `K` exceeds `⌊log₂|w|⌋ + 1` at some tested exponent.
    pub violations: Vec<KEntry>,
    /// Words with no copy of their conjugate at the smallest tested exponent.
    pub no_central_copy: Vec<Word>,
    /// Words whose prefix or suffix factors change across `k`, `k+1`, `k+2`.
    pub unstable: Vec<Word>,
    pub entries: Vec<KEntry>,
}

impl KBoundReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.unstable.is_empty()
    }
}

/// Profiles every primitive word of length at most `max_len` at exponents
/// `k`, `k+1` and `k+2`; `k` defaults to `⌊log₂ max_len⌋ + 3`.
pub fn k_bound_scan(alphabet: Alphabet, max_len: usize, k: Option<usize>) -> Result<KBoundReport> {
    if max_len == 0 {
        return Err(Error::Precondition("max_len must be at least 1".into()));
    }
    let budget = Budget::from_env();
    budget.check_items(alphabet.count_up_to(max_len), "power scan")?;
    let k = k.unwrap_or(max_len.ilog2() as usize + 3);
    let words: Vec<Word> = alphabet
        .words_up_to(max_len)
        .filter(|w| is_primitive(w).unwrap_or(false))
        .collect();
    let profiles: Vec<[PowerProfile; 3]> = words
        .par_iter()
        .map(|w| {
            budget.check_time()?;
            Ok([power_profile(w, k)?, power_profile(w, k + 1)?, power_profile(w, k + 2)?])
        })
        .collect::<Result<_>>()?;
    let mut report = KBoundReport {
        alphabet: alphabet.size(),
        max_len,
        k,
        words_scanned: words.len(),
        max_observed_k: 0,
        max_witness: None,
        violations: Vec::new(),
        no_central_copy: Vec::new(),
        unstable: Vec::new(),
        entries: Vec::new(),
    };
    for [p0, p1, p2] in profiles {
        if p0.central_copies == 0 {
            report.no_central_copy.push(p0.w.clone());
            continue;
        }
        let stable = [&p1, &p2].iter().all(|p| {
            p.prefix_factors == p0.prefix_factors && p.suffix_factors == p0.suffix_factors && p.K == p0.K
        });
        if !stable {
            report.unstable.push(p0.w.clone());
        }
        if [&p0, &p1, &p2].iter().any(|p| p.within_bound() == Some(false)) {
            report.violations.push(KEntry { w: p0.w.clone(), K: p0.K });
        }
        if report.max_witness.is_none() || p0.K > report.max_observed_k {
            report.max_observed_k = p0.K;
            report.max_witness = Some(p0.w.clone());
        }
        report.entries.push(KEntry { w: p0.w, K: p0.K });
    }
    Ok(report)
}

/// Checks that `s·n^k·a` is not Nyldon and that the factorization of
/// `n^k·a` starts with a factor `x` with `|x| ≥ |n|` and `x ≥ n`.
pub fn sn_ka_check(n: &Word, s: &Word, a: &Word, k: usize) -> Result<bool> {
    if !is_nyldon(n)? {
        return Err(Error::Precondition(format!("{n} is not Nyldon")));
    }
    if s.is_empty() || !s.is_suffix_of(n) {
        return Err(Error::Precondition(format!("{s} is not a nonempty suffix of {n}")));
    }
    if k >= usize::BITS as usize || (1usize << k) <= n.len() {
        return Err(Error::Precondition(format!("2^{k} must exceed |n| = {}", n.len())));
    }
    let tail = n.pow(k).concat(a);
    let whole = s.concat(&tail);
    let first = nyldon_factorize(&tail)?.into_factors().remove(0);
    Ok(!is_nyldon(&whole)? && first.len() >= n.len() && first >= *n)
}

/// Whether `a^k·ab` fails to be Nyldon for every Nyldon `ab` of length at
/// most `max_len`, every nonempty prefix `a`, and `1 ≤ k ≤ max_k`. Returns
/// the first counterexample `(a, b, k)`.
pub fn prefix_power_counterexample(
    alphabet: Alphabet,
    max_len: usize,
    max_k: usize,
) -> Result<Option<(Word, Word, usize)>> {
    Budget::from_env().check_items(alphabet.count_up_to(max_len), "prefix power check")?;
    let words: Vec<Word> = alphabet.words_up_to(max_len).collect();
    let found = words.par_iter().find_map_first(|w| {
        if !is_nyldon(w).unwrap_or(false) {
            return None;
        }
        for cut in 1..=w.len() {
            let (a, b) = (w.slice(0, cut), w.slice(cut, w.len()));
            for k in 1..=max_k {
                if is_nyldon(&a.pow(k).concat(w)).unwrap_or(true) {
                    return Some((a.clone(), b.clone(), k));
                }
            }
        }
        None
    });
    Ok(found)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LyndonSuffixReport {
    pub alphabet: u32,
    pub max_len: usize,
    pub words_checked: usize,
    pub hypothesis_holds: usize,
    pub counterexample: Option<Word>,
}

impl LyndonSuffixReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Whether `w` is lexicographically smaller than each of its Lyndon proper
/// suffixes.
pub fn below_lyndon_suffixes(w: &[Letter]) -> bool {
    (1..w.len()).all(|i| !is_lyndon(&w[i..]) || w < &w[i..])
}

/// Every word of length at most `max_len` that is smaller than all of its
/// Lyndon proper suffixes is checked to be Lyndon.
pub fn lyndon_suffix_check(alphabet: Alphabet, max_len: usize) -> Result<LyndonSuffixReport> {
    Budget::from_env().check_items(alphabet.count_up_to(max_len), "Lyndon suffix check")?;
    let words: Vec<Word> = alphabet.words_up_to(max_len).collect();
    let hyp: Vec<bool> = words.par_iter().map(|w| below_lyndon_suffixes(w.letters())).collect();
    let counterexample = words
        .par_iter()
        .zip(&hyp)
        .find_first(|(w, &h)| h && !is_lyndon(w.letters()))
        .map(|(w, _)| w.clone());
    Ok(LyndonSuffixReport {
        alphabet: alphabet.size(),
        max_len,
        words_checked: words.len(),
        hypothesis_holds: hyp.iter().filter(|&&h| h).count(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_nyldon, nyldon_factorization_bruteforce};
    use rand::rngs::StdRng;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn b(s: &str) -> Word {
        Word::parse(s, Alphabet::BINARY).unwrap()
    }

    fn words(ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| b(w)).collect()
    }

    #[test]
    fn nyldon_words_of_each_length_are_circular() {
        let set = enumerate_nyldon(Alphabet::BINARY, 5).unwrap();
        for l in 2..=5 {
            let code: Vec<Word> = set.iter().filter(|w| w.len() == l).cloned().collect();
            let v = circular_code_check(&code, 3).unwrap();
            assert!(v.is_circular, "{l}: {:?}", v.witness);
        }
    }

    #[test]
    fn non_circular_code() {
        let code = words(&["00", "01", "10"]);
        let v = circular_code_check(&code, 2).unwrap();
        assert!(!v.is_circular);
        let w = v.witness.unwrap();
        assert!(rotation_parse(&code, &w.blocks, w.offset).unwrap().is_some());
        let all = circular_code_witnesses(&code, 2).unwrap();
        let pair = CircularWitness { blocks: words(&["00", "10"]), offset: 1 };
        assert!(all.contains(&pair));
        assert_eq!(
            rotation_parse(&code, &pair.blocks, 1).unwrap().unwrap(),
            words(&["01", "00"])
        );
    }

    #[test]
    fn singletons_and_errors() {
        assert!(circular_code_check(&words(&["1011"]), 4).unwrap().is_circular);
        assert!(!circular_code_check(&words(&["1010"]), 2).unwrap().is_circular);
        assert_eq!(
            circular_code_check(&words(&["10", "100"]), 2).unwrap_err(),
            Error::MixedLengths(2, 3)
        );
    }

    #[test]
    fn verdict_ignores_code_order() {
        let mut rng = StdRng::seed_from_u64(5);
        let base = words(&["00", "01", "10", "11"]);
        for _ in 0..20 {
            let mut code: Vec<Word> = base.iter().filter(|_| rng.gen_bool(0.6)).cloned().collect();
            if code.is_empty() {
                continue;
            }
            let v = circular_code_check(&code, 3).unwrap();
            code.shuffle(&mut rng);
            assert_eq!(circular_code_check(&code, 3).unwrap().is_circular, v.is_circular);
        }
    }

    #[test]
    fn profiles() {
        let p = power_profile(&b("01111011011111011110111"), 5).unwrap();
        assert_eq!(p.n, b("10111101101111101111011"));
        assert_eq!(p.K, 4);
        let p = power_profile(&b("10"), 6).unwrap();
        assert_eq!((p.central_copies, p.K), (6, 0));
        let p = power_profile(&b("0"), 3).unwrap();
        assert_eq!((p.central_copies, p.K, p.n.clone()), (3, 0, b("0")));
        assert!(power_profile(&b("1010"), 3).is_err());
    }

    #[test]
    fn profile_matches_bruteforce_factorization() {
        for w in Alphabet::BINARY.words_up_to(5) {
            if !is_primitive(&w).unwrap() {
                continue;
            }
            let p = power_profile(&w, 3).unwrap();
            let mut all = p.prefix_factors.clone();
            all.extend(std::iter::repeat_n(p.n.clone(), p.central_copies));
            all.extend(p.suffix_factors.clone());
            let brute = nyldon_factorization_bruteforce(&w.pow(3)).unwrap();
            assert_eq!(all, brute.factors(), "{w}");
        }
    }

    #[test]
    fn small_scans() {
        let r = k_bound_scan(Alphabet::BINARY, 1, None).unwrap();
        assert_eq!(r.max_observed_k, 0);
        let r = k_bound_scan(Alphabet::BINARY, 7, None).unwrap();
        assert!(r.passed(), "{:?}", r.violations);
        assert!(r.no_central_copy.is_empty());
    }

    #[test]
    fn sn_ka() {
        assert!(sn_ka_check(&b("10"), &b("0"), &b("1"), 2).unwrap());
        assert!(sn_ka_check(&b("10"), &b("1"), &b("1"), 1).is_err());
        assert!(sn_ka_check(&b("11"), &b("1"), &b("1"), 2).is_err());
        let nyldon: Vec<Word> = enumerate_nyldon(Alphabet::BINARY, 8).unwrap().iter().cloned().collect();
        let mut rng = StdRng::seed_from_u64(11);
        for _ in 0..500 {
            let n = nyldon.choose(&mut rng).unwrap();
            let s = n.slice(rng.gen_range(0..n.len()), n.len());
            let len = rng.gen_range(0..6);
            let a = Word::new(Alphabet::BINARY, (0..len).map(|_| rng.gen_range(0..2)).collect()).unwrap();
            let k = nyldon_power_bound(n.len());
            assert!(sn_ka_check(n, &s, &a, k).unwrap(), "{n} {s} {a}");
        }
    }

    #[test]
    fn prefix_powers() {
        assert_eq!(prefix_power_counterexample(Alphabet::BINARY, 10, 2).unwrap(), None);
    }

    #[test]
    fn lyndon_suffixes() {
        assert!(below_lyndon_suffixes(b("0011").letters()));
        assert!(is_lyndon(b("0011").letters()));
        assert!(!below_lyndon_suffixes(b("10").letters()));
        let r = lyndon_suffix_check(Alphabet::BINARY, 12).unwrap();
        assert!(r.passed());
        assert!(r.hypothesis_holds > 0);
    }
}
