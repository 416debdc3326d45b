use std::cmp::Ordering;
use std::ops::Range;

use super::rmq::SparseTable;
use super::suffix_array::{lcp_array, ranks, suffix_array};
use crate::error::Result;
use crate::word::{Letter, Word};

/// Constant-time lexicographic comparison of substrings of a fixed base
/// word: suffix array, its inverse, the LCP array and an RMQ over it.
#[derive(Debug, Clone)]
pub struct ComparisonEngine {
    base: Vec<Letter>,
    suffix_array: Vec<usize>,
    rank: Vec<usize>,
    lcp: Vec<usize>,
    rmq: SparseTable,
}

impl ComparisonEngine {
    pub fn build(w: &Word) -> Result<Self> {
        w.require_nonempty()?;
        Ok(Self::from_letters(w.letters()))
    }

    pub(crate) fn from_letters(letters: &[Letter]) -> Self {
        let s: Vec<usize> = letters.iter().map(|&a| a as usize).collect();
        let upper = s.iter().copied().max().unwrap_or(0);
        let sa = suffix_array(&s, upper);
        let rank = ranks(&sa);
        let lcp = lcp_array(&s, &sa, &rank);
        let rmq = SparseTable::new(&lcp);
        ComparisonEngine {
            base: letters.to_vec(),
            suffix_array: sa,
            rank,
            lcp,
            rmq,
        }
    }

    pub fn base(&self) -> &[Letter] {
        &self.base
    }

    pub fn suffix_array(&self) -> &[usize] {
        &self.suffix_array
    }

    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn lcp(&self) -> &[usize] {
        &self.lcp
    }

    /// Longest common prefix of the suffixes starting at `i` and `j`.
    pub fn suffix_lcp(&self, i: usize, j: usize) -> usize {
        if i == j {
            return self.base.len() - i;
        }
        let (ri, rj) = (self.rank[i], self.rank[j]);
        let (lo, hi) = if ri < rj { (ri, rj) } else { (rj, ri) };
        self.rmq.min(lo + 1, hi)
    }

    /// Lexicographic order of `base[a]` and `base[b]`.
    pub fn compare(&self, a: Range<usize>, b: Range<usize>) -> Ordering {
        let (la, lb) = (a.len(), b.len());
        let l = self.suffix_lcp(a.start, b.start).min(la).min(lb);
        if l == la || l == lb {
            la.cmp(&lb)
        } else {
            self.base[a.start + l].cmp(&self.base[b.start + l])
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{lex_compare, Alphabet};

    fn b(s: &str) -> Word {
        Word::parse(s, Alphabet::BINARY).unwrap()
    }

    #[test]
    fn single_letter() {
        let e = ComparisonEngine::build(&b("0")).unwrap();
        assert_eq!(e.compare(0..1, 0..1), Ordering::Equal);
        assert_eq!(e.suffix_array(), &[0]);
    }

    #[test]
    fn two_letters() {
        let e = ComparisonEngine::build(&b("10")).unwrap();
        assert_eq!(e.suffix_array(), &[1, 0]);
    }

    #[test]
    fn all_range_pairs_match_lex_compare() {
        for w in Alphabet::BINARY.words_up_to(12).chain(Alphabet::TERNARY.words_of_length(6)) {
            let e = ComparisonEngine::build(&w).unwrap();
            let n = w.len();
            let ranges: Vec<Range<usize>> = (0..n)
                .flat_map(|i| (i + 1..=n).map(move |j| i..j))
                .collect();
            for x in &ranges {
                for y in &ranges {
                    let direct = lex_compare(&w.slice(x.start, x.end), &w.slice(y.start, y.end)).unwrap();
                    assert_eq!(e.compare(x.clone(), y.clone()), direct, "{w} {x:?} {y:?}");
                }
            }
        }
    }
}
