//! Right-to-left stack factorization into Nyldon words.
//!
//! Letters are prepended one at a time; after each, the two leftmost
//! factors merge while the first is lexicographically greater than the
//! second. Every merge removes one of the `|w| - 1` factor boundaries and
//! every prepend ends with at most one failed comparison, so at most
//! `2|w| - 1` comparisons are made. With the suffix-array engine each
//! comparison is O(1).

mod engine;
mod rmq;
mod suffix_array;

use std::cmp::Ordering;
use std::ops::Range;

pub use engine::ComparisonEngine;
pub use rmq::SparseTable;
pub use suffix_array::{lcp_array, ranks, suffix_array};

use crate::error::Result;
use crate::factorization::{Factorization, Monotonicity};
use crate::word::{Letter, Word};

/// How factor comparisons are carried out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Comparator {
    /// Letter-by-letter slice comparison.
    Naive,
    /// Suffix array + LCP + RMQ.
    #[default]
    SuffixArray,
}

/// The working stack of the fast factorization: index ranges over the input, the
/// leftmost factor on top.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorStack {
    entries: Vec<Range<usize>>,
    comparisons_used: u64,
}

impl FactorStack {
    /// Factor ranges, left to right.
    pub fn ranges(&self) -> impl DoubleEndedIterator<Item = Range<usize>> + '_ {
        self.entries.iter().rev().cloned()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn comparisons_used(&self) -> u64 {
        self.comparisons_used
    }

    pub fn to_factorization(&self, w: &Word) -> Factorization {
        Factorization::from_ranges(w, self.ranges(), "lex", Monotonicity::Nondecreasing)
    }
}

pub(crate) fn run_on_letters(s: &[Letter], comparator: Comparator) -> FactorStack {
    match comparator {
        Comparator::Naive => run_with(s.len(), |a, b| s[a].cmp(&s[b])),
        Comparator::SuffixArray => {
            let engine = ComparisonEngine::from_letters(s);
            run_with(s.len(), |a, b| engine.compare(a, b))
        }
    }
}

fn run_with(n: usize, mut cmp: impl FnMut(Range<usize>, Range<usize>) -> Ordering) -> FactorStack {
    let mut stack = FactorStack {
        entries: Vec::with_capacity(n.min(1 << 16)),
        comparisons_used: 0,
    };
    for i in (0..n).rev() {
        stack.entries.push(i..i + 1);
        while stack.entries.len() >= 2 {
            let k = stack.entries.len();
            let (first, second) = (stack.entries[k - 1].clone(), stack.entries[k - 2].clone());
            stack.comparisons_used += 1;
            if cmp(first.clone(), second.clone()) != Ordering::Greater {
                break;
            }
            stack.entries.truncate(k - 2);
            stack.entries.push(first.start..second.end);
        }
    }
    stack
}

/// Runs the stack algorithm and returns the final stack with its counter.
pub fn factor_stack(w: &Word, comparator: Comparator) -> Result<FactorStack> {
    w.require_nonempty()?;
    Ok(run_on_letters(w.letters(), comparator))
}

/// The Nyldon factorization of `w`.
pub fn nyldon_factorize(w: &Word) -> Result<Factorization> {
    Ok(factor_stack(w, Comparator::SuffixArray)?.to_factorization(w))
}

pub fn is_nyldon(w: &Word) -> Result<bool> {
    Ok(factor_stack(w, Comparator::SuffixArray)?.len() == 1)
}

/// [`is_nyldon`] with naive comparisons, for bulk scans of short words.
pub fn is_nyldon_naive(w: &Word) -> Result<bool> {
    Ok(factor_stack(w, Comparator::Naive)?.len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{nyldon_factorization_bruteforce, BruteForce};
    use crate::policy::Policy;
    use crate::word::Alphabet;
    use proptest::prelude::*;

    fn b(s: &str) -> Word {
        Word::parse(s, Alphabet::BINARY).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            nyldon_factorize(&b("10001011010101")).unwrap().to_string(),
            "(1000, 1011010101)"
        );
        assert_eq!(nyldon_factorize(&b("11111")).unwrap().to_string(), "(1, 1, 1, 1, 1)");
        assert!(is_nyldon(&b("10111101101111101111011")).unwrap());
        assert!(!is_nyldon(&b("11")).unwrap());
        assert!(is_nyldon(&b("1001110")).unwrap());
        assert!(nyldon_factorize(&Word::empty(Alphabet::BINARY)).is_err());
    }

    #[test]
    fn matches_oracle_exhaustively() {
        let longest = BruteForce::new(&Policy::Lex);
        for w in Alphabet::BINARY.words_up_to(12) {
            let fast = nyldon_factorize(&w).unwrap();
            assert_eq!(fast, nyldon_factorization_bruteforce(&w).unwrap(), "{w}");
            assert_eq!(fast.last().unwrap(), &longest.longest_member_suffix(&w).unwrap());
        }
    }

    proptest! {
        #[test]
        fn comparison_bound_and_modes_agree(s in prop::collection::vec(0u32..3, 1..400)) {
            let w = Word::new(Alphabet::TERNARY, s).unwrap();
            let fast = factor_stack(&w, Comparator::SuffixArray).unwrap();
            let naive = factor_stack(&w, Comparator::Naive).unwrap();
            prop_assert_eq!(&fast, &naive);
            prop_assert!(fast.comparisons_used() < 2 * w.len() as u64);
            let f = fast.to_factorization(&w);
            prop_assert!(f.is_valid_for(&w, &Policy::Lex));
            for factor in f.factors() {
                prop_assert!(is_nyldon(factor).unwrap());
            }
        }
    }
}
