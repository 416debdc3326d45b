use std::fmt;
use std::ops::Range;

use serde::Serialize;

use crate::error::Result;
use crate::policy::OrderPolicy;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Monotonicity {
    Nondecreasing,
    Nonincreasing,
}

/// An ordered list of factors together with the order they are monotone in.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Factorization {
    factors: Vec<Word>,
    policy: String,
    monotonicity: Monotonicity,
}

impl Factorization {
    pub fn new(factors: Vec<Word>, policy: impl Into<String>, monotonicity: Monotonicity) -> Self {
        Factorization {
            factors,
            policy: policy.into(),
            monotonicity,
        }
    }

    pub(crate) fn from_ranges(
        w: &Word,
        ranges: impl IntoIterator<Item = Range<usize>>,
        policy: &str,
        monotonicity: Monotonicity,
    ) -> Self {
        let factors = ranges.into_iter().map(|r| w.slice(r.start, r.end)).collect();
        Factorization::new(factors, policy, monotonicity)
    }

    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Word> {
        self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn is_single(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn policy_id(&self) -> &str {
        &self.policy
    }

    pub fn monotonicity(&self) -> Monotonicity {
        self.monotonicity
    }

    pub fn last(&self) -> Option<&Word> {
        self.factors.last()
    }

    pub fn concat(&self) -> Vec<Letter> {
        self.factors.iter().flat_map(|f| f.letters().iter().copied()).collect()
    }

    /// Checks both invariants against `source` under `policy`.
    pub fn is_valid_for(&self, source: &Word, policy: &dyn OrderPolicy) -> bool {
        if self.concat() != source.letters() || self.factors.iter().any(Word::is_empty) {
            return false;
        }
        self.factors.windows(2).all(|p| {
            let ord = policy.compare(p[0].letters(), p[1].letters());
            match self.monotonicity {
                Monotonicity::Nondecreasing => ord.is_le(),
                Monotonicity::Nonincreasing => ord.is_ge(),
            }
        })
    }

    /// Space-separated factors, as printed by the `factor` command.
    pub fn to_plain(&self) -> String {
        self.factors
            .iter()
            .map(|f| f.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

/// Duval's algorithm: the nonincreasing factorization into Lyndon words.
pub fn duval_lyndon_factorization(w: &Word) -> Result<Factorization> {
    w.require_nonempty()?;
    let ranges = duval_ranges(w.letters());
    Ok(Factorization::from_ranges(
        w,
        ranges,
        "lex",
        Monotonicity::Nonincreasing,
    ))
}

pub(crate) fn duval_ranges(s: &[Letter]) -> Vec<Range<usize>> {
    let n = s.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < n {
        let (mut j, mut k) = (i + 1, i);
        while j < n && s[k] <= s[j] {
            if s[k] < s[j] {
                k = i;
            } else {
                k += 1;
            }
            j += 1;
        }
        let period = j - k;
        while i <= k {
            out.push(i..i + period);
            i += period;
        }
    }
    out
}

pub(crate) fn is_lyndon(s: &[Letter]) -> bool {
    !s.is_empty() && duval_ranges(s).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::policy::Policy;
    use crate::word::Alphabet;

    fn b(s: &str) -> Word {
        Word::parse(s, Alphabet::BINARY).unwrap()
    }

    fn duval(s: &str) -> String {
        duval_lyndon_factorization(&b(s)).unwrap().to_string()
    }

    #[test]
    fn duval_examples() {
        assert_eq!(duval("10"), "(1, 0)");
        assert_eq!(duval("0101"), "(01, 01)");
        assert_eq!(duval("10010"), "(1, 001, 0)");
        assert_eq!(duval("0"), "(0)");
    }

    #[test]
    fn lyndon_test_matches_strict_minimal_rotation() {
        for w in Alphabet::TERNARY.words_up_to(7) {
            let strictly_min = (1..w.len()).all(|r| w < w.rotate(r));
            assert_eq!(is_lyndon(w.letters()), strictly_min, "{w}");
        }
    }

    #[test]
    fn validity_checks_order_and_concatenation() {
        let f = duval_lyndon_factorization(&b("10010")).unwrap();
        assert!(f.is_valid_for(&b("10010"), &Policy::Lex));
        assert!(!f.is_valid_for(&b("10011"), &Policy::Lex));
        let flipped = Factorization::new(
            f.factors().to_vec(),
            "lex",
            Monotonicity::Nondecreasing,
        );
        assert!(!flipped.is_valid_for(&b("10010"), &Policy::Lex));
        assert_eq!(f.to_plain(), "1 001 0");
    }
}
