//! Nyldon-like sets under arbitrary order policies, and truncated checks of
//! the factorization and Hall properties.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::melancon;
use crate::oracle::{count_set_factorizations, is_member_bruteforce_under, GeneratedSet};
use crate::policy::OrderPolicy;
use crate::word::{Alphabet, Word};

/// Words up to this length are all cross-checked against the definition.
const FULL_CHECK_LEN: usize = 6;
const SAMPLE_SIZE: usize = 256;

/// A pair of members `f`, `g` with `fg` a member, and the clause it breaks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub f: Word,
    pub g: Word,
    pub violated_clause: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HallVerdict {
    pub policy: String,
    pub max_len: usize,
    pub is_factorization: bool,
    pub is_right_hall: bool,
    pub is_left_hall: bool,
    pub is_viennot: bool,
    pub nyldon_like_ok: bool,
    pub counterexamples: Vec<Counterexample>,
}

/// Words of `w`'s length up to the set bound whose factorization count is
/// not exactly one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorizationFailure {
    pub word: Word,
    pub count: u64,
}

/// Members `w ∈ G ∩ A^{≤max_len}` where Melançon's linear algorithm returns
/// `w` as a single factor, checked to be Nyldon-like and cross-checked
/// against the recursive definition.
pub fn generate(policy: &dyn OrderPolicy, alphabet: Alphabet, max_len: usize) -> Result<GeneratedSet> {
    let set = generate_unchecked(policy, alphabet, max_len, &Budget::from_env())?;
    if let Some(c) = nyldon_like_violations(&set, policy).into_iter().next() {
        return Err(Error::PolicyViolation {
            policy: policy.id().to_string(),
            fg: c.f.concat(&c.g).to_string(),
            f: c.f.to_string(),
            g: c.g.to_string(),
        });
    }
    cross_check(&set, policy)?;
    Ok(set)
}

/// [`generate`] without validation. Melançon's algorithm is still exact for
/// right Hall sets that are not Nyldon-like, such as the Lyndon words under
/// reversed lexicographic order.
pub fn generate_unchecked(
    policy: &dyn OrderPolicy,
    alphabet: Alphabet,
    max_len: usize,
    budget: &Budget,
) -> Result<GeneratedSet> {
    if max_len == 0 {
        return Err(Error::Precondition("max_len must be at least 1".into()));
    }
    budget.check_items(alphabet.count_up_to(max_len), "generation")?;
    let mut members = Vec::new();
    for len in 1..=max_len {
        budget.check_time()?;
        let words: Vec<Word> = alphabet.words_of_length(len).collect();
        let fresh: Vec<Result<Option<Word>>> = words
            .into_par_iter()
            .map(|w| Ok(melancon::factorize(&w, policy)?.is_single().then_some(w)))
            .collect();
        for w in fresh {
            members.extend(w?);
        }
    }
    GeneratedSet::new(alphabet, max_len, policy.id(), members)
}

fn cross_check(set: &GeneratedSet, policy: &dyn OrderPolicy) -> Result<()> {
    let alphabet = set.alphabet();
    let mut sample: Vec<Word> = alphabet.words_up_to(set.max_len().min(FULL_CHECK_LEN)).collect();
    if set.max_len() > FULL_CHECK_LEN {
        let mut rng = StdRng::seed_from_u64(set.max_len() as u64);
        for _ in 0..SAMPLE_SIZE {
            let len = rng.gen_range(FULL_CHECK_LEN + 1..=set.max_len());
            let letters = (0..len).map(|_| rng.gen_range(0..alphabet.size())).collect();
            sample.push(Word::new(alphabet, letters)?);
        }
    }
    for w in sample {
        if is_member_bruteforce_under(&w, set, policy)? != set.contains(&w) {
            return Err(Error::OracleMismatch {
                policy: policy.id().to_string(),
                word: w.to_string(),
            });
        }
    }
    Ok(())
}

/// Every split `fg` of a member into two members, shortest words first.
fn member_splits(set: &GeneratedSet) -> Vec<(Word, Word)> {
    let mut out = Vec::new();
    for w in set.by_length() {
        for k in 1..w.len() {
            let (f, g) = (w.slice(0, k), w.slice(k, w.len()));
            if set.contains(&f) && set.contains(&g) {
                out.push((f, g));
            }
        }
    }
    out
}

const NYLDON_LIKE: &str = "f < fg";
const RIGHT_HALL: &str = "fg > g";
const LEFT_HALL: &str = "fg < f";

fn violations(set: &GeneratedSet, policy: &dyn OrderPolicy, clause: &str) -> Vec<Counterexample> {
    member_splits(set)
        .into_iter()
        .filter(|(f, g)| {
            let fg = f.concat(g);
            let ok = match clause {
                NYLDON_LIKE => policy.compare(f.letters(), fg.letters()).is_lt(),
                RIGHT_HALL => policy.compare(fg.letters(), g.letters()).is_gt(),
                _ => policy.compare(fg.letters(), f.letters()).is_lt(),
            };
            !ok
        })
        .map(|(f, g)| Counterexample {
            f,
            g,
            violated_clause: clause.to_string(),
        })
        .collect()
}

/// All pairs breaking `f ≺ fg`, shortest `fg` first.
pub fn nyldon_like_violations(set: &GeneratedSet, policy: &dyn OrderPolicy) -> Vec<Counterexample> {
    violations(set, policy, NYLDON_LIKE)
}

pub fn validate_nyldon_like(set: &GeneratedSet, policy: &dyn OrderPolicy) -> bool {
    nyldon_like_violations(set, policy).is_empty()
}

/// The first word of length at most `test_len` without exactly one
/// nondecreasing factorization into members of `set`.
pub fn factorization_failure(
    set: &GeneratedSet,
    policy: &dyn OrderPolicy,
    test_len: usize,
) -> Result<Option<FactorizationFailure>> {
    if test_len > set.max_len() {
        return Err(Error::WordTooLong {
            len: test_len,
            max_len: set.max_len(),
        });
    }
    Budget::from_env().check_items(set.alphabet().count_up_to(test_len), "factorization check")?;
    let words: Vec<Word> = set.alphabet().words_up_to(test_len).collect();
    Ok(words
        .into_par_iter()
        .map(|w| {
            let count = count_set_factorizations(&w, set, policy);
            FactorizationFailure { word: w, count }
        })
        .find_first(|f| f.count != 1))
}

pub fn verify_factorization_property(
    set: &GeneratedSet,
    policy: &dyn OrderPolicy,
    test_len: usize,
) -> Result<bool> {
    Ok(factorization_failure(set, policy, test_len)?.is_none())
}

/// Checks every clause on pairs with `|f| + |g|` within the set's bound.
pub fn verify_hall(set: &GeneratedSet, policy: &dyn OrderPolicy) -> Result<HallVerdict> {
    let is_factorization = verify_factorization_property(set, policy, set.max_len())?;
    let nyldon_like = violations(set, policy, NYLDON_LIKE);
    let right = violations(set, policy, RIGHT_HALL);
    let left = violations(set, policy, LEFT_HALL);
    let is_right_hall = is_factorization && right.is_empty();
    let is_left_hall = is_factorization && left.is_empty();
    let counterexamples = [nyldon_like.first(), right.first(), left.first()]
        .into_iter()
        .flatten()
        .cloned()
        .collect();
    Ok(HallVerdict {
        policy: policy.id().to_string(),
        max_len: set.max_len(),
        is_factorization,
        is_right_hall,
        is_left_hall,
        is_viennot: is_right_hall && is_left_hall,
        nyldon_like_ok: nyldon_like.is_empty(),
        counterexamples,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate, enumerate_nyldon};
    use crate::policy::Policy;

    fn b(s: &str) -> Word {
        Word::parse(s, Alphabet::BINARY).unwrap()
    }

    #[test]
    fn lex_generation_matches_enumeration() {
        for (alphabet, max_len) in [(Alphabet::BINARY, 10), (Alphabet::TERNARY, 6)] {
            assert_eq!(
                generate(&Policy::Lex, alphabet, max_len).unwrap(),
                enumerate_nyldon(alphabet, max_len).unwrap()
            );
        }
        let letters = generate(&Policy::Lex, Alphabet::BINARY, 1).unwrap();
        assert_eq!(letters.iter().map(Word::to_string).collect::<Vec<_>>(), ["0", "1"]);
    }

    #[test]
    fn deglex_is_nyldon_like() {
        let set = generate(&Policy::DegLex, Alphabet::BINARY, 8).unwrap();
        assert_eq!(set, enumerate(&Policy::DegLex, Alphabet::BINARY, 8, &Budget::default()).unwrap());
        let v = verify_hall(&set, &Policy::DegLex).unwrap();
        assert!(v.is_factorization && v.is_right_hall && v.nyldon_like_ok);
    }

    #[test]
    fn lyndon_orientation_is_rejected_by_generate() {
        let err = generate(&Policy::ReverseLex, Alphabet::BINARY, 7).unwrap_err();
        assert_eq!(
            err,
            Error::PolicyViolation {
                policy: "revlex".into(),
                f: "0".into(),
                g: "1".into(),
                fg: "01".into()
            }
        );
    }

    #[test]
    fn nyldon_verdict() {
        let set = enumerate_nyldon(Alphabet::BINARY, 7).unwrap();
        let v = verify_hall(&set, &Policy::Lex).unwrap();
        assert!(v.is_factorization && v.is_right_hall && v.nyldon_like_ok);
        assert!(!v.is_left_hall && !v.is_viennot);
        let left = &v.counterexamples[0];
        assert_eq!(left.violated_clause, LEFT_HALL);
        assert_eq!((left.f.to_string(), left.g.to_string()), ("1".into(), "0".into()));
    }

    #[test]
    fn lyndon_verdict() {
        let set = generate_unchecked(&Policy::ReverseLex, Alphabet::BINARY, 7, &Budget::default()).unwrap();
        let v = verify_hall(&set, &Policy::ReverseLex).unwrap();
        assert!(v.is_viennot && v.is_factorization);
        assert!(!v.nyldon_like_ok);
        assert!(!validate_nyldon_like(&set, &Policy::ReverseLex));
    }

    #[test]
    fn missing_word_breaks_factorization() {
        let set = enumerate_nyldon(Alphabet::BINARY, 7).unwrap().without(&b("10"));
        let failure = factorization_failure(&set, &Policy::Lex, 7).unwrap().unwrap();
        assert_eq!(failure.word, b("10"));
        assert_eq!(failure.count, 0);
        assert!(verify_factorization_property(&set, &Policy::Lex, 8).is_err());
    }

    #[test]
    fn letters_only_set_is_vacuously_nyldon_like() {
        let set = GeneratedSet::new(Alphabet::BINARY, 1, "lex", Alphabet::BINARY.letters()).unwrap();
        assert!(validate_nyldon_like(&set, &Policy::Lex));
    }
}
