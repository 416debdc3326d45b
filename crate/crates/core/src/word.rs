//! Alphabets, words and the elementary operations on them.
//!
//! Letters are small integer codes `0..size`. Words print as digit strings
//! when the alphabet has at most ten letters (`10110`) and as comma-separated
//! codes otherwise (`3,0,11,2`); both forms are accepted on input.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Letter = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet { size: 2 };
    pub const TERNARY: Alphabet = Alphabet { size: 3 };

    pub fn new(size: u32) -> Result<Self> {
        if size < 2 {
            return Err(Error::AlphabetTooSmall(size));
        }
        Ok(Alphabet { size })
    }

    pub fn size(self) -> u32 {
        self.size
    }

    /// The largest letter `m`.
    pub fn max_letter(self) -> Letter {
        self.size - 1
    }

    pub fn letters(self) -> impl Iterator<Item = Word> {
        (0..self.size).map(move |a| Word {
            alphabet: self,
            letters: vec![a],
        })
    }

    /// Number of words of exactly length `len`, saturating at `u64::MAX`.
    pub fn count_of_length(self, len: usize) -> u64 {
        (self.size as u64).checked_pow(len as u32).unwrap_or(u64::MAX)
    }

    /// Number of nonempty words of length at most `max_len`, saturating.
    pub fn count_up_to(self, max_len: usize) -> u64 {
        (1..=max_len).fold(0u64, |acc, l| acc.saturating_add(self.count_of_length(l)))
    }

    /// All words of length exactly `len` in lexicographic order.
    pub fn words_of_length(self, len: usize) -> WordsOfLength {
        WordsOfLength {
            alphabet: self,
            next: Some(vec![0; len]),
        }
    }

    /// All nonempty words of length at most `max_len`, shorter words first.
    pub fn words_up_to(self, max_len: usize) -> impl Iterator<Item = Word> {
        (1..=max_len).flat_map(move |l| self.words_of_length(l))
    }

    pub fn check(self, letter: Letter) -> Result<()> {
        if letter < self.size {
            Ok(())
        } else {
            Err(Error::InvalidLetter {
                letter,
                size: self.size,
            })
        }
    }
}

/// Odometer over `A^len`.
pub struct WordsOfLength {
    alphabet: Alphabet,
    next: Option<Vec<Letter>>,
}

impl Iterator for WordsOfLength {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] + 1 < self.alphabet.size {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = 0;
        }
        Some(Word {
            alphabet: self.alphabet,
            letters: current,
        })
    }
}

/// A finite word over a sized alphabet.
///
/// `Ord` is the lexicographic order on letters (a proper prefix is smaller),
/// with the alphabet size only used to break ties between equal letter
/// sequences over different alphabets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        for &a in &letters {
            alphabet.check(a)?;
        }
        Ok(Word { alphabet, letters })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Word {
            alphabet,
            letters: Vec::new(),
        }
    }

    pub(crate) fn from_slice_unchecked(alphabet: Alphabet, letters: &[Letter]) -> Self {
        Word {
            alphabet,
            letters: letters.to_vec(),
        }
    }

    /// Parses the shared word text syntax.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        let text = text.trim();
        let err = |reason: &str| Error::Parse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(err("empty word"));
        }
        let letters: Vec<Letter> = if text.contains(',') || alphabet.size > 10 {
            text.split(',')
                .map(|code| {
                    code.trim()
                        .parse::<Letter>()
                        .map_err(|_| err("expected comma-separated letter codes"))
                })
                .collect::<Result<_>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).ok_or_else(|| err("expected decimal digits")))
                .collect::<Result<_>>()?
        };
        Word::new(alphabet, letters)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word::from_slice_unchecked(self.alphabet, &self.letters[start..end])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word {
            alphabet: self.alphabet,
            letters,
        }
    }

    pub fn pow(&self, k: usize) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: self.letters.repeat(k),
        }
    }

    /// The conjugate `vu` of `w = uv` with `|u| = offset mod |w|`.
    pub fn rotate(&self, offset: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(offset % self.len());
        Word {
            alphabet: self.alphabet,
            letters,
        }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.letters.starts_with(&self.letters)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.letters.ends_with(&self.letters)
    }

    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if self.is_empty() {
            Err(Error::EmptyWord)
        } else {
            Ok(())
        }
    }

    pub(crate) fn same_alphabet(&self, other: &Word) -> Result<()> {
        if self.alphabet != other.alphabet {
            return Err(Error::MismatchedAlphabet {
                left: self.alphabet.size,
                right: other.alphabet.size,
            });
        }
        Ok(())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .cmp(&other.letters)
            .then(self.alphabet.cmp(&other.alphabet))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.alphabet.size <= 10 {
            for &a in &self.letters {
                write!(f, "{a}")?;
            }
        } else {
            for (i, &a) in self.letters.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Lexicographic comparison: `u < v` iff `u` is a proper prefix of `v` or
/// the first differing letter of `u` is smaller.
pub fn lex_compare(u: &Word, v: &Word) -> Result<Ordering> {
    u.same_alphabet(v)?;
    Ok(u.letters.cmp(&v.letters))
}

/// Length of the shortest `p` with `w = (w[..p])^(|w|/p)`.
pub fn primitive_root_len(w: &Word) -> Result<usize> {
    w.require_nonempty()?;
    Ok(root_len(&w.letters))
}

pub(crate) fn root_len(s: &[Letter]) -> usize {
    let n = s.len();
    let border = failure(s).last().copied().unwrap_or(0);
    let p = n - border;
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

/// KMP failure function: `f[i]` is the longest proper border of `s[..=i]`.
fn failure(s: &[Letter]) -> Vec<usize> {
    let mut f = vec![0usize; s.len()];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = f[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        f[i] = k;
    }
    f
}

pub fn is_primitive(w: &Word) -> Result<bool> {
    Ok(primitive_root_len(w)? == w.len())
}

/// All `|w|` rotations in offset order, repeats kept.
pub fn conjugates(w: &Word) -> Result<Vec<Word>> {
    w.require_nonempty()?;
    Ok((0..w.len()).map(|r| w.rotate(r)).collect())
}

pub(crate) fn not_primitive_error(w: &Word) -> Error {
    let p = root_len(&w.letters);
    Error::NotPrimitive {
        word: w.to_string(),
        period: w.slice(0, p).to_string(),
    }
}
