//! Total orders on nonempty words used to drive Nyldon-like constructions.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::word::Letter;

/// A total order `≺` on words.
///
/// Factorizations built against a policy are nondecreasing under it.
pub trait OrderPolicy: Sync {
    fn id(&self) -> &str;

    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering;

    /// Whether the policy is known to satisfy `f ≺ fg` for every contraction
    /// it produces. Enables the live growth assertion in Melançon's algorithm.
    fn nyldon_like(&self) -> bool {
        false
    }

    /// Whether `compare` is plain lexicographic order, which lets callers
    /// substitute suffix-array comparisons.
    fn is_lexicographic(&self) -> bool {
        false
    }
}

/// The built-in policies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Policy {
    /// Lexicographic order; generates the Nyldon words.
    Lex,
    /// Reversed lexicographic order; nondecreasing under it means
    /// nonincreasing lexicographically, so it generates the Lyndon words.
    ReverseLex,
    /// Shorter words first, ties broken lexicographically.
    DegLex,
}

impl Policy {
    pub const ALL: [Policy; 3] = [Policy::Lex, Policy::ReverseLex, Policy::DegLex];

    pub fn from_id(id: &str) -> Result<Policy> {
        Policy::ALL
            .into_iter()
            .find(|p| p.id() == id)
            .ok_or_else(|| Error::UnknownPolicy(id.to_string()))
    }
}

impl OrderPolicy for Policy {
    fn id(&self) -> &str {
        match self {
            Policy::Lex => "lex",
            Policy::ReverseLex => "revlex",
            Policy::DegLex => "deglex",
        }
    }

    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        match self {
            Policy::Lex => a.cmp(b),
            Policy::ReverseLex => b.cmp(a),
            Policy::DegLex => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        }
    }

    fn nyldon_like(&self) -> bool {
        matches!(self, Policy::Lex | Policy::DegLex)
    }

    fn is_lexicographic(&self) -> bool {
        matches!(self, Policy::Lex)
    }
}
