//! Nyldon words and Nyldon-like sets.
//!
//! A Nyldon word is a word with no nondecreasing factorization into two or
//! more shorter Nyldon words; every word factors uniquely as a
//! nondecreasing sequence of them. This crate provides:
//!
//! - [`oracle`]: membership and factorization straight from the definition;
//! - [`fastfactor`]: the linear right-to-left stack factorization;
//! - [`melancon`]: Melançon's contraction algorithm over any [`policy`];
//! - [`hallsets`]: generation of Nyldon-like sets and Hall-property checks;
//! - [`lazard`]: the right Lazard procedure and its finishing step;
//! - [`analysis`]: circular codes, powers of words, the Lyndon suffix check;
//! - [`cli`]: the `nyldon` command line.
//!
//! ```
//! use nyldon::word::{Alphabet, Word};
//! use nyldon::fastfactor::nyldon_factorize;
//!
//! let w = Word::parse("10001011010101", Alphabet::BINARY).unwrap();
//! assert_eq!(nyldon_factorize(&w).unwrap().to_string(), "(1000, 1011010101)");
//! ```

pub mod acceptance;
pub mod analysis;
pub mod budget;
pub mod cli;
pub mod error;
pub mod factorization;
pub mod fastfactor;
pub mod hallsets;
pub mod known;
pub mod lazard;
pub mod melancon;
pub mod oracle;
pub mod policy;
pub mod word;

pub use error::{Error, Result};
pub use factorization::Factorization;
pub use policy::{OrderPolicy, Policy};
pub use word::{Alphabet, Word};
