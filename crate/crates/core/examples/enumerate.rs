//! Lists the binary Nyldon words by length and compares the counts with the
//! number of primitive necklaces.

use nyldon::acceptance::necklace_count;
use nyldon::hallsets;
use nyldon::{Alphabet, Policy};

fn main() -> nyldon::Result<()> {
    let max_len = 10;
    let set = hallsets::generate(&Policy::Lex, Alphabet::BINARY, max_len)?;
    for len in 1..=max_len {
        let words: Vec<String> = set
            .iter()
            .filter(|w| w.len() == len)
            .map(|w| w.to_string())
            .collect();
        let shown = if words.len() > 8 {
            format!("{} ...", words[..8].join(" "))
        } else {
            words.join(" ")
        };
        println!("{len:>2} {:>4} {:>4}  {shown}", words.len(), necklace_count(2, len as u64));
    }
    Ok(())
}
