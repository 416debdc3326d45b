//! Nyldon factorization of words given on the command line.
//!
//! ```text
//! cargo run --example factor -- 10001011010101 0110
//! ```

use nyldon::fastfactor::{self, Comparator};
use nyldon::{Alphabet, Word};

fn main() -> nyldon::Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["10001011010101".into(), "1101001110".into(), "0000".into()];
    }
    for arg in args {
        let w = Word::parse(&arg, Alphabet::BINARY)?;
        let stack = fastfactor::factor_stack(&w, Comparator::SuffixArray)?;
        let f = stack.to_factorization(&w);
        println!(
            "{w}: {} ({} comparisons, Nyldon: {})",
            f.to_plain(),
            stack.comparisons_used(),
            f.is_single()
        );
    }
    Ok(())
}
