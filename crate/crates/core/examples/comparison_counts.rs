//! Letter comparisons used by each factorization method on random words,
//! against n log n.

use nyldon::fastfactor::{self, Comparator};
use nyldon::melancon;
use nyldon::{Alphabet, Policy, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn main() -> nyldon::Result<()> {
    let mut rng = StdRng::seed_from_u64(7);
    println!("{:>7} {:>10} {:>10} {:>10} {:>10}", "n", "n log n", "naive", "suffix", "queue");
    for e in 4..=16 {
        let n = 1usize << e;
        let letters: Vec<u32> = (0..n).map(|_| rng.gen_range(0..2)).collect();
        let w = Word::new(Alphabet::BINARY, letters)?;
        let naive = fastfactor::factor_stack(&w, Comparator::Naive)?.comparisons_used();
        let fast = fastfactor::factor_stack(&w, Comparator::SuffixArray)?.comparisons_used();
        let (_, queue) = melancon::factorize_counted(&w, &Policy::Lex)?;
        println!("{n:>7} {:>10} {naive:>10} {fast:>10} {queue:>10}", n * e);
    }
    Ok(())
}
