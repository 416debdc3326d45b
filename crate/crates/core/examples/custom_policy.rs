//! Plugging a user-defined order into the generator and Melançon's algorithm.

use std::cmp::Ordering;

use nyldon::hallsets;
use nyldon::melancon;
use nyldon::word::Letter;
use nyldon::{Alphabet, OrderPolicy, Word};

/// Lexicographic order with the letters ranked 1 < 2 < 0.
struct Shifted;

impl OrderPolicy for Shifted {
    fn id(&self) -> &str {
        "shifted"
    }

    fn compare(&self, a: &[Letter], b: &[Letter]) -> Ordering {
        let key = |x: &Letter| (x + 2) % 3;
        a.iter().map(key).cmp(b.iter().map(key))
    }

    fn nyldon_like(&self) -> bool {
        true
    }
}

fn main() -> nyldon::Result<()> {
    let ternary = Alphabet::new(3)?;
    let set = hallsets::generate(&Shifted, ternary, 4)?;
    println!("{} words up to length 4", set.len());
    let v = hallsets::verify_hall(&set, &Shifted)?;
    println!("right Hall: {}, left Hall: {}", v.is_right_hall, v.is_left_hall);

    let w = Word::parse("2,0,1,1,0,2,1", ternary)?;
    println!("{w} -> {}", melancon::factorize(&w, &Shifted)?);
    println!("conjugate {}", melancon::conjugate(&w, &Shifted)?);
    Ok(())
}
