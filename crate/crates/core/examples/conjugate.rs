//! The unique Nyldon conjugate of a primitive word, with the block contraction
//! that finds it.

use nyldon::melancon::{self, Mode};
use nyldon::{Alphabet, Policy, Word};

fn main() -> nyldon::Result<()> {
    let w = Word::parse("10001011010101", Alphabet::BINARY)?;

    println!("circular contraction of {w}:");
    for snap in melancon::contraction_trace(&w, &Policy::Lex, Mode::Circular)? {
        println!("  {snap}");
    }
    println!("conjugate: {}", melancon::conjugate(&w, &Policy::Lex)?);

    println!("linear contraction:");
    for snap in melancon::contraction_trace(&w, &Policy::Lex, Mode::Linear)? {
        println!("  {snap}");
    }

    // periodic words have no conjugate in the set
    let p = Word::parse("0101", Alphabet::BINARY)?;
    println!("{p}: {}", melancon::conjugate(&p, &Policy::Lex).unwrap_err());
    Ok(())
}
