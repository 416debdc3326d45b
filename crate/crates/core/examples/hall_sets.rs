//! Checks the Hall properties of the sets generated by each built-in order.

use nyldon::budget::Budget;
use nyldon::hallsets;
use nyldon::oracle;
use nyldon::{Alphabet, Policy};

fn main() -> nyldon::Result<()> {
    for policy in Policy::ALL {
        let set = oracle::enumerate(&policy, Alphabet::BINARY, 7, &Budget::default())?;
        let v = hallsets::verify_hall(&set, &policy)?;
        println!(
            "{:<7} {:>3} words  factorization={} right={} left={} viennot={} nyldon-like={}",
            v.policy,
            set.len(),
            v.is_factorization,
            v.is_right_hall,
            v.is_left_hall,
            v.is_viennot,
            v.nyldon_like_ok
        );
        for c in &v.counterexamples {
            println!("        f={} g={} breaks {}", c.f, c.g, c.violated_clause);
        }
    }
    Ok(())
}
