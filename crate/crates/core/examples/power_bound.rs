//! How the Nyldon factorization of `w^k` settles into copies of the conjugate.

use nyldon::analysis;
use nyldon::{Alphabet, Word};

fn main() -> nyldon::Result<()> {
    let w = Word::parse("0010111", Alphabet::BINARY)?;
    for k in 1..=6 {
        let p = analysis::power_profile(&w, k)?;
        let pre: Vec<String> = p.prefix_factors.iter().map(|f| f.to_string()).collect();
        let suf: Vec<String> = p.suffix_factors.iter().map(|f| f.to_string()).collect();
        println!(
            "k={k} [{}] ({})^{} [{}]  K={}",
            pre.join(" "),
            p.n,
            p.central_copies,
            suf.join(" "),
            p.K
        );
    }

    let report = analysis::k_bound_scan(Alphabet::BINARY, 10, None)?;
    println!(
        "{} words up to length 10: max K {} at {}, {} above the bound",
        report.words_scanned,
        report.max_observed_k,
        report.max_witness.map_or("-".into(), |w| w.to_string()),
        report.violations.len()
    );
    Ok(())
}
