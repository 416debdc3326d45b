use nyldon::analysis;
use nyldon::Alphabet;

fn main() -> nyldon::Result<()> {
    for (size, max_len) in [(2, 14), (3, 9)] {
        let r = analysis::lyndon_suffix_check(Alphabet::new(size)?, max_len)?;
        println!(
            "alphabet {size}, length <= {max_len}: {} words, {} below all Lyndon suffixes, counterexample {:?}",
            r.words_checked,
            r.hypothesis_holds,
            r.counterexample.map(|w| w.to_string())
        );
    }
    Ok(())
}
