use nyldon::analysis;
use nyldon::oracle;
use nyldon::{Alphabet, Word};

fn main() -> nyldon::Result<()> {
    let set = oracle::enumerate_nyldon(Alphabet::BINARY, 8)?;
    for len in 2..=8 {
        let code: Vec<Word> = set.iter().filter(|w| w.len() == len).cloned().collect();
        let v = analysis::circular_code_check(&code, 3)?;
        println!("Nyldon words of length {len}: {} words, circular {}", code.len(), v.is_circular);
    }

    let bad: Vec<Word> = ["00", "01", "10"]
        .iter()
        .map(|s| Word::parse(s, Alphabet::BINARY))
        .collect::<nyldon::Result<_>>()?;
    for wit in analysis::circular_code_witnesses(&bad, 2)? {
        let blocks: Vec<String> = wit.blocks.iter().map(|w| w.to_string()).collect();
        let reread = analysis::rotation_parse(&bad, &wit.blocks, wit.offset)?.unwrap_or_default();
        let reread: Vec<String> = reread.iter().map(|w| w.to_string()).collect();
        println!(
            "({}) rotated by {} reads ({})",
            blocks.join(", "),
            wit.offset,
            reread.join(", ")
        );
    }
    Ok(())
}
