//! Runs the right Lazard procedure on binary words up to a length bound and
//! prints every step.

use nyldon::lazard::{self, LazardProcedure};
use nyldon::Alphabet;

fn main() -> nyldon::Result<()> {
    let n: usize = std::env::args().nth(1).map_or(5, |a| a.parse().expect("length bound"));

    let mut proc = LazardProcedure::new(Alphabet::BINARY, n)?;
    while !proc.is_finished() {
        let step = proc.step();
        let set: Vec<String> = proc.current().iter().map(|w| w.to_string()).collect();
        let u = proc.advance().expect("nonempty set");
        if set.len() <= 12 {
            println!("{step:>3} u={u:<8} {{{}}}", set.join(", "));
        } else {
            println!("{step:>3} u={u:<8} {} words", set.len());
        }
    }

    let report = lazard::lazard_report(Alphabet::BINARY, n)?;
    println!(
        "finishing step {}, stop word {}, {} words after it",
        report.finishing_step,
        report.stop_word.map_or("-".into(), |w| w.to_string()),
        report.words_after_stop
    );
    Ok(())
}
