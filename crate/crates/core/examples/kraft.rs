//! Kraft sums of the intermediate Lazard sets, and a code check on the small
//! ones.

use nyldon::lazard;
use nyldon::Alphabet;
use num_traits::ToPrimitive;

fn main() -> nyldon::Result<()> {
    let trace = lazard::lazard_run(Alphabet::BINARY, 5)?;
    for l in [10, 20, 40] {
        println!("L = {l}");
        for state in &trace {
            let sum = lazard::kraft_sum(state, l)?;
            let deficit = 1.0 - sum.to_f64().unwrap_or(f64::NAN);
            let code = if l <= 10 {
                format!(" code={}", lazard::lazard_code_check(state, l)?)
            } else {
                String::new()
            };
            println!("  Y{:<2} 1 - sum = {deficit:.3e}{code}", state.step);
        }
    }
    Ok(())
}
