//! The mod 10 length obstruction to positive factorizations.

use cablekit::monodromy::stein_obstruction;

fn main() -> cablekit::Result<()> {
    let first = stein_obstruction(1)?;
    println!("expanded (2,1) word for p = 1 has {} letters, length {}", first.word.len(), first.algebraic_length);
    for p in 1..=12 {
        println!("p = {p:>2}: {}", stein_obstruction(p)?);
    }
    Ok(())
}
