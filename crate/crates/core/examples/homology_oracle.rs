//! Checking twist relations on first homology.

use cablekit::data;
use cablekit::words::{chain_model, word_to_symplectic, words_equal_on_homology, TwistWord};

fn main() -> cablekit::Result<()> {
    let torus = chain_model(1, 1);
    let six = TwistWord::parse_compact("c1 c2").pow(6);
    println!("(c1 c2)^6 = bd on homology: {}", words_equal_on_homology(&six, &TwistWord::parse_compact("bd"), &torus)?);
    let m = word_to_symplectic(&TwistWord::parse_compact("c1 c2'"), &torus)?;
    println!("matrix of c1 c2^-1: {:?}", m.rows());

    let ws = data::workspace()?;
    for r in ws.relations() {
        let sys = ws.system(&r.system)?;
        println!(
            "{:<24} {:<16} {} = {} letters: {}",
            r.name,
            r.system,
            r.lhs.len(),
            r.rhs.len(),
            words_equal_on_homology(&r.lhs, &r.rhs, sys)?
        );
    }
    Ok(())
}
