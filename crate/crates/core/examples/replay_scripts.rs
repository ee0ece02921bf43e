//! Replaying the bundled rewrite scripts with every step checked.

use cablekit::data;

fn main() -> cablekit::Result<()> {
    let ws = data::workspace()?;
    for script in data::shipped_scripts()? {
        let log = ws.replay(&script)?;
        println!("{} ({} steps on {})", script.name, log.records.len(), script.system);
        println!("  start: {}", script.start);
        println!("  final: {}", log.final_word);
        println!("  all positive: {}", log.final_word.is_positive());
    }
    Ok(())
}
