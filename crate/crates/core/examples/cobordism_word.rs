//! Stacking two monodromies on a cable page.

use cablekit::monodromy::{compose_cobordism_word, CobordismPage};
use cablekit::words::TwistWord;

fn main() -> cablekit::Result<()> {
    let phi1 = TwistWord::parse_compact("c1 c2");
    let phi2 = TwistWord::parse_compact("c1 c1 c2");
    for page in [CobordismPage::Connected { genus: 1 }, CobordismPage::Disconnected { genus: 1, boundaries: 2 }] {
        let c = compose_cobordism_word(&phi1, &phi2, page)?;
        println!("{page:?}");
        println!("  word:        {}", c.word);
        println!("  conjugated:  {}", c.certificate.conjugated_word);
        println!("  homology checked: {}", c.certificate.homology_checked);
    }
    Ok(())
}
