//! Monodromy words of cables from branched covers.

use cablekit::monodromy::{braid_bp, cable_monodromy, monodromy_22_connected, rotation_braids_22, NoduleLayout};
use cablekit::openbook::{BindingComponent, RationalOpenBook};
use cablekit::slope::Slope;
use cablekit::words::{Generator, TwistWord};

fn main() -> cablekit::Result<()> {
    let torus = RationalOpenBook::integral(1, 1).with_monodromy(TwistWord::parse_compact("c1 c1 c2"));
    let two_one = cable_monodromy(&torus, 2, 1)?;
    let layout = NoduleLayout::connected(2, 1)?;
    println!("(2,1): {}", layout.expand_nodule_boundaries(two_one.monodromy.as_ref().unwrap()));
    println!("(2,2): {}", monodromy_22_connected(&torus)?);

    let disconnected = RationalOpenBook::integral(1, 2).with_monodromy(TwistWord::parse_compact("c1 c2"));
    println!("(3,1) of a two-boundary torus: {}", cable_monodromy(&disconnected, 3, 1)?.monodromy.unwrap());

    let mut w = TwistWord::new(vec![Generator::fractional("bd", Slope::new(1, 3)?)]);
    w = w.then(&TwistWord::parse_compact("bd bd"));
    let sigma = RationalOpenBook::new(1, vec![BindingComponent::new(3, -1)?], Some(w));
    println!("(2,-1) of the (3,-1) book: {}", cable_monodromy(&sigma, 2, -1)?.monodromy.unwrap());

    let b = braid_bp(4, 3)?;
    println!(
        "braid for d = 4, p = 3: {} letters, {} band crossings, verified {}",
        b.braid.len(),
        b.braid.band_crossings(),
        b.verify()
    );
    let r = rotation_braids_22(1);
    println!("(2,2) rotation braids: {} and {}", r.garside_form, r.conjugate_form);
    Ok(())
}
