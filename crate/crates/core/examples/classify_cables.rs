//! Contact verdicts for cables of open books.

use cablekit::cabling::{classify_cable, hopf_delta, CableCoefficients};
use cablekit::openbook::{BindingComponent, RationalOpenBook};

fn main() -> cablekit::Result<()> {
    let trefoil = RationalOpenBook::trefoil(true);
    let sigma = RationalOpenBook::new(1, vec![BindingComponent::new(3, -1)?], None);
    let unknot = RationalOpenBook::rational_unknot(3, -1)?;
    let cases = [
        ("trefoil", &trefoil, "2,3"),
        ("trefoil", &trefoil, "2,-1"),
        ("trefoil", &trefoil, "-2,-3"),
        ("(3,-1) book", &sigma, "3,-2"),
        ("(3,-1) book", &sigma, "2,-1"),
        ("rational unknot", &unknot, "2,-1"),
    ];
    for (name, book, cable) in cases {
        let v = classify_cable(book, &CableCoefficients::parse(cable)?)?;
        print!("{name} ({cable}): {:?}", v.kind);
        if let Some(q) = v.qualifier {
            print!(" [{q:?}]");
        }
        if let Some(d) = v.hopf_delta {
            print!(", hopf delta {d}");
        }
        println!();
    }
    println!("hopf delta (3,-2) genus 2: {}", hopf_delta(3, -2, 2)?);
    Ok(())
}
