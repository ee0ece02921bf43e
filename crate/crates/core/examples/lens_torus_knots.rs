//! Fibers of torus knots in lens spaces.

use cablekit::lens::LensTorusKnot;

fn main() -> cablekit::Result<()> {
    // (r, s) lens parameters, (k, l) curve on the Heegaard torus
    for (r, s, k, l) in [(7, 2, 1, 3), (1, 0, 3, 2), (4, 1, 2, 1), (8, 1, 2, 1), (9, 2, 6, 3)] {
        let t = LensTorusKnot::new(r, s, k, l)?;
        let o = t.homological_order()?;
        println!(
            "L({r},{s}) T({k},{l}): {} component(s), chi {}, {} boundary, order {} wrap {}{}",
            t.components(),
            t.euler_characteristic()?,
            t.boundary_count()?,
            o.order,
            o.wrap,
            if t.is_rational_unknot() { ", rational unknot" } else { "" }
        );
    }
    let trivial = LensTorusKnot::new(5, 2, 5, 2)?;
    println!("T(5,2) in L(5,2) trivial: {}", trivial.is_trivial());
    Ok(())
}
