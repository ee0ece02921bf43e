//! Building, validating, reframing and stabilizing open books.

use cablekit::openbook::{BindingComponent, RationalOpenBook, StabilizationMode};

fn main() -> cablekit::Result<()> {
    let t = RationalOpenBook::trefoil(true);
    println!("trefoil: genus {}, chi {}, violations {:?}", t.genus, t.page_euler_char(), t.validate());
    println!("{}", serde_json::to_string(&t).unwrap());

    let c = BindingComponent::new(5, 7)?;
    let w = c.normalize_to_window();
    println!("(5,7) reframes to ({}, {}) in the window", w.order, w.seifert_numerator);

    let s = t.positive_stabilize(StabilizationMode::SameComponent(0))?;
    println!(
        "stabilized: {} boundaries, chi {}, word {}",
        s.boundary_count_of_page,
        s.page_euler_char(),
        s.monodromy.unwrap()
    );

    let mut bad = RationalOpenBook::integral(1, 1);
    bad.boundary_count_of_page = 2;
    println!("bad book: {:?}", bad.validate());
    Ok(())
}
