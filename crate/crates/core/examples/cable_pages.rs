//! Pages of cables, resolution of rational components and surgery.

use cablekit::cabling::{
    cabled_page, induced_open_book_from_surgery, resolve, stabilization_count_pq_from_p1, CableCoefficients,
};
use cablekit::openbook::RationalOpenBook;
use cablekit::slope::Slope;

fn main() -> cablekit::Result<()> {
    let t = RationalOpenBook::trefoil(true);
    for (p, q) in [(2, 1), (2, 3), (3, 2), (2, 2)] {
        let page = cabled_page(&t, &CableCoefficients::single(p, q))?;
        let n = stabilization_count_pq_from_p1(p, q)?;
        println!(
            "({p},{q}) cable of the trefoil: genus {}, {} boundary, {} stabilizations from ({p},1)",
            page.genus, page.boundary_count_of_page, n.count
        );
    }

    let left = RationalOpenBook::trefoil(false);
    let s = induced_open_book_from_surgery(&left, 0, Slope::integer(-5))?;
    let c = s.book.components[0];
    println!(
        "-5 surgery on the left trefoil: binding ({}, {}), admissible {}",
        c.order, c.seifert_numerator, s.admissible
    );
    let r = resolve(&s.book, &[0])?;
    println!("(5,0) resolution: genus {}, {} boundary", r.genus, r.boundary_count_of_page);
    println!("word: {}", r.monodromy.unwrap());
    Ok(())
}
