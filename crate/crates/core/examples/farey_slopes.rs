//! Farey paths, negative continued fractions and exceptional slopes.

use cablekit::slope::{
    eval_cont_frac, exceptional_slopes, farey_clockwise_path, farey_shortest_path, neg_cont_frac, Slope,
};

fn show(v: &[Slope]) -> String {
    v.iter().map(Slope::to_string).collect::<Vec<_>>().join(" -> ")
}

fn main() -> cablekit::Result<()> {
    let s: Slope = "-3/8".parse()?;
    let cf = neg_cont_frac(s)?;
    println!("{s} = {cf} (back to {})", eval_cont_frac(&cf)?);
    println!("shortest 0 to 7/5: {}", show(&farey_shortest_path(Slope::ZERO, "7/5".parse()?)));
    let cw = farey_clockwise_path(Slope::integer(-1), s).expect("slopes are finite");
    println!("clockwise -1 to {s}: {}", show(&cw));
    for seifert in ["-1/3", "-2/5", "-3/8"] {
        let e = exceptional_slopes(seifert.parse()?)?;
        println!("exceptional cables for Seifert slope {seifert}: {}", show(&e));
    }
    Ok(())
}
