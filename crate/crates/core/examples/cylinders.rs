//! The first few levels of the Engel cylinder tree. Positive cylinders are
//! half-open on the left; alternating ones are open and flip orientation at
//! every rank, but both have the same diameter.

use perron::{cylinder, cylinder_diameter, partial_sum, DigitRule, DigitWord, Sign};

fn main() -> perron::Result<()> {
    let engel = DigitRule::engel();
    let words = [
        vec![2],
        vec![3],
        vec![2, 2],
        vec![2, 3],
        vec![3, 9],
        vec![3, 9, 9],
    ];
    for w in words {
        let word = DigitWord::from_u64s(&w);
        let p = cylinder(&engel, &word, Sign::Positive)?;
        let a = cylinder(&engel, &word, Sign::Alternating)?;
        println!(
            "{word:<12} D = {:<10} positive ({}, {}]  alternating ({}, {})  S_n alt = {}",
            cylinder_diameter(&engel, &word)?,
            p.lo,
            p.hi,
            a.lo,
            a.hi,
            partial_sum(&engel, &word, Sign::Alternating)?,
        );
    }
    Ok(())
}
