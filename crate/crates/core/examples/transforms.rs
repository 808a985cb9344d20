//! Digit maps between expansions: positive to alternating, classical to
//! modified Engel, and the Pierce shift, plus the Lipschitz ratio of the
//! Engel map.

use perron::transforms::{t_ratio, transform_digits, transform_point, PointImage, TransformKind};
use perron::{DigitRule, DigitWord, ExactQ};

fn main() -> perron::Result<()> {
    let word = DigitWord::from_u64s(&[3, 9, 9, 9]);
    let fp = TransformKind::Fp(DigitRule::engel());
    println!(
        "Engel positive -> alternating: {word} -> {}",
        transform_digits(&fp, &word)?
    );
    println!(
        "classical -> modified Engel:   {word} -> {}",
        transform_digits(&TransformKind::TEngel, &word)?
    );
    let pierce = DigitWord::from_u64s(&[2, 4, 7]);
    println!(
        "Pierce shift:                  {pierce} -> {}",
        transform_digits(&TransformKind::GPierce, &pierce)?
    );

    let x: ExactQ = "3/8".parse()?;
    match transform_point(&TransformKind::TEngel, &x, 6)? {
        PointImage::Cylinder(c) => println!(
            "T(3/8) lies in ({}, {}], width {}",
            c.lo,
            c.hi,
            c.diameter()
        ),
        PointImage::IsPoint { rank, word } => {
            println!("3/8 is an endpoint at rank {rank} after {word}")
        }
    }

    println!("|T(cylinder)| / |cylinder| for all-2 Engel words:");
    for k in 1..=8 {
        let ratio = t_ratio(&DigitWord::from_u64s(&vec![2; k]))?;
        println!("  k = {k}: {ratio}");
    }
    Ok(())
}
