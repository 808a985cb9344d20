//! Split an infinite family set into finite blocks whose α-cost stays below
//! (1 + ε)|M|^α.

use perron::coverings::{split_to_finite, FamilySet};
use perron::{DigitRule, DigitWord, Sign};

fn main() -> perron::Result<()> {
    let engel = DigitRule::engel();
    let fs = FamilySet::unbounded(Sign::Positive, DigitWord::from_u64s(&[2]), 3u32.into());
    let total = fs.diameter(&engel)?;
    for (alpha, eps) in [(1.0, 0.1), (0.5, 0.5), (0.25, 1.0)] {
        let mut stream = split_to_finite(&engel, &fs, alpha, eps)?;
        println!(
            "{fs}, alpha {alpha}, eps {eps}: ratio base s = {}",
            stream.ratio_base()
        );
        let mut cost = 0.0;
        for _ in 0..5 {
            let block = stream.next().expect("split streams are infinite");
            let d = stream.block_diameter(&block);
            cost += d.powf(alpha);
            println!("  {block}  |M_j| = {d}");
        }
        println!(
            "  cost so far {:.6}, residue bound {:.3e}, budget {:.6}",
            cost,
            stream.residue_cost_bound(),
            (1.0 + eps) * total.powf(alpha)
        );
    }
    Ok(())
}
