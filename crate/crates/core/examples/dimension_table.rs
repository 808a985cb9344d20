//! Rank-k dimension estimates. A finite alphabet matches the Moran root of
//! its cylinder ratios at every rank; a ratio-limit window is shown as a
//! table over rank and digit cap.

use perron::dimension::{moran_dimension, pressure_root, DigitPredicate};
use perron::{DigitRule, ExactQ, Sign};

fn main() -> perron::Result<()> {
    let luroth = DigitRule::luroth();
    let alphabet = DigitPredicate::alphabet(&[2, 3]);
    let ratios = [ExactQ::new(1, 2), ExactQ::new(1, 6)];
    println!(
        "Moran root for Lüroth {{2,3}}: {:.12}",
        moran_dimension(&ratios, 1e-12)?
    );
    for rank in 1..=6 {
        let est = pressure_root(&luroth, Sign::Positive, &alphabet, rank, 3, 1e-12)?;
        println!(
            "  rank {rank}: {:.12} from {} bases",
            est.s_value, est.bases_count
        );
    }

    let engel = DigitRule::engel();
    let window = DigitPredicate::RatioLimitWindow {
        alpha: 2.0,
        delta: 0.25,
    };
    println!("Engel, c_(n+1)/c_n near 2:");
    for cap in [100u64, 400] {
        let row: Vec<String> = (1..=3)
            .map(|k| {
                pressure_root(&engel, Sign::Positive, &window, k, cap, 1e-9)
                    .map(|e| format!("{:.4}", e.s_value))
            })
            .collect::<perron::Result<_>>()?;
        println!("  cap {cap:>4}: {}", row.join("  "));
    }
    Ok(())
}
