//! Cover an interval by at most three family sets, each no longer than the
//! interval, then check the cover and its α-cost.
//!
//! cargo run --example cover_interval -- luroth 21/100 3/5

use perron::coverings::{cover_interval, verify_cover, QInterval};
use perron::{DigitRule, ExactQ, Sign};

fn main() -> perron::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let rule: DigitRule = args
        .first()
        .map(String::as_str)
        .unwrap_or("luroth")
        .parse()?;
    let lo: ExactQ = args
        .get(1)
        .map(String::as_str)
        .unwrap_or("21/100")
        .parse()?;
    let hi: ExactQ = args.get(2).map(String::as_str).unwrap_or("3/5").parse()?;

    for sign in [Sign::Positive, Sign::Alternating] {
        let u = QInterval::for_sign(sign, lo.clone(), hi.clone())?;
        let sets = cover_interval(&rule, sign, &u)?;
        println!("{sign} cover of {u} (|U| = {}):", u.diameter());
        for fs in &sets {
            println!(
                "  {fs}  hull {}  |M| = {}",
                fs.hull(&rule)?,
                fs.diameter(&rule)?
            );
        }
        for alpha in [0.25, 0.5, 1.0] {
            let report = verify_cover(&rule, &u, &sets, alpha);
            println!(
                "  alpha {alpha}: covers {}, cost {:.6} vs |U|^alpha {:.6}",
                report.covers,
                report.cost,
                u.diameter().powf(alpha)
            );
        }
    }
    Ok(())
}
