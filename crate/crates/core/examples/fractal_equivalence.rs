//! A set described by digits has the same rank-k dimension estimate in the
//! positive and alternating expansions, because matching cylinders have equal
//! diameters.

use perron::dimension::{pressure_root, DigitPredicate};
use perron::{DigitRule, Sign};

fn main() -> perron::Result<()> {
    let predicates: Vec<DigitPredicate> = [
        "alphabet:2,3,5,7,11",
        "ratio:2",
        "growth:pow:1",
        "window:1.5,0.5",
    ]
    .iter()
    .map(|s| s.parse())
    .collect::<perron::Result<_>>()?;
    for system in ["luroth", "engel", "pierce"] {
        let rule: DigitRule = system.parse()?;
        for p in &predicates {
            let pos = pressure_root(&rule, Sign::Positive, p, 3, 40, 1e-10)?;
            let alt = pressure_root(&rule, Sign::Alternating, p, 3, 40, 1e-10)?;
            println!(
                "{system:>7}  {:<40} P {:.10}  P- {:.10}  identical: {}",
                p.description(),
                pos.s_value,
                alt.s_value,
                pos.s_value.to_bits() == alt.s_value.to_bits()
            );
        }
    }
    Ok(())
}
