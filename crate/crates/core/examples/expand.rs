//! Digits of a few rationals in every built-in system, positive and
//! alternating.
//!
//! cargo run --example expand -- 3/8 12

use perron::{alternating_digits, positive_digits, AltDigits, DigitRule, ExactQ};

fn main() -> perron::Result<()> {
    let mut args = std::env::args().skip(1);
    let x: ExactQ = args.next().as_deref().unwrap_or("3/8").parse()?;
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);

    for name in ["luroth", "engel", "engel-mod", "pierce", "oppenheim:2,-1"] {
        let rule: DigitRule = name.parse()?;
        let pos = positive_digits(&rule, &x, n)?;
        println!("{name:>15} positive     {pos}");
        match alternating_digits(&rule, &x, n)? {
            AltDigits::Digits(word) => println!("{:>15} alternating  {word}", ""),
            AltDigits::IsPoint { rank, word } => {
                println!(
                    "{:>15} alternating  {word}  (cylinder endpoint, stops at rank {rank})",
                    ""
                )
            }
        }
    }
    Ok(())
}
