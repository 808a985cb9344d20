//! Digit extraction.
//!
//! Both recursions invert one step of the chart composition described in
//! [`cylinder`](super::cylinder). With `r` the current numerator and `x` the
//! current remainder:
//!
//! * positive: `x in (r/p, r/(p-1)]`, so `p = floor(r/x) + 1` and
//!   `x' = (x - r/p) (p-1) p / r` lies in `(0, 1]`;
//! * alternating: `x in (r/q, r/(q-1))`, so `q = floor(r/x) + 1` and
//!   `x' = (r/(q-1) - x) (q-1) q / r` lies in `(0, 1)`.
//!
//! When `r/x` is an integer the positive digit still follows the formula, so
//! `x` becomes the included supremum of the next cylinder and the remainder
//! is exactly 1. The alternating remainder would hit an endpoint instead,
//! which means `x` has no alternating representation.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{PerronError, Result};
use crate::expansion::rule::DigitRule;
use crate::expansion::word::{Digit, DigitWord};
use crate::rational::ExactQ;

/// Outcome of alternating digit extraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AltDigits {
    Digits(DigitWord),
    /// `x` is an endpoint of an alternating cylinder. `rank` is the rank whose
    /// digit is undefined; `word` holds the `rank - 1` digits found before it.
    IsPoint {
        rank: usize,
        word: DigitWord,
    },
}

fn floor_natural(q: &ExactQ) -> Digit {
    q.floor()
        .to_biguint()
        .expect("quotient of positive values is nonnegative")
}

/// `x = num/den` as a pair of naturals.
fn parts(x: &ExactQ) -> (BigUint, BigUint) {
    let num = x.numer().to_biguint().expect("positive");
    let den = x.denom().to_biguint().expect("positive");
    (num, den)
}

/// First `n` digits of the positive expansion of `x in (0, 1]`.
pub fn positive_digits(rule: &DigitRule, x: &ExactQ, n: usize) -> Result<DigitWord> {
    if !x.is_positive() || *x > ExactQ::one() {
        return Err(PerronError::domain(format!("x = {x} is outside (0, 1]")));
    }
    let mut word = DigitWord::empty();
    let (mut a, mut b) = parts(x);
    for _ in 0..n {
        let r = rule.next_value(word.digits())?;
        let rb = &r * &b;
        let p: Digit = &rb / &a + 1u32;
        // (a/b - r/p) (p-1) p / r = (a p - r b) (p-1) / (r b)
        let rem = ExactQ::ratio(&((&a * &p - &rb) * (&p - 1u32)), &rb);
        debug_assert!(rem.is_positive() && rem <= ExactQ::one());
        (a, b) = parts(&rem);
        word.push(p);
    }
    Ok(word)
}

/// First `n` digits of the alternating expansion of `x in (0, 1)`, or the
/// rank at which `x` turns out to be a cylinder endpoint.
pub fn alternating_digits(rule: &DigitRule, x: &ExactQ, n: usize) -> Result<AltDigits> {
    if !x.is_positive() || *x >= ExactQ::one() {
        return Err(PerronError::domain(format!("x = {x} is outside (0, 1)")));
    }
    let mut word = DigitWord::empty();
    let (mut a, mut b) = parts(x);
    for _ in 0..n {
        let r = rule.next_value(word.digits())?;
        let rb = &r * &b;
        if (&rb % &a).is_zero() {
            return Ok(AltDigits::IsPoint {
                rank: word.len() + 1,
                word,
            });
        }
        let q: Digit = &rb / &a + 1u32;
        // (r/(q-1) - a/b) (q-1) q / r = (r b - a (q-1)) q / (r b)
        let rem = ExactQ::ratio(&((&rb - &a * (&q - 1u32)) * &q), &rb);
        debug_assert!(rem.is_positive() && rem < ExactQ::one());
        (a, b) = parts(&rem);
        word.push(q);
    }
    Ok(AltDigits::Digits(word))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PierceNotation {
    PerronToTraditional,
    TraditionalToPerron,
}

/// Shifts Pierce digits between the Perron notation (`q_n`) and the
/// traditional one (`q_n - 1`).
pub fn pierce_notation_convert(word: &DigitWord, direction: PierceNotation) -> Result<DigitWord> {
    let out: Vec<Digit> = match direction {
        PierceNotation::PerronToTraditional => {
            DigitRule::pierce().validate_word(word)?;
            word.iter().map(|d| d - 1u32).collect()
        }
        PierceNotation::TraditionalToPerron => {
            check_traditional(word.digits())?;
            word.iter().map(|d| d + 1u32).collect()
        }
    };
    Ok(DigitWord::new(out))
}

fn check_traditional(digits: &[Digit]) -> Result<()> {
    for (i, d) in digits.iter().enumerate() {
        let ok = if i == 0 {
            !d.is_zero()
        } else {
            *d > digits[i - 1]
        };
        if !ok {
            return Err(PerronError::validity(
                i + 1,
                "traditional Pierce digits must be positive and strictly increasing",
            ));
        }
    }
    Ok(())
}

/// Classical Pierce algorithm `a = floor(1/x)`, `x <- 1 - a x`, run until the
/// remainder vanishes (always, for rationals).
pub fn traditional_pierce_digits(x: &ExactQ) -> Result<DigitWord> {
    if !x.is_positive() || *x >= ExactQ::one() {
        return Err(PerronError::domain(format!("x = {x} is outside (0, 1)")));
    }
    let mut word = DigitWord::empty();
    let mut rem = x.clone();
    while !rem.is_zero() {
        let a: BigUint = floor_natural(&rem.recip());
        rem = ExactQ::one() - ExactQ::from_natural(&a) * &rem;
        debug_assert!(!rem.is_negative());
        word.push(a);
    }
    Ok(word)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansion::cylinder::{cylinder, partial_sum, Sign};

    fn w(d: &[u64]) -> DigitWord {
        DigitWord::from_u64s(d)
    }

    fn q(n: i64, d: i64) -> ExactQ {
        ExactQ::new(n, d)
    }

    #[test]
    fn positive_examples() {
        let engel = DigitRule::engel();
        assert_eq!(
            positive_digits(&engel, &q(1, 1), 4).unwrap(),
            w(&[2, 2, 2, 2])
        );
        assert_eq!(
            positive_digits(&engel, &q(3, 8), 4).unwrap(),
            w(&[3, 9, 9, 9])
        );
        let luroth = DigitRule::luroth();
        assert_eq!(
            positive_digits(&luroth, &q(1, 3), 4).unwrap(),
            w(&[4, 2, 2, 2])
        );
        assert_eq!(positive_digits(&engel, &q(3, 8), 0).unwrap(), w(&[]));
    }

    #[test]
    fn positive_domain() {
        let luroth = DigitRule::luroth();
        assert!(positive_digits(&luroth, &q(0, 1), 3).is_err());
        assert!(positive_digits(&luroth, &q(3, 2), 3).is_err());
        assert!(positive_digits(&luroth, &q(-1, 2), 3).is_err());
    }

    #[test]
    fn alternating_examples() {
        let pierce = DigitRule::pierce();
        assert_eq!(
            alternating_digits(&pierce, &q(1, 2), 4).unwrap(),
            AltDigits::IsPoint {
                rank: 1,
                word: w(&[])
            }
        );
        assert_eq!(
            alternating_digits(&pierce, &q(2, 5), 4).unwrap(),
            AltDigits::IsPoint {
                rank: 2,
                word: w(&[3])
            }
        );
        let luroth = DigitRule::luroth();
        assert_eq!(
            alternating_digits(&luroth, &q(2, 3), 3).unwrap(),
            AltDigits::Digits(w(&[2, 2, 2]))
        );
        assert!(alternating_digits(&luroth, &q(1, 1), 3).is_err());
    }

    #[test]
    fn is_points_are_cylinder_endpoints() {
        // 2/5 is the supremum of the rank-2 cylinder [3, 5] = (3/8, 2/5); the
        // partial sum sits at the other end.
        let c = cylinder(&DigitRule::pierce(), &w(&[3, 5]), Sign::Alternating).unwrap();
        assert_eq!((c.lo.clone(), c.hi.clone()), (q(3, 8), q(2, 5)));
        assert_eq!(
            partial_sum(&DigitRule::pierce(), &w(&[3, 5]), Sign::Alternating).unwrap(),
            q(3, 8)
        );
    }

    #[test]
    fn pierce_notation() {
        use PierceNotation::*;
        assert_eq!(
            pierce_notation_convert(&w(&[3, 5, 9]), PerronToTraditional).unwrap(),
            w(&[2, 4, 8])
        );
        assert_eq!(
            pierce_notation_convert(&w(&[1, 2, 5]), TraditionalToPerron).unwrap(),
            w(&[2, 3, 6])
        );
        assert!(pierce_notation_convert(&w(&[2, 2]), PerronToTraditional).is_err());
        assert!(pierce_notation_convert(&w(&[0, 2]), TraditionalToPerron).is_err());
        assert!(pierce_notation_convert(&w(&[3, 3]), TraditionalToPerron).is_err());
    }

    #[test]
    fn traditional_pierce() {
        assert_eq!(traditional_pierce_digits(&q(2, 5)).unwrap(), w(&[2, 5]));
        assert_eq!(traditional_pierce_digits(&q(1, 2)).unwrap(), w(&[2]));
        assert_eq!(traditional_pierce_digits(&q(1, 3)).unwrap(), w(&[3]));
        assert!(traditional_pierce_digits(&q(1, 1)).is_err());
    }

    #[test]
    fn pierce_is_point_matches_traditional_digits() {
        // The alternating digits found before the endpoint, shifted to the
        // traditional notation, are a prefix of the terminating expansion.
        let pierce = DigitRule::pierce();
        for (n, d) in [(2, 5), (3, 7), (5, 17), (11, 40)] {
            let x = q(n, d);
            let trad = traditional_pierce_digits(&x).unwrap();
            match alternating_digits(&pierce, &x, 50).unwrap() {
                AltDigits::IsPoint { rank, word } => {
                    assert_eq!(rank, trad.len());
                    let shifted =
                        pierce_notation_convert(&word, PierceNotation::PerronToTraditional)
                            .unwrap();
                    assert_eq!(shifted, trad.prefix(rank - 1));
                }
                AltDigits::Digits(_) => panic!("rational {x} should end on an endpoint"),
            }
        }
    }
}
