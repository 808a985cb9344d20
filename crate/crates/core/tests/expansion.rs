mod common;

use common::*;
use num_traits::One;
use perron::{
    alternating_digits, cylinder, cylinder_diameter, partial_sum, positive_digits,
    traditional_pierce_digits, AltDigits, Digit, DigitRule, DigitWord, ExactQ, PerronError, Sign,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn w(d: &[u64]) -> DigitWord {
    DigitWord::from_u64s(d)
}

fn unit_rational() -> impl Strategy<Value = ExactQ> {
    (1u64..=1_000_000).prop_flat_map(|d| (1..=d).prop_map(move |n| ExactQ::new(n as i64, d as i64)))
}

fn open_rational() -> impl Strategy<Value = ExactQ> {
    (2u64..=1_000_000).prop_flat_map(|d| (1..d).prop_map(move |n| ExactQ::new(n as i64, d as i64)))
}

fn system() -> impl Strategy<Value = &'static str> {
    prop::sample::select(SYSTEMS.to_vec())
}

fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Positive), Just(Sign::Alternating)]
}

#[test]
fn known_expansions() {
    let engel = DigitRule::engel();
    assert_eq!(
        positive_digits(&engel, &exact(1, 1), 4).unwrap(),
        w(&[2, 2, 2, 2])
    );
    assert_eq!(
        positive_digits(&engel, &exact(3, 8), 4).unwrap(),
        w(&[3, 9, 9, 9])
    );
    assert_eq!(
        positive_digits(&DigitRule::luroth(), &exact(1, 3), 4).unwrap(),
        w(&[4, 2, 2, 2])
    );
    let pierce = DigitRule::pierce();
    assert_eq!(
        alternating_digits(&pierce, &exact(1, 2), 4).unwrap(),
        AltDigits::IsPoint {
            rank: 1,
            word: w(&[])
        }
    );
    assert_eq!(traditional_pierce_digits(&exact(2, 5)).unwrap(), w(&[2, 5]));
    assert_eq!(traditional_pierce_digits(&exact(1, 3)).unwrap(), w(&[3]));
}

#[test]
fn validity_examples() {
    let engel = DigitRule::engel();
    assert!(engel.validate_word(&w(&[2, 3])).is_ok());
    assert!(engel.validate_word(&w(&[2, 2])).is_ok());
    assert!(matches!(
        DigitRule::engel_mod().validate_word(&w(&[2, 2])),
        Err(PerronError::Validity { index: 2, .. })
    ));
    assert!(matches!(
        cylinder(&engel, &w(&[3, 1]), Sign::Positive),
        Err(PerronError::Validity { index: 2, .. })
    ));
}

#[test]
fn cylinder_examples() {
    let c = cylinder(&DigitRule::engel(), &w(&[2, 3]), Sign::Positive).unwrap();
    assert_eq!((c.lo.clone(), c.hi.clone()), (exact(2, 3), exact(3, 4)));
    assert!(!c.lo_included && c.hi_included);
    assert_eq!(
        cylinder_diameter(&DigitRule::engel_mod(), &w(&[2, 3])).unwrap(),
        exact(1, 6)
    );
    let c = cylinder(&DigitRule::pierce(), &w(&[2]), Sign::Alternating).unwrap();
    assert_eq!((c.lo.clone(), c.hi.clone()), (exact(1, 2), exact(1, 1)));
    assert!(!c.lo_included && !c.hi_included);
    assert_eq!(
        partial_sum(&DigitRule::pierce(), &w(&[3, 4]), Sign::Alternating).unwrap(),
        exact(1, 3)
    );
}

#[test]
fn custom_rule_matches_builtin() {
    let custom = DigitRule::custom("engel-again", Digit::one(), |p: &[Digit]| {
        p.last().unwrap() - 1u32
    })
    .unwrap();
    let engel = DigitRule::engel();
    let x = exact(5, 17);
    assert_eq!(
        positive_digits(&custom, &x, 8).unwrap(),
        positive_digits(&engel, &x, 8).unwrap()
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn roundtrip_and_prefix_coherence(x in unit_rational(), name in system(), n in 1usize..12) {
        let rule = rule(name);
        let word = positive_digits(&rule, &x, n + 1).unwrap();
        let shorter = positive_digits(&rule, &x, n).unwrap();
        prop_assert_eq!(word.prefix(n), shorter);
        let c = cylinder(&rule, &word, Sign::Positive).unwrap();
        prop_assert!(c.contains(&x));
        let (lo, hi) = oracle_cylinder(name, word.digits(), Sign::Positive);
        prop_assert!(lo < q(&x) && q(&x) <= hi);
    }

    #[test]
    fn alternating_roundtrip(x in open_rational(), name in system()) {
        let rule = rule(name);
        match alternating_digits(&rule, &x, 10).unwrap() {
            AltDigits::Digits(word) => {
                let (lo, hi) = oracle_cylinder(name, word.digits(), Sign::Alternating);
                prop_assert!(lo < q(&x) && q(&x) < hi);
                for k in 0..word.len() {
                    prop_assert!(!is_alternating_child_endpoint(name, &word.digits()[..k], &q(&x)));
                }
            }
            AltDigits::IsPoint { rank, word } => {
                prop_assert_eq!(word.len() + 1, rank);
                if !word.is_empty() {
                    let (lo, hi) = oracle_cylinder(name, word.digits(), Sign::Alternating);
                    prop_assert!(lo < q(&x) && q(&x) < hi);
                }
                prop_assert!(is_alternating_child_endpoint(name, word.digits(), &q(&x)));
            }
        }
    }

    #[test]
    fn chart_cylinders_match_series(name in system(), seed in any::<u64>(), len in 1usize..7, s in sign()) {
        let word = random_word(&mut ChaCha8Rng::seed_from_u64(seed), name, len, 50);
        let c = cylinder(&rule(name), &word, s).unwrap();
        let (lo, hi) = oracle_cylinder(name, word.digits(), s);
        prop_assert_eq!(q(&c.lo), lo);
        prop_assert_eq!(q(&c.hi), hi);
    }

    #[test]
    fn diameters_and_parity(name in system(), seed in any::<u64>(), len in 1usize..9, s in sign()) {
        let rule = rule(name);
        let word = random_word(&mut ChaCha8Rng::seed_from_u64(seed), name, len, 40);
        let p = cylinder(&rule, &word, Sign::Positive).unwrap();
        let a = cylinder(&rule, &word, Sign::Alternating).unwrap();
        prop_assert_eq!(p.diameter(), a.diameter());
        prop_assert_eq!(p.diameter(), cylinder_diameter(&rule, &word).unwrap());
        let sum = partial_sum(&rule, &word, s).unwrap();
        let c = if s == Sign::Positive { &p } else { &a };
        let expect_sup = s == Sign::Alternating && word.len() % 2 == 1;
        prop_assert_eq!(sum, if expect_sup { c.hi.clone() } else { c.lo.clone() });
    }

    #[test]
    fn tiling_telescopes(name in system(), seed in any::<u64>(), len in 0usize..5, n in 1u64..60, s in sign()) {
        let rule = rule(name);
        let prefix = random_word(&mut ChaCha8Rng::seed_from_u64(seed), name, len, 30);
        let r = rule.rule_value(&prefix).unwrap();
        let parent = if prefix.is_empty() {
            ExactQ::one()
        } else {
            cylinder_diameter(&rule, &prefix).unwrap()
        };
        // prefix factor F: tail of children from digit m onward has length F/(m-1)
        let factor = &parent * ExactQ::from_natural(&r);
        let last: Digit = &r + n;
        let mut sum = ExactQ::zero();
        let mut prev: Option<ExactQ> = None;
        let mut d = &r + 1u32;
        while d <= last {
            let child = cylinder(&rule, &prefix.extended(d.clone()), s).unwrap();
            let diam = child.diameter();
            if let Some(p) = &prev {
                prop_assert!(diam < *p);
            }
            prev = Some(diam.clone());
            sum = sum + diam;
            d += 1u32;
        }
        let rest = &factor / ExactQ::from_natural(&last);
        prop_assert_eq!(&sum + &rest, parent);
        // the last child is no longer than everything after it
        prop_assert!(prev.unwrap() <= rest * ExactQ::from_natural(&last) / ExactQ::from_natural(&(&last - 1u32)));
    }

    #[test]
    fn positive_orientation(name in system(), seed in any::<u64>(), len in 0usize..4) {
        let rule = rule(name);
        let prefix = random_word(&mut ChaCha8Rng::seed_from_u64(seed), name, len, 30);
        let r = rule.rule_value(&prefix).unwrap();
        let a = cylinder(&rule, &prefix.extended(&r + 1u32), Sign::Positive).unwrap();
        let b = cylinder(&rule, &prefix.extended(&r + 2u32), Sign::Positive).unwrap();
        prop_assert_eq!(b.hi, a.lo);
        let a = cylinder(&rule, &prefix.extended(&r + 1u32), Sign::Alternating).unwrap();
        let b = cylinder(&rule, &prefix.extended(&r + 2u32), Sign::Alternating).unwrap();
        // children move up at odd rank and down at even rank
        if prefix.len() % 2 == 0 {
            prop_assert_eq!(b.hi, a.lo);
        } else {
            prop_assert_eq!(b.lo, a.hi);
        }
    }
}

#[test]
fn endpoints_are_is_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in SYSTEMS {
        let rule = rule(name);
        for _ in 0..200 {
            let len = 1 + (rand::Rng::gen_range(&mut rng, 0..4));
            let word = random_word(&mut rng, name, len, 20);
            let c = cylinder(&rule, &word, Sign::Alternating).unwrap();
            for x in [&c.lo, &c.hi] {
                if x.is_zero() || *x == ExactQ::one() {
                    continue;
                }
                let out = alternating_digits(&rule, x, len + 2).unwrap();
                assert!(
                    matches!(out, AltDigits::IsPoint { rank, .. } if rank <= len + 1),
                    "{name} {word} {x}"
                );
            }
        }
    }
}
