// Shared helpers for the integration tests. The oracles here evaluate the
// series definitions term by term and never go through the library's charts.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use perron::{Digit, DigitRule, DigitWord, ExactQ, Sign};
use rand::Rng;

pub const SYSTEMS: [&str; 5] = ["luroth", "engel", "engel-mod", "pierce", "oppenheim:2,-1"];

pub fn rule(name: &str) -> DigitRule {
    name.parse().unwrap()
}

/// `r_k` from the last digit, written out per system.
pub fn oracle_r(name: &str, prefix: &[BigUint]) -> BigUint {
    let Some(c) = prefix.last() else {
        return BigUint::one();
    };
    match name {
        "luroth" => BigUint::one(),
        "engel" => c - 1u32,
        "engel-mod" | "pierce" => c.clone(),
        "oppenheim:2,-1" => c * 2u32 - 1u32,
        other => panic!("no oracle for {other}"),
    }
}

/// Endpoints `(lo, hi)` of the rank-`n` cylinder of `word`.
///
/// Positive: `x = sum_k r_0..r_k / (prod_{i<=k} (p_i - 1) p_i * p_{k+1})`, so
/// the cylinder runs from the partial sum `S_n` up to `S_n + D_n` with
/// `D_n = r_0..r_{n-1} / prod_{i<=n} (p_i - 1) p_i`.
/// Alternating: terms `(-1)^k r_0..r_k / (prod_{i<=k} (q_i - 1) q_i * (q_{k+1} - 1))`,
/// and the cylinder runs between `S_n` and `S_n + (-1)^n D_n`.
pub fn oracle_cylinder(name: &str, word: &[BigUint], sign: Sign) -> (BigRational, BigRational) {
    // running sum kept as an unreduced fraction; reduced once at the end
    let mut sum_n = BigInt::zero();
    let mut sum_d = BigInt::one();
    let mut numer = BigUint::one(); // r_0 .. r_k
    let mut denom = BigUint::one(); // prod (p_i - 1) p_i
    for k in 0..word.len() {
        numer *= oracle_r(name, &word[..k]);
        let p = &word[k];
        let last = match sign {
            Sign::Positive => p.clone(),
            Sign::Alternating => p - 1u32,
        };
        let tn = BigInt::from(numer.clone());
        let td = BigInt::from(&denom * last);
        let tn = if sign == Sign::Alternating && k % 2 == 1 {
            -tn
        } else {
            tn
        };
        sum_n = &sum_n * &td + tn * &sum_d;
        sum_d *= td;
        denom *= (p - 1u32) * p;
    }
    let sum = BigRational::new(sum_n, sum_d);
    let d = BigRational::new(BigInt::from(numer), BigInt::from(denom));
    let other = match sign {
        Sign::Positive => &sum + &d,
        Sign::Alternating if word.len().is_multiple_of(2) => &sum + &d,
        Sign::Alternating => &sum - &d,
    };
    if sum < other {
        (sum, other)
    } else {
        (other, sum)
    }
}

pub fn q(x: &ExactQ) -> BigRational {
    x.as_big_rational().clone()
}

pub fn exact(n: i64, d: i64) -> ExactQ {
    ExactQ::new(n, d)
}

/// Uniform `p/q` with `1 <= p <= q <= max_den`.
pub fn random_unit_rational(rng: &mut impl Rng, max_den: u64) -> ExactQ {
    let d = rng.gen_range(1..=max_den);
    let n = rng.gen_range(1..=d);
    ExactQ::new(n as i64, d as i64)
}

/// Uniform `p/q` strictly inside `(0, 1)`.
pub fn random_open_rational(rng: &mut impl Rng, max_den: u64) -> ExactQ {
    let d = rng.gen_range(2..=max_den);
    let n = rng.gen_range(1..d);
    ExactQ::new(n as i64, d as i64)
}

/// A valid word of the given length: each digit is the smallest admissible
/// one plus a random offset, mostly small.
pub fn random_word(rng: &mut impl Rng, name: &str, len: usize, spread: u64) -> DigitWord {
    let mut digits: Vec<Digit> = Vec::with_capacity(len);
    for _ in 0..len {
        let r = oracle_r(name, &digits);
        let offset = if rng.gen_bool(0.7) {
            rng.gen_range(0..4)
        } else {
            rng.gen_range(0..spread)
        };
        digits.push(r + 1u32 + offset);
    }
    DigitWord::new(digits)
}

/// Bisection for `sum r_i^s = 1`, written independently of the library.
pub fn moran_oracle(ratios: &[f64]) -> f64 {
    let f = |s: f64| ratios.iter().map(|r| r.powf(s)).sum::<f64>() - 1.0;
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// `ln` of a big natural without overflowing `f64`.
pub fn ln_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 1000 {
        return num_traits::ToPrimitive::to_f64(n).unwrap().ln();
    }
    let shift = bits - 64;
    let top: BigUint = n >> shift;
    num_traits::ToPrimitive::to_f64(&top).unwrap().ln() + shift as f64 * std::f64::consts::LN_2
}

/// Whether `x` is an endpoint of some alternating child cylinder of `word`.
/// Children move monotonically as the digit grows; the child whose closed
/// hull contains `x` is found by exponential and then binary search.
pub fn is_alternating_child_endpoint(name: &str, word: &[BigUint], x: &BigRational) -> bool {
    let r = oracle_r(name, word);
    let child = |c: &BigUint| {
        let mut w = word.to_vec();
        w.push(c.clone());
        oracle_cylinder(name, &w, Sign::Alternating)
    };
    let first = &r + 1u32;
    let (a_lo, _) = child(&first);
    let (b_lo, _) = child(&(&first + 1u32));
    let down = b_lo < a_lo;
    // child `c` lies strictly before `x` in the direction children move;
    // this holds for an initial run of digits
    let passed = |c: &BigUint| {
        let (lo, hi) = child(c);
        if down {
            lo > *x
        } else {
            hi < *x
        }
    };
    let candidate = if !passed(&first) {
        first
    } else {
        let mut good = first;
        let mut step = BigUint::one();
        loop {
            let probe = &good + &step;
            if !passed(&probe) {
                break;
            }
            good = probe;
            step *= 2u32;
            if step.bits() > 4096 {
                return false;
            }
        }
        let mut bad = &good + &step;
        while &bad - &good > BigUint::one() {
            let mid: BigUint = (&good + &bad) >> 1;
            if passed(&mid) {
                good = mid;
            } else {
                bad = mid;
            }
        }
        bad
    };
    let (lo, hi) = child(&candidate);
    lo == *x || hi == *x
}
