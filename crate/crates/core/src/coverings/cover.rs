//! Constructive covers of intervals by family sets.
//!
//! All case analysis runs in the local coordinate `t` of a cylinder chart,
//! where every cylinder looks alike: child `c` occupies `(r/c, r/(c-1))`,
//! child `r+1` touches `t = 1` and the children accumulate at `t = 0`. The
//! sign of the expansion only decides how a child's own chart is oriented,
//! which is what flips the boundary case when descending into an alternating
//! cylinder of the other parity.
//!
//! Two facts drive every size bound below: a child is never larger than the
//! union of all children after it, and the first child `r+1` is larger than
//! any other child.

use crate::error::{PerronError, Result};
use crate::expansion::cylinder::Chart;
use crate::expansion::{Digit, DigitRule, DigitWord, Sign};
use crate::rational::ExactQ;

use super::family::{End, FamilySet, QInterval};

/// Which part of a cylinder a boundary cover must cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundarySide {
    /// `(inf, cut]`.
    FromInf,
    /// `(cut, sup]`.
    ToSup,
}

/// The two covers of a piece of a cylinder that touches one of its ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryCover {
    /// At most two sets, each no larger than the piece.
    pub tight: Vec<FamilySet>,
    /// One set, at most twice the piece.
    pub single: FamilySet,
}

/// A piece of a chart's unit interval, touching one end.
#[derive(Clone, Debug)]
enum Piece {
    /// `(0, b)` with `0 < b <= 1`.
    FromZero(ExactQ),
    /// `(a, 1)` with `0 <= a < 1`.
    ToOne(ExactQ),
}

#[derive(Clone, Debug)]
struct Sized {
    set: FamilySet,
    diam: ExactQ,
}

#[derive(Clone, Debug)]
struct PieceCover {
    tight: Vec<Sized>,
    single: Sized,
}

impl PieceCover {
    fn exact(s: Sized) -> Self {
        PieceCover {
            tight: vec![s.clone()],
            single: s,
        }
    }

    fn options(&self) -> Vec<Vec<Sized>> {
        if self.tight.len() == 1 {
            vec![self.tight.clone()]
        } else {
            vec![vec![self.single.clone()], self.tight.clone()]
        }
    }

    fn into_public(self) -> BoundaryCover {
        BoundaryCover {
            tight: self.tight.into_iter().map(|s| s.set).collect(),
            single: self.single.set,
        }
    }
}

/// Children `start..=end` of `chart`, with the exact diameter.
fn block(chart: &Chart, sign: Sign, start: &Digit, end: Option<&Digit>) -> Sized {
    let factor = chart.diameter() * ExactQ::from_natural(&chart.next_r);
    let below = ExactQ::from_natural(&(start - 1u32)).recip();
    let (end, diam) = match end {
        Some(e) => (
            End::Digit(e.clone()),
            factor * (below - ExactQ::from_natural(e).recip()),
        ),
        None => (End::Unbounded, factor * below),
    };
    Sized {
        set: FamilySet::new(sign, chart.word.clone(), start.clone(), end),
        diam,
    }
}

fn natural_floor(q: &ExactQ) -> Digit {
    q.floor().to_biguint().expect("nonnegative")
}

fn natural_ceil(q: &ExactQ) -> Digit {
    q.ceil().to_biguint().expect("nonnegative")
}

/// Local coordinate inside child `c` of a point given in the parent's local
/// coordinate.
fn into_child(chart: &Chart, sign: Sign, c: &Digit, t: &ExactQ) -> ExactQ {
    let (offset, scale) = chart.child_map(sign, c);
    (t - offset) / scale
}

fn cover_piece(
    rule: &DigitRule,
    sign: Sign,
    mut chart: Chart,
    mut piece: Piece,
) -> Result<PieceCover> {
    loop {
        let r_nat = chart.next_r.clone();
        let r = ExactQ::from_natural(&r_nat);
        let first: Digit = &r_nat + 1u32;
        match piece {
            Piece::FromZero(b) => {
                // child c holds the points just below b: r/c < b <= r/(c-1)
                let c: Digit = natural_floor(&(&r / &b)) + 1u32;
                let top = &r / ExactQ::from_natural(&(&c - 1u32));
                if b == top {
                    return Ok(PieceCover::exact(block(&chart, sign, &c, None)));
                }
                let next: Digit = &c + 1u32;
                return Ok(PieceCover {
                    tight: vec![
                        block(&chart, sign, &next, None),
                        block(&chart, sign, &c, Some(&c)),
                    ],
                    single: block(&chart, sign, &c, None),
                });
            }
            Piece::ToOne(a) => {
                if a.is_zero() {
                    return Ok(PieceCover::exact(block(&chart, sign, &first, None)));
                }
                // child c holds the points just above a: r/c <= a < r/(c-1)
                let c = natural_ceil(&(&r / &a));
                if a == &r / ExactQ::from_natural(&c) {
                    return Ok(PieceCover::exact(block(&chart, sign, &first, Some(&c))));
                }
                if c == first {
                    // The piece sits inside the first child; descend.
                    let local = into_child(&chart, sign, &c, &a);
                    let (_, scale) = chart.child_map(sign, &c);
                    piece = if scale.is_positive() {
                        Piece::ToOne(local)
                    } else {
                        Piece::FromZero(local)
                    };
                    chart = chart.child(rule, sign, &c)?;
                    continue;
                }
                let before: Digit = &c - 1u32;
                return Ok(PieceCover {
                    tight: vec![
                        block(&chart, sign, &first, Some(&before)),
                        block(&chart, sign, &c, Some(&c)),
                    ],
                    single: block(&chart, sign, &first, Some(&c)),
                });
            }
        }
    }
}

/// Covers `(inf, cut]` or `(cut, sup]` of the cylinder `prefix` (open ends
/// for alternating cylinders). Returns both the tight variant (at most two
/// sets, each no larger than the piece) and the single-set variant (at most
/// twice the piece).
pub fn cover_boundary(
    rule: &DigitRule,
    sign: Sign,
    prefix: &DigitWord,
    cut: &ExactQ,
    side: BoundarySide,
) -> Result<BoundaryCover> {
    let chart = Chart::of_word(rule, sign, prefix)?;
    let (lo, hi) = (chart.lo(), chart.hi());
    let in_range = match side {
        BoundarySide::FromInf => *cut > lo && *cut <= hi,
        BoundarySide::ToSup => *cut >= lo && *cut < hi,
    };
    if !in_range {
        return Err(PerronError::domain(format!(
            "cut {cut} is outside the admissible range of cylinder ({lo}, {hi}]"
        )));
    }
    let t = chart.to_local(cut);
    let increasing = chart.increasing();
    let piece = match (side, increasing) {
        (BoundarySide::FromInf, true) | (BoundarySide::ToSup, false) => Piece::FromZero(t),
        (BoundarySide::ToSup, true) | (BoundarySide::FromInf, false) => Piece::ToOne(t),
    };
    Ok(cover_piece(rule, sign, chart, piece)?.into_public())
}

/// Covers `U` by at most three family sets, each of diameter at most `|U|`.
///
/// For positive expansions `U = (x1, x2]`; for alternating ones the cover is
/// of `(x1, x2)` minus cylinder endpoints. The search descends to the
/// smallest cylinder containing `U`, splits `U` into the pieces inside the
/// two extreme children plus the run of whole children between them, and
/// picks the cheapest admissible combination of tight, single and merged
/// covers (fewest sets first, then smallest total length).
pub fn cover_interval(rule: &DigitRule, sign: Sign, u: &QInterval) -> Result<Vec<FamilySet>> {
    if u.lo.is_negative() || u.hi > ExactQ::one() || u.lo >= u.hi {
        return Err(PerronError::domain(format!(
            "interval {u} is not a nonempty subset of (0, 1]"
        )));
    }
    let target = u.diameter();
    let mut chart = Chart::root(rule);
    let (mut u1, mut u2) = (u.lo.clone(), u.hi.clone());
    loop {
        if u1.is_zero() && u2 == ExactQ::one() {
            return Ok(vec![block(&chart, sign, &(&chart.next_r + 1u32), None).set]);
        }
        let r = ExactQ::from_natural(&chart.next_r);
        // child holding the points just below u2, and just above u1
        let cb: Digit = natural_floor(&(&r / &u2)) + 1u32;
        let ca: Option<Digit> = (!u1.is_zero()).then(|| natural_ceil(&(&r / &u1)));

        if ca.as_ref() == Some(&cb) {
            let a = into_child(&chart, sign, &cb, &u1);
            let b = into_child(&chart, sign, &cb, &u2);
            (u1, u2) = if a < b { (a, b) } else { (b, a) };
            chart = chart.child(rule, sign, &cb)?;
            continue;
        }

        let oriented = |c: &Digit, t: ExactQ, toward_zero: bool| -> Piece {
            let (_, scale) = chart.child_map(sign, c);
            // `toward_zero`: the piece runs from the child's low-t end in the parent
            if scale.is_positive() == toward_zero {
                Piece::FromZero(t)
            } else {
                Piece::ToOne(t)
            }
        };

        let b_child = chart.child(rule, sign, &cb)?;
        let b_piece = oriented(&cb, into_child(&chart, sign, &cb, &u2), true);
        let n2 = cover_piece(rule, sign, b_child, b_piece)?;

        let n1 = match &ca {
            Some(ca) => {
                let a_child = chart.child(rule, sign, ca)?;
                let a_piece = oriented(ca, into_child(&chart, sign, ca, &u1), false);
                Some(cover_piece(rule, sign, a_child, a_piece)?)
            }
            None => None,
        };

        let after_b: Digit = &cb + 1u32;
        let middle = match &ca {
            None => Some(block(&chart, sign, &after_b, None)),
            Some(ca) if *ca > after_b => Some(block(&chart, sign, &after_b, Some(&(ca - 1u32)))),
            Some(_) => None,
        };

        let mut candidates: Vec<Vec<Sized>> = Vec::new();
        let n1_options = n1
            .as_ref()
            .map_or_else(|| vec![Vec::new()], PieceCover::options);
        for o1 in &n1_options {
            for o2 in n2.options() {
                let mut c: Vec<Sized> = middle.iter().cloned().collect();
                c.extend(o1.iter().cloned());
                c.extend(o2);
                candidates.push(c);
            }
        }
        if let Some(ca) = &ca {
            // middle run merged with the whole of the smaller extreme child
            let merged = block(&chart, sign, &after_b, Some(ca));
            for o2 in n2.options() {
                let mut c = vec![merged.clone()];
                c.extend(o2);
                candidates.push(c);
            }
            let merged = block(&chart, sign, &cb, Some(&(ca - 1u32)));
            for o1 in &n1_options {
                let mut c = vec![merged.clone()];
                c.extend(o1.iter().cloned());
                candidates.push(c);
            }
            candidates.push(vec![block(&chart, sign, &cb, Some(ca))]);
        }

        let best = candidates
            .into_iter()
            .filter(|c| c.iter().all(|s| s.diam <= target))
            .min_by(|x, y| {
                let total = |c: &[Sized]| c.iter().fold(ExactQ::zero(), |acc, s| acc + &s.diam);
                x.len().cmp(&y.len()).then_with(|| total(x).cmp(&total(y)))
            });
        return match best {
            Some(c) if c.len() <= 3 => Ok(c.into_iter().map(|s| s.set).collect()),
            _ => Err(PerronError::domain(format!(
                "no admissible cover found for {u} (this indicates a bug)"
            ))),
        };
    }
}
