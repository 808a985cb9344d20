use crate::expansion::DigitRule;
use crate::rational::ExactQ;

use super::family::{FamilySet, QInterval};

/// Result of checking a cover against an interval.
#[derive(Clone, Debug, PartialEq)]
pub struct CoverReport {
    pub covers: bool,
    pub max_diameter: ExactQ,
    /// `sum |M|^alpha`, evaluated in `f64` from exact diameters with
    /// compensated summation; relative error is a few ulps per term.
    pub cost: f64,
}

/// Neumaier-compensated sum.
pub fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// `sum |d|^alpha` over exact diameters.
pub fn alpha_cost<'a>(diameters: impl IntoIterator<Item = &'a ExactQ>, alpha: f64) -> f64 {
    compensated_sum(diameters.into_iter().map(|d| d.powf(alpha)))
}

/// Checks that the hulls of `sets` cover `u` and reports the largest
/// diameter and the α-cost.
///
/// Coverage is decided on hulls with shared endpoints glued together. For
/// positive sets the hulls are `(a, b]`, so this is exact. For alternating
/// sets the hulls are open and the glued endpoints are cylinder endpoints,
/// which belong to no alternating cylinder and are exempt. Sets that are not
/// valid for `rule` make the report fail coverage but are otherwise skipped.
pub fn verify_cover(
    rule: &DigitRule,
    u: &QInterval,
    sets: &[FamilySet],
    alpha: f64,
) -> CoverReport {
    let mut hulls = Vec::with_capacity(sets.len());
    let mut diameters = Vec::with_capacity(sets.len());
    let mut all_valid = true;
    for fs in sets {
        match fs.hull(rule) {
            Ok(h) => {
                diameters.push(h.diameter());
                hulls.push(h);
            }
            Err(_) => all_valid = false,
        }
    }
    let max_diameter = diameters.iter().cloned().max().unwrap_or_else(ExactQ::zero);
    let cost = alpha_cost(diameters.iter(), alpha);

    hulls.sort_by(|a, b| a.lo.cmp(&b.lo));
    let mut covers = false;
    let mut current: Option<(ExactQ, ExactQ)> = None;
    for h in hulls {
        current = match current {
            Some((lo, hi)) if h.lo <= hi => Some((lo, hi.max(h.hi))),
            Some((lo, hi)) => {
                covers |= lo <= u.lo && hi >= u.hi;
                Some((h.lo, h.hi))
            }
            None => Some((h.lo, h.hi)),
        };
    }
    if let Some((lo, hi)) = current {
        covers |= lo <= u.lo && hi >= u.hi;
    }
    CoverReport {
        covers: covers && all_valid,
        max_diameter,
        cost,
    }
}
