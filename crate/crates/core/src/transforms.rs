//! Digit transformations between expansions.
//!
//! - `Fp`: same digits, read as an alternating instead of a positive
//!   expansion of the same rule. Cylinder diameters are unchanged.
//! - `TEngel`: classical Engel digits `c_n` to modified Engel digits
//!   `c_n + n - 1`.
//! - `GPierce`: Pierce digits (Perron notation) shifted up by one.
//!
//! Images of points are generally irrational, so points are mapped to the
//! exact target cylinder of a chosen rank rather than to a number.

use crate::error::{PerronError, Result};
use crate::expansion::{
    alternating_digits, cylinder, cylinder_diameter, positive_digits, AltDigits, CylinderInterval,
    Digit, DigitRule, DigitWord, Sign,
};
use crate::rational::ExactQ;

#[derive(Clone, Debug)]
pub enum TransformKind {
    /// Positive to alternating expansion with the same rule.
    Fp(DigitRule),
    /// Alternating back to positive expansion with the same rule.
    FpInverse(DigitRule),
    /// Classical Engel to modified Engel.
    TEngel,
    /// Pierce digit shift `q_n -> q_n + 1`.
    GPierce,
}

impl TransformKind {
    /// Rule and sign of the source expansion.
    pub fn source(&self) -> (DigitRule, Sign) {
        match self {
            TransformKind::Fp(rule) => (rule.clone(), Sign::Positive),
            TransformKind::FpInverse(rule) => (rule.clone(), Sign::Alternating),
            TransformKind::TEngel => (DigitRule::engel(), Sign::Positive),
            TransformKind::GPierce => (DigitRule::pierce(), Sign::Alternating),
        }
    }

    /// Rule and sign of the target expansion.
    pub fn target(&self) -> (DigitRule, Sign) {
        match self {
            TransformKind::Fp(rule) => (rule.clone(), Sign::Alternating),
            TransformKind::FpInverse(rule) => (rule.clone(), Sign::Positive),
            TransformKind::TEngel => (DigitRule::engel_mod(), Sign::Positive),
            TransformKind::GPierce => (DigitRule::pierce(), Sign::Alternating),
        }
    }
}

/// Maps a source word to the target word. The source word must be valid for
/// the source rule.
pub fn transform_digits(kind: &TransformKind, word: &DigitWord) -> Result<DigitWord> {
    let (rule, _) = kind.source();
    rule.validate_word(word)?;
    Ok(match kind {
        TransformKind::Fp(_) | TransformKind::FpInverse(_) => word.clone(),
        TransformKind::TEngel => word
            .iter()
            .enumerate()
            .map(|(i, c)| c + i)
            .collect::<Vec<Digit>>()
            .into(),
        TransformKind::GPierce => word.iter().map(|c| c + 1u32).collect::<Vec<Digit>>().into(),
    })
}

/// Inverse digit map: takes a target word back to its unique source word.
pub fn inverse_transform_digits(kind: &TransformKind, word: &DigitWord) -> Result<DigitWord> {
    let (target_rule, _) = kind.target();
    target_rule.validate_word(word)?;
    let source: DigitWord = match kind {
        TransformKind::Fp(_) | TransformKind::FpInverse(_) => word.clone(),
        TransformKind::TEngel => word
            .iter()
            .enumerate()
            .map(|(i, c)| c - i)
            .collect::<Vec<Digit>>()
            .into(),
        TransformKind::GPierce => word.iter().map(|c| c - 1u32).collect::<Vec<Digit>>().into(),
    };
    let (source_rule, _) = kind.source();
    source_rule.validate_word(&source)?;
    Ok(source)
}

/// Image of a point under a digit transformation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointImage {
    /// Target cylinder of the requested rank that contains the image.
    Cylinder(CylinderInterval),
    /// The source point is an alternating cylinder endpoint; its digits stop
    /// before the requested rank.
    IsPoint { rank: usize, word: DigitWord },
}

/// Rank-`rank` target cylinder containing the image of `x`. Its width tends
/// to zero as the rank grows.
pub fn transform_point(kind: &TransformKind, x: &ExactQ, rank: usize) -> Result<PointImage> {
    if rank == 0 {
        return Err(PerronError::domain("rank must be at least 1"));
    }
    let (src_rule, src_sign) = kind.source();
    let source_word = match src_sign {
        Sign::Positive => positive_digits(&src_rule, x, rank)?,
        Sign::Alternating => match alternating_digits(&src_rule, x, rank)? {
            AltDigits::Digits(w) => w,
            AltDigits::IsPoint { rank, word } => return Ok(PointImage::IsPoint { rank, word }),
        },
    };
    let image = transform_digits(kind, &source_word)?;
    let (dst_rule, dst_sign) = kind.target();
    Ok(PointImage::Cylinder(cylinder(&dst_rule, &image, dst_sign)?))
}

/// `|Δ^{Emod}_{T(w)}| / |Δ^{E}_{w}|` for an Engel word `w`; always in `(0, 2)`.
pub fn t_ratio(word: &DigitWord) -> Result<ExactQ> {
    let engel = DigitRule::engel();
    engel.validate_word(word)?;
    if word.is_empty() {
        return Ok(ExactQ::one());
    }
    let image = transform_digits(&TransformKind::TEngel, word)?;
    let target = cylinder_diameter(&DigitRule::engel_mod(), &image)?;
    let source = cylinder_diameter(&engel, word)?;
    Ok(target / source)
}
