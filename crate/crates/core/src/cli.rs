//! Command-line front end. Every subcommand prints one JSON object per
//! result line; rationals are printed as `"num/den"` strings in lowest terms.
//!
//! Exit codes: 0 on success, 2 for invalid input (parse and digit validity
//! errors), 3 for domain errors, 64 for usage errors.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Number, Value};

use crate::coverings::{
    cover_boundary, cover_interval, split_to_finite, verify_cover, BoundarySide, FamilySet,
    QInterval,
};
use crate::dimension::{measure_at_rank, moran_dimension, pressure_root, DigitPredicate};
use crate::error::PerronError;
use crate::expansion::{
    alternating_digits, cylinder, partial_sum, positive_digits, AltDigits, DigitRule, DigitWord,
    Sign,
};
use crate::rational::ExactQ;
use crate::transforms::{
    inverse_transform_digits, transform_digits, transform_point, PointImage, TransformKind,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "perron",
    version,
    about = "Exact Perron expansions, cylinder covers and dimension estimates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Kind {
    /// positive to alternating, same rule (`--system`, default luroth)
    Fp,
    /// alternating to positive, same rule
    FpInv,
    /// classical Engel to modified Engel
    T,
    /// Pierce digit shift
    G,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    /// cover (inf, cut] of the prefix cylinder
    FromInf,
    /// cover (cut, sup] of the prefix cylinder
    ToSup,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive digits of x
    Expand {
        #[arg(long)]
        system: String,
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Alternating digits of x
    AltExpand {
        #[arg(long)]
        system: String,
        #[arg(long)]
        x: String,
        #[arg(long, default_value_t = 10)]
        n: usize,
    },
    /// Partial sum of a digit word
    Eval {
        #[arg(long)]
        system: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "P")]
        sign: String,
    },
    /// Exact cylinder interval of a word
    Cylinder {
        #[arg(long)]
        system: String,
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "P")]
        sign: String,
    },
    /// Cover (lo, hi] by at most three family sets, or cover one side of a
    /// cylinder with --cut/--side
    Cover {
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "P")]
        sign: String,
        #[arg(long, required_unless_present = "cut")]
        lo: Option<String>,
        #[arg(long, required_unless_present = "cut")]
        hi: Option<String>,
        #[arg(long, requires = "side")]
        cut: Option<String>,
        #[arg(long, value_enum)]
        side: Option<Side>,
        #[arg(long, default_value = "")]
        prefix: String,
    },
    /// Split an unbounded family set into bounded blocks
    Split {
        #[arg(long)]
        system: String,
        /// family set as JSON
        #[arg(long)]
        set: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long, default_value_t = 8)]
        blocks: usize,
    },
    /// Check a cover of (lo, hi]; sets as a JSON array, from --sets or stdin
    Verify {
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "P")]
        sign: String,
        #[arg(long)]
        lo: String,
        #[arg(long)]
        hi: String,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long)]
        sets: Option<String>,
    },
    /// Map a digit word
    Transform {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "luroth")]
        system: String,
        #[arg(long)]
        inverse: bool,
    },
    /// Rank-k target cylinder containing the image of x
    TransformPoint {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        x: String,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "luroth")]
        system: String,
    },
    /// Rank-k dimension estimate
    Dim {
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "all")]
        predicate: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        cap: u64,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value = "P")]
        sign: String,
    },
    /// Similarity dimension of a ratio list
    Moran {
        /// comma-separated rationals
        #[arg(long)]
        ratios: String,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
    },
    /// Exact total length of the compatible rank-k cylinders
    Measure {
        #[arg(long)]
        system: String,
        #[arg(long, default_value = "all")]
        predicate: String,
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        cap: u64,
        #[arg(long, default_value = "P")]
        sign: String,
    },
}

/// Runs the command line with the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut out = stdout.lock();
    let mut err = stderr.lock();
    run_with(args, &mut std::io::stdin(), &mut out, &mut err)
}

/// Runs the command line against the given streams and returns the exit
/// code. `args` includes the program name.
pub fn run_with<I, T>(
    args: I,
    input: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    return EXIT_OK;
                }
                ErrorKind::ValueValidation | ErrorKind::InvalidValue => EXIT_INVALID,
                _ => EXIT_USAGE,
            };
            let _ = write!(err, "{}", e.render());
            return code;
        }
    };
    let mut lines = Vec::new();
    match execute(cli.command, input, &mut lines, err) {
        Ok(()) => {
            for line in lines {
                if writeln!(out, "{line}").is_err() {
                    return EXIT_DOMAIN;
                }
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                PerronError::Validity { .. } | PerronError::Parse(_) => EXIT_INVALID,
                PerronError::Domain(_) => EXIT_DOMAIN,
            }
        }
    }
}

type Lines = Vec<Value>;

fn execute(
    command: Command,
    input: &mut dyn Read,
    lines: &mut Lines,
    err: &mut dyn Write,
) -> crate::Result<()> {
    match command {
        Command::Expand { system, x, n } => {
            let word = positive_digits(&rule(&system)?, &rational(&x)?, n)?;
            lines.push(json!({ "digits": digits(&word) }));
        }
        Command::AltExpand { system, x, n } => {
            lines.push(
                match alternating_digits(&rule(&system)?, &rational(&x)?, n)? {
                    AltDigits::Digits(word) => {
                        json!({ "digits": digits(&word), "is_point": false })
                    }
                    AltDigits::IsPoint { rank, word } => is_point(rank, &word),
                },
            );
        }
        Command::Eval { system, word, sign } => {
            let value = partial_sum(&rule(&system)?, &parse_word(&word)?, parse_sign(&sign)?)?;
            lines.push(json!({ "value": value.to_string() }));
        }
        Command::Cylinder { system, word, sign } => {
            let c = cylinder(&rule(&system)?, &parse_word(&word)?, parse_sign(&sign)?)?;
            lines.push(json!({
                "lo": c.lo.to_string(),
                "hi": c.hi.to_string(),
                "diam": c.diameter().to_string(),
            }));
        }
        Command::Cover {
            system,
            sign,
            lo,
            hi,
            cut,
            side,
            prefix,
        } => {
            let rule = rule(&system)?;
            let sign = parse_sign(&sign)?;
            if let (Some(cut), Some(side)) = (cut, side) {
                let side = match side {
                    Side::FromInf => BoundarySide::FromInf,
                    Side::ToSup => BoundarySide::ToSup,
                };
                let cover =
                    cover_boundary(&rule, sign, &parse_word(&prefix)?, &rational(&cut)?, side)?;
                let tight: Vec<Value> = cover.tight.iter().map(FamilySet::to_json).collect();
                lines.push(json!({ "tight": tight, "single": cover.single.to_json() }));
            } else {
                let (lo, hi) = (lo.unwrap_or_default(), hi.unwrap_or_default());
                let u = QInterval::for_sign(sign, rational(&lo)?, rational(&hi)?)?;
                lines.extend(
                    cover_interval(&rule, sign, &u)?
                        .iter()
                        .map(FamilySet::to_json),
                );
            }
        }
        Command::Split {
            system,
            set,
            alpha,
            eps,
            blocks,
        } => {
            let rule = rule(&system)?;
            let fs = FamilySet::from_json(&parse_json(&set)?)?;
            let mut stream = split_to_finite(&rule, &fs, alpha, eps)?;
            for _ in 0..blocks {
                let block = stream.next().expect("split stream is infinite");
                let mut v = block.to_json();
                v["diam"] = Value::String(stream.block_diameter(&block).to_string());
                lines.push(v);
            }
            lines.push(json!({
                "s": stream.ratio_base(),
                "next": natural(stream.next_start()),
                "residue": stream.residue_diameter().to_string(),
                "residue_cost_bound": float(stream.residue_cost_bound()),
            }));
        }
        Command::Verify {
            system,
            sign,
            lo,
            hi,
            alpha,
            sets,
        } => {
            let rule = rule(&system)?;
            let sign = parse_sign(&sign)?;
            let u = QInterval::for_sign(sign, rational(&lo)?, rational(&hi)?)?;
            let text = match sets {
                Some(s) => s,
                None => {
                    let mut s = String::new();
                    input
                        .read_to_string(&mut s)
                        .map_err(|e| PerronError::Parse(format!("reading sets from stdin: {e}")))?;
                    s
                }
            };
            let sets = parse_sets(&text)?;
            let report = verify_cover(&rule, &u, &sets, alpha);
            lines.push(json!({
                "covers": report.covers,
                "max_diam": report.max_diameter.to_string(),
                "cost": float(report.cost),
                "interval_cost": float(u.diameter().powf(alpha)),
            }));
        }
        Command::Transform {
            kind,
            word,
            system,
            inverse,
        } => {
            let kind = transform_kind(kind, &system)?;
            let word = parse_word(&word)?;
            let image = if inverse {
                inverse_transform_digits(&kind, &word)?
            } else {
                transform_digits(&kind, &word)?
            };
            lines.push(json!({ "digits": digits(&image) }));
        }
        Command::TransformPoint {
            kind,
            x,
            rank,
            system,
        } => {
            let kind = transform_kind(kind, &system)?;
            lines.push(match transform_point(&kind, &rational(&x)?, rank)? {
                PointImage::Cylinder(c) => json!({
                    "digits": digits(&c.word),
                    "lo": c.lo.to_string(),
                    "hi": c.hi.to_string(),
                    "diam": c.diameter().to_string(),
                }),
                PointImage::IsPoint { rank, word } => is_point(rank, &word),
            });
        }
        Command::Dim {
            system,
            predicate,
            rank,
            cap,
            tol,
            sign,
        } => {
            let est = pressure_root(
                &rule(&system)?,
                parse_sign(&sign)?,
                &predicate.parse::<DigitPredicate>()?,
                rank,
                cap,
                tol,
            )?;
            if est.cap_too_small() {
                let _ = writeln!(
                    err,
                    "warning: cap {cap} left {} prefixes without admissible digits",
                    est.dead_ends
                );
            }
            lines.push(json!({
                "s": float(est.s_value),
                "rank": est.rank,
                "cap": est.digit_cap,
                "residual": float(est.residual),
                "bases": est.bases_count,
            }));
        }
        Command::Moran { ratios, tol } => {
            let ratios = ratios
                .split(',')
                .map(rational)
                .collect::<crate::Result<Vec<_>>>()?;
            lines.push(json!({ "s": float(moran_dimension(&ratios, tol)?) }));
        }
        Command::Measure {
            system,
            predicate,
            rank,
            cap,
            sign,
        } => {
            let m = measure_at_rank(
                &rule(&system)?,
                parse_sign(&sign)?,
                &predicate.parse::<DigitPredicate>()?,
                rank,
                cap,
            )?;
            lines.push(json!({ "measure": m.to_string() }));
        }
    }
    Ok(())
}

fn rule(system: &str) -> crate::Result<DigitRule> {
    system.parse()
}

fn rational(text: &str) -> crate::Result<ExactQ> {
    text.trim().parse()
}

fn parse_word(text: &str) -> crate::Result<DigitWord> {
    text.parse()
}

fn parse_sign(text: &str) -> crate::Result<Sign> {
    text.parse()
}

fn parse_json(text: &str) -> crate::Result<Value> {
    serde_json::from_str(text).map_err(|e| PerronError::Parse(format!("invalid JSON: {e}")))
}

fn parse_sets(text: &str) -> crate::Result<Vec<FamilySet>> {
    match parse_json(text)? {
        Value::Array(items) => items.iter().map(FamilySet::from_json).collect(),
        other => Err(PerronError::Parse(format!(
            "expected a JSON array of family sets, got {other}"
        ))),
    }
}

fn transform_kind(kind: Kind, system: &str) -> crate::Result<TransformKind> {
    Ok(match kind {
        Kind::Fp => TransformKind::Fp(rule(system)?),
        Kind::FpInv => TransformKind::FpInverse(rule(system)?),
        Kind::T => TransformKind::TEngel,
        Kind::G => TransformKind::GPierce,
    })
}

fn natural(d: &crate::Digit) -> Value {
    Value::Number(d.to_string().parse::<Number>().expect("decimal natural"))
}

fn digits(word: &DigitWord) -> Value {
    Value::Array(word.iter().map(natural).collect())
}

fn is_point(rank: usize, word: &DigitWord) -> Value {
    json!({ "digits": digits(word), "is_point": true, "rank": rank })
}

fn float(v: f64) -> Value {
    Number::from_f64(v)
        .map(Value::Number)
        .unwrap_or(Value::Null)
}
