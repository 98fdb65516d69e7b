//! Line-oriented text format for moment and cumulant tables.
//!
//! ```text
//! # family 1 left: a b
//! # family 1 right: c
//! # star: yes
//! # degree: 4
//! () : 1
//! 1.a : 1/2
//! 1.a 1.c* : 0 + 1/3 i
//! ```
//!
//! Cumulant tables carry `# kind: cumulants` and have no `()` line. Entries
//! are emitted in graded-lex order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ncalg::distribution::{CumulantTable, Distribution};
use crate::ncalg::scalar::Coefficient;
use crate::ncalg::signature::{FaceSignature, Family};
use crate::ncalg::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Moments,
    Cumulants,
}

/// Header of a table file: signature, degree and kind.
#[derive(Clone, Debug)]
pub struct Header {
    pub signature: FaceSignature,
    pub degree: usize,
    pub kind: TableKind,
}

pub(crate) fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_rational(tok: &str, line: usize) -> Result<BigRational> {
    let tok = tok.trim();
    let (n, d) = match tok.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (tok, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| perr(line, format!("malformed rational {tok:?}")))?;
    let d: BigInt = d.parse().map_err(|_| perr(line, format!("malformed rational {tok:?}")))?;
    if d.is_zero() {
        return Err(perr(line, format!("zero denominator in {tok:?}")));
    }
    Ok(BigRational::new(n, d))
}

/// `p/q`, `p/q + r/s i`, `p/q - r/s i` or `r/s i`.
pub fn parse_scalar<S: Coefficient>(text: &str, line: usize) -> Result<S> {
    let t = text.trim();
    let (re, im) = match t.strip_suffix('i') {
        None => (parse_rational(t, line)?, BigRational::zero()),
        Some(body) => {
            let body = body.trim_end();
            if let Some(pos) = body.rfind(" + ") {
                (parse_rational(&body[..pos], line)?, parse_rational(&body[pos + 3..], line)?)
            } else if let Some(pos) = body.rfind(" - ") {
                (parse_rational(&body[..pos], line)?, -parse_rational(&body[pos + 3..], line)?)
            } else {
                (BigRational::zero(), parse_rational(body, line)?)
            }
        }
    };
    S::from_parts(&re, &im)
        .ok_or_else(|| perr(line, format!("value {t:?} is not representable in this field")))
}

pub fn format_scalar<S: Coefficient>(v: &S) -> String {
    let (re, im) = v.to_parts();
    if im.is_zero() {
        re.to_string()
    } else if im.is_negative() {
        format!("{re} - {} i", -im)
    } else {
        format!("{re} + {im} i")
    }
}

pub fn parse_word(sig: &FaceSignature, text: &str, line: usize) -> Result<Word> {
    let t = text.trim();
    if t == "()" {
        return Ok(Word::empty());
    }
    t.split_whitespace()
        .map(|tok| {
            sig.parse_letter(tok)
                .ok_or_else(|| perr(line, format!("unknown letter {tok:?}")))
        })
        .collect::<Result<Vec<_>>>()
        .map(Word)
}

/// Parses the `#` header lines. Unrecognized `#` lines are comments.
pub fn parse_header(text: &str) -> Result<Header> {
    let (signature, degree, kind) = parse_preamble(text)?;
    let degree = degree.ok_or_else(|| perr(0, "missing `# degree:` header"))?;
    Ok(Header { signature, degree, kind })
}

type Faces = (Option<Vec<String>>, Option<Vec<String>>);

/// Family, star, degree and kind declarations; the degree is optional.
pub(crate) fn parse_preamble(text: &str) -> Result<(FaceSignature, Option<usize>, TableKind)> {
    let mut families: BTreeMap<u32, Faces> = BTreeMap::new();
    let mut star = None;
    let mut degree = None;
    let mut kind = TableKind::Moments;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let Some(rest) = raw.trim().strip_prefix('#') else { continue };
        let Some((key, value)) = rest.split_once(':') else { continue };
        let key: Vec<&str> = key.split_whitespace().collect();
        let value = value.trim();
        match key.as_slice() {
            ["family", id, side @ ("left" | "right")] => {
                let id: u32 = id.parse().map_err(|_| perr(line, format!("bad family id {id:?}")))?;
                let names: Vec<String> = value.split_whitespace().map(String::from).collect();
                let entry = families.entry(id).or_insert((None, None));
                let slot = if *side == "left" { &mut entry.0 } else { &mut entry.1 };
                if slot.replace(names).is_some() {
                    return Err(perr(line, format!("family {id} {side} face declared twice")));
                }
            }
            ["star"] => {
                star = Some(match value {
                    "yes" => true,
                    "no" => false,
                    _ => return Err(perr(line, format!("star must be yes or no, got {value:?}"))),
                })
            }
            ["degree"] => {
                let d: usize = value
                    .parse()
                    .map_err(|_| perr(line, format!("bad degree {value:?}")))?;
                degree = Some(d);
            }
            ["kind"] => {
                kind = match value {
                    "moments" => TableKind::Moments,
                    "cumulants" => TableKind::Cumulants,
                    _ => return Err(perr(line, format!("unknown kind {value:?}"))),
                }
            }
            _ => {}
        }
    }
    let fams = families
        .into_iter()
        .map(|(id, (l, r))| Family { id, left: l.unwrap_or_default(), right: r.unwrap_or_default() })
        .collect();
    let signature = FaceSignature::new(fams, star.unwrap_or(false))?;
    Ok((signature, degree, kind))
}

fn parse_entries<S: Coefficient>(text: &str, header: &Header) -> Result<BTreeMap<Word, S>> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let (w, v) = t
            .split_once(':')
            .ok_or_else(|| perr(line, "expected `word : value`"))?;
        let word = parse_word(&header.signature, w, line)?;
        if word.degree() > header.degree {
            return Err(perr(line, format!("word exceeds declared degree {}", header.degree)));
        }
        if header.kind == TableKind::Cumulants && word.is_empty() {
            return Err(perr(line, "cumulant tables have no entry for ()"));
        }
        let value: S = parse_scalar(v, line)?;
        if word.is_empty() && !value.is_one() {
            return Err(Error::Normalization { value: format_scalar(&value) });
        }
        if map.insert(word, value).is_some() {
            return Err(perr(line, "duplicate entry"));
        }
    }
    Ok(map)
}

/// Parses a moment table, checking totality and `μ(()) = 1`.
pub fn parse_distribution<S: Coefficient>(text: &str) -> Result<Distribution<S>> {
    let header = parse_header(text)?;
    if header.kind != TableKind::Moments {
        return Err(perr(0, "expected a moment table, found `# kind: cumulants`"));
    }
    let map = parse_entries(text, &header)?;
    Distribution::from_map(header.signature, header.degree, map)
}

pub fn parse_cumulants<S: Coefficient>(text: &str) -> Result<CumulantTable<S>> {
    let header = parse_header(text)?;
    if header.kind != TableKind::Cumulants {
        return Err(perr(0, "expected `# kind: cumulants`"));
    }
    let map = parse_entries(text, &header)?;
    CumulantTable::from_map(header.signature, header.degree, map)
}

fn emit_header(out: &mut String, sig: &FaceSignature, degree: usize, kind: TableKind) {
    write!(out, "{sig}").unwrap();
    writeln!(out, "# degree: {degree}").unwrap();
    if kind == TableKind::Cumulants {
        writeln!(out, "# kind: cumulants").unwrap();
    }
}

pub fn emit_distribution<S: Coefficient>(mu: &Distribution<S>) -> String {
    let mut out = String::new();
    emit_header(&mut out, mu.signature(), mu.degree(), TableKind::Moments);
    for (w, v) in mu.iter() {
        writeln!(out, "{} : {}", w.label(mu.signature()), format_scalar(v)).unwrap();
    }
    out
}

pub fn emit_cumulants<S: Coefficient>(r: &CumulantTable<S>) -> String {
    let mut out = String::new();
    emit_header(&mut out, r.signature(), r.degree(), TableKind::Cumulants);
    for (w, v) in r.iter() {
        writeln!(out, "{} : {}", w.label(r.signature()), format_scalar(v)).unwrap();
    }
    out
}
