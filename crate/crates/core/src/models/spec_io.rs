//! Text formats for covariance and vector specifications.
//!
//! Both start with the signature lines of the table format. A covariance
//! file then lists every ordered pair of letters:
//!
//! ```text
//! # family 1 left: a
//! # family 1 right: b
//! # star: no
//! 1.a 1.a : 1
//! 1.a 1.b : 1/2
//! 1.b 1.a : 1/2
//! 1.b 1.b : 2
//! ```
//!
//! A vector file declares `# dim: n` and gives `h(k)` and `h*(k)` as rows:
//!
//! ```text
//! # dim: 2
//! 1.a : 1 0
//! 1.a* : 1 0
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::models::covariance::CovarianceSpec;
use crate::models::fock::VectorSpec;
use crate::ncalg::format::{format_scalar, parse_preamble, parse_scalar, perr};
use crate::ncalg::{Coefficient, Letter};

fn entries(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_covariance<S: Coefficient>(text: &str) -> Result<CovarianceSpec<S>> {
    let (sig, _, _) = parse_preamble(text)?;
    let n = sig.alphabet().len();
    let mut rows: Vec<Vec<Option<S>>> = vec![vec![None; n]; n];
    for (line, t) in entries(text) {
        let (pair, value) = t.split_once(':').ok_or_else(|| perr(line, "expected `x y : value`"))?;
        let toks: Vec<&str> = pair.split_whitespace().collect();
        let [x, y] = toks.as_slice() else {
            return Err(perr(line, "expected exactly two letters before `:`"));
        };
        let code = |tok: &str| {
            sig.parse_letter(tok)
                .and_then(|l| sig.letter_code(&l))
                .ok_or_else(|| perr(line, format!("unknown letter {tok:?}")))
        };
        let (i, j) = (code(x)?, code(y)?);
        if rows[i][j].replace(parse_scalar(value, line)?).is_some() {
            return Err(perr(line, "duplicate entry"));
        }
    }
    let alpha = sig.alphabet();
    let mut full = Vec::with_capacity(n);
    for (i, row) in rows.into_iter().enumerate() {
        let mut out = Vec::with_capacity(n);
        for (j, v) in row.into_iter().enumerate() {
            out.push(v.ok_or_else(|| Error::Incomplete {
                word: format!("{} {}", sig.letter_label(&alpha[i]), sig.letter_label(&alpha[j])),
            })?);
        }
        full.push(out);
    }
    CovarianceSpec::new(sig, full)
}

pub fn emit_covariance<S: Coefficient>(c: &CovarianceSpec<S>) -> String {
    let sig = c.signature();
    let mut out = format!("{sig}");
    for (i, x) in sig.alphabet().iter().enumerate() {
        for (j, y) in sig.alphabet().iter().enumerate() {
            let (lx, ly) = (sig.letter_label(x), sig.letter_label(y));
            writeln!(out, "{lx} {ly} : {}", format_scalar(c.entry(i, j))).unwrap();
        }
    }
    out
}

pub fn parse_vectors<S: Coefficient>(text: &str) -> Result<VectorSpec<S>> {
    let (sig, _, _) = parse_preamble(text)?;
    let mut dim = None;
    for (i, raw) in text.lines().enumerate() {
        if let Some(v) = raw.trim().strip_prefix('#').and_then(|r| r.trim().strip_prefix("dim:")) {
            let v = v.trim();
            dim = Some(v.parse::<usize>().map_err(|_| perr(i + 1, format!("bad dimension {v:?}")))?);
        }
    }
    let dim = dim.ok_or_else(|| perr(0, "missing `# dim:` header"))?;
    let mut plain: BTreeMap<Letter, Vec<S>> = BTreeMap::new();
    let mut starred: BTreeMap<Letter, Vec<S>> = BTreeMap::new();
    for (line, t) in entries(text) {
        let (key, row) = t.split_once(':').ok_or_else(|| perr(line, "expected `k : v1 v2 ...`"))?;
        let key = key.trim();
        let (name, star) = match key.strip_suffix('*') {
            Some(k) => (k, true),
            None => (key, false),
        };
        let (fam, idx) = name.split_once('.').ok_or_else(|| perr(line, format!("bad index {key:?}")))?;
        let letter = fam
            .parse::<u32>()
            .ok()
            .and_then(|f| sig.letter(f, idx))
            .ok_or_else(|| perr(line, format!("unknown index {key:?}")))?;
        let v = row
            .split_whitespace()
            .map(|tok| parse_scalar::<S>(tok, line))
            .collect::<Result<Vec<_>>>()?;
        if v.len() != dim {
            return Err(perr(line, format!("expected {dim} coordinates, got {}", v.len())));
        }
        let slot = if star { &mut starred } else { &mut plain };
        if slot.insert(letter, v).is_some() {
            return Err(perr(line, "duplicate entry"));
        }
    }
    let mut vectors = BTreeMap::new();
    for (l, h) in plain {
        let hs = starred.remove(&l).ok_or_else(|| Error::Incomplete {
            word: format!("{}*", sig.letter_label(&l)),
        })?;
        vectors.insert(l, (h, hs));
    }
    if let Some(l) = starred.keys().next() {
        return Err(Error::Incomplete { word: sig.letter_label(l) });
    }
    VectorSpec::new(sig, dim, vectors)
}

pub fn emit_vectors<S: Coefficient>(spec: &VectorSpec<S>) -> String {
    let sig = spec.signature();
    let mut out = format!("{sig}# dim: {}\n", spec.dim());
    for l in sig.alphabet().iter().filter(|l| !l.star) {
        let label = sig.letter_label(l);
        for (suffix, v) in [("", spec.h(l)), ("*", spec.h_star(l))] {
            let row: Vec<String> = v.unwrap_or_default().iter().map(format_scalar).collect();
            writeln!(out, "{label}{suffix} : {}", row.join(" ")).unwrap();
        }
    }
    out
}
