//! Central limit harness: `S_N = N^{-1/2} Σ_{n<=N} z^{(n)}` for bi-free
//! identically distributed copies, against the Gaussian limit `γ_C`.

use std::fmt::Write as _;

use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::convolve::bifree_sum;
use crate::cumulant::{cumulants_from_moments, dilate, dilate_cumulants, moments_from_cumulants};
use crate::error::{Error, Result};
use crate::models::{gaussian_dist, CovarianceSpec};
use crate::ncalg::format::format_scalar;
use crate::ncalg::scalar::rational_to_decimal;
use crate::ncalg::{Coefficient, CumulantTable, Distribution, Word};

fn square_root(n: u64) -> Result<u64> {
    let s = n.sqrt();
    if n == 0 || s * s != n {
        return Err(Error::Domain(format!("N = {n} is not a positive perfect square")));
    }
    Ok(s)
}

fn check_centered<S: Coefficient>(mu: &Distribution<S>) -> Result<()> {
    let n = mu.signature().alphabet().len();
    if let Some((w, _)) = mu.iter().skip(1).take(n).find(|(_, v)| !v.is_zero()) {
        return Err(Error::Precondition(format!(
            "summands must be centered, but the mean of {} is nonzero",
            w.label(mu.signature())
        )));
    }
    Ok(())
}

fn scaled_cumulants<S: Coefficient>(r: &CumulantTable<S>, n: u64) -> Result<CumulantTable<S>> {
    let s = square_root(n)?;
    let inv = S::one() / S::from_integer(s as i64);
    let dilated = dilate_cumulants(r, &inv)?;
    let values = dilated.values().iter().map(|v| v.clone() * S::from_integer(n as i64)).collect();
    CumulantTable::from_values(r.signature().clone(), r.degree(), values)
}

/// Law of `S_N` to degree `d`, through `R_w(S_N) = N^{1-|w|/2} R_w(μ)`.
pub fn scaled_sum_dist<S: Coefficient>(mu: &Distribution<S>, n: u64, d: usize) -> Result<Distribution<S>> {
    check_centered(mu)?;
    let r = cumulants_from_moments(mu, d)?;
    moments_from_cumulants(&scaled_cumulants(&r, n)?, d)
}

/// Law of `S_N` by running the engine on `N` bi-free copies; exponential in
/// `N`, meant as a cross-check for small `N`.
pub fn scaled_sum_direct<S: Coefficient>(mu: &Distribution<S>, n: u64, d: usize) -> Result<Distribution<S>> {
    check_centered(mu)?;
    let s = square_root(n)?;
    let copies = vec![mu; n as usize];
    let sum = bifree_sum(&copies, d)?;
    dilate(&sum, &(S::one() / S::from_integer(s as i64)))
}

/// The covariance `C(x, y) = μ(xy)` of centered summands.
pub fn limit_covariance<S: Coefficient>(mu: &Distribution<S>) -> Result<CovarianceSpec<S>> {
    let sig = mu.signature().clone();
    let alpha = sig.alphabet();
    let rows = alpha
        .iter()
        .map(|x| alpha.iter().map(|y| mu.moment(&Word(vec![*x, *y]))).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    CovarianceSpec::new(sig, rows)
}

#[derive(Clone, Debug, PartialEq)]
pub struct CltRow<S> {
    pub word: Word,
    pub n: u64,
    pub moment: S,
    pub limit: S,
    /// `μ_{S_N}(w) − γ_C(w)`.
    pub difference: S,
    /// `|Re| + |Im|` of the difference.
    pub abs_error: BigRational,
}

/// Rate at which errors are expected to vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecayRate {
    /// `O(1/N)`: every odd cumulant of degree at least 3 vanishes.
    InverseN,
    /// `O(N^{-1/2})` in general.
    InverseSqrtN,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CltReport<S> {
    pub degree: usize,
    pub rate: DecayRate,
    pub rows: Vec<CltRow<S>>,
    labels: Vec<String>,
}

fn norm1<S: Coefficient>(v: &S) -> BigRational {
    let (re, im) = v.to_parts();
    re.abs() + im.abs()
}

/// Tabulates `μ_{S_N}` against `γ_C` with `C(x, y) = μ(xy)` for each `N`.
pub fn clt_report<S: Coefficient>(mu: &Distribution<S>, ns: &[u64], d: usize) -> Result<CltReport<S>> {
    check_centered(mu)?;
    if d < 2 {
        return Err(Error::Domain(format!("a central limit report needs degree at least 2, got {d}")));
    }
    let r = cumulants_from_moments(mu, d)?;
    let odd_vanish = r
        .values()
        .iter()
        .enumerate()
        .all(|(rank, v)| r.index().degree_of(rank) % 2 == 0 || v.is_zero());
    let rate = if odd_vanish { DecayRate::InverseN } else { DecayRate::InverseSqrtN };
    let limit = gaussian_dist(&limit_covariance(mu)?, d)?;
    let mut rows = Vec::new();
    for &n in ns {
        let sn = moments_from_cumulants(&scaled_cumulants(&r, n)?, d)?;
        for ((w, m), g) in sn.iter().zip(limit.values()) {
            let difference = m.clone() - g.clone();
            let abs_error = norm1(&difference);
            rows.push(CltRow { word: w, n, moment: m.clone(), limit: g.clone(), difference, abs_error });
        }
    }
    let labels = rows.iter().map(|row| row.word.label(mu.signature())).collect();
    Ok(CltReport { degree: d, rate, rows, labels })
}

impl<S: Coefficient> CltReport<S> {
    /// `N^p |error|` with `p = 1` or `1/2` according to the decay rate.
    pub fn scaled_error(&self, row: &CltRow<S>) -> BigRational {
        let factor = match self.rate {
            DecayRate::InverseN => row.n,
            DecayRate::InverseSqrtN => row.n.sqrt(),
        };
        row.abs_error.clone() * BigRational::from_integer(factor.into())
    }

    /// Rows whose scaled error exceeds the scaled error of the same word at
    /// the smallest sampled `N`.
    pub fn decay_violations(&self) -> Vec<&CltRow<S>> {
        let Some(n0) = self.rows.iter().map(|r| r.n).min() else { return Vec::new() };
        let base: Vec<(&Word, BigRational)> = self
            .rows
            .iter()
            .filter(|r| r.n == n0)
            .map(|r| (&r.word, self.scaled_error(r)))
            .collect();
        self.rows
            .iter()
            .filter(|r| {
                let bound = base.iter().find(|(w, _)| *w == &r.word).map(|(_, b)| b.clone());
                bound.is_some_and(|b| self.scaled_error(r) > b)
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("word,N,moment,limit,difference,abs_error,abs_error_decimal\n");
        for (row, label) in self.rows.iter().zip(&self.labels) {
            writeln!(
                out,
                "{label},{},{},{},{},{},{}",
                row.n,
                format_scalar(&row.moment),
                format_scalar(&row.limit),
                format_scalar(&row.difference),
                row.abs_error,
                rational_to_decimal(&row.abs_error, 12)
            )
            .unwrap();
        }
        out
    }

    /// True when every degree-2 row has zero error.
    pub fn second_order_exact(&self) -> bool {
        self.rows.iter().filter(|r| r.word.degree() <= 2).all(|r| r.abs_error.is_zero())
    }
}
